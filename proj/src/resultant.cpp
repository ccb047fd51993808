#include "newtonsing/errors.hpp"
#include "newtonsing/poly.hpp"

#include <set>

namespace newtonsing {

namespace {

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    int n = a.nvars();
    MultiPoly q(n), r = a;
    const auto& [lb_e, lb_c] = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& [le, lc] = *r.terms().begin();
        Exponent d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = le[i] - lb_e[i];
            if (d[i] < 0) throw DomainError("inexact polynomial division");
        }
        MultiPoly t = MultiPoly::monomial(d, lc / lb_c);
        q += t;
        r -= t * b;
    }
    return q;
}

MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m, int n)
{
    int N = static_cast<int>(m.size());
    if (N == 0) return MultiPoly::constant(n, 1);
    bool neg = false;
    MultiPoly prev = MultiPoly::constant(n, 1);
    for (int k = 0; k < N - 1; ++k) {
        if (m[k][k].is_zero()) {
            int r = k + 1;
            while (r < N && m[r][k].is_zero()) ++r;
            if (r == N) return MultiPoly(n);
            std::swap(m[k], m[r]);
            neg = !neg;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(v, prev);
            }
        prev = m[k][k];
    }
    return neg ? -m[N - 1][N - 1] : m[N - 1][N - 1];
}

std::vector<std::vector<MultiPoly>> sylvester(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, int n)
{
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    int N = da + db;
    std::vector<std::vector<MultiPoly>> m(N, std::vector<MultiPoly>(N, MultiPoly(n)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[r][r + k] = a[da - k];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[db + r][r + k] = b[db - k];
    return m;
}

// both polynomials involve at most the variables i and j
MultiPoly resultant_bivariate(const MultiPoly& f, const MultiPoly& g, int i, int j)
{
    int n = f.nvars();
    auto split = [&](const MultiPoly& p) {
        std::vector<UPoly> out;
        for (const auto& c : p.coeffs_in(i)) out.push_back(j >= 0 ? c.to_upoly(j) : UPoly(c.constant_term()));
        return out;
    };
    std::vector<UPoly> a = split(f), b = split(g);
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    auto at = [](const std::vector<UPoly>& p, const Rational& u) {
        std::vector<Rational> c;
        for (const auto& q : p) c.push_back(q.eval(u));
        return UPoly(c);
    };
    if (j < 0) return MultiPoly::constant(n, resultant(at(a, 0), at(b, 0)));
    int degf = 0, degg = 0;
    for (const auto& q : a) degf = std::max(degf, q.degree());
    for (const auto& q : b) degg = std::max(degg, q.degree());
    int bound = da * degg + db * degf;
    std::vector<Rational> xs, ys;
    long k = 0;
    while (static_cast<int>(xs.size()) < bound + 1) {
        Rational u = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
        ++k;
        if (a.back().eval(u) == 0 || b.back().eval(u) == 0) continue;
        xs.push_back(u);
        ys.push_back(resultant(at(a, u), at(b, u)));
    }
    return MultiPoly::from_upoly(interpolate(xs, ys), n, j);
}

}  // namespace

MultiPoly univariate_resultant(const MultiPoly& f, const MultiPoly& g, int i)
{
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    if (f.nvars() != g.nvars()) throw DomainError("dimension mismatch");
    int n = f.nvars();
    if (i < 0 || i >= n) throw DomainError("variable index out of range");
    if (f.degree_in(i) <= 0 && g.degree_in(i) <= 0) throw DomainError("both inputs are constant in the eliminated variable");

    std::set<int> others;
    for (const auto* p : {&f, &g})
        for (const auto& [e, c] : p->terms())
            for (int k = 0; k < n; ++k)
                if (k != i && e[k] > 0) others.insert(k);
    if (others.size() <= 1) return resultant_bivariate(f, g, i, others.empty() ? -1 : *others.begin());
    return bareiss_det(sylvester(f.coeffs_in(i), g.coeffs_in(i), n), n);
}

}  // namespace newtonsing
