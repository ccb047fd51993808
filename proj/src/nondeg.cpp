#include "newtonsing/nondeg.hpp"

#include "newtonsing/errors.hpp"
#include "newtonsing/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace newtonsing {

std::string to_string(NdStatus s)
{
    switch (s) {
    case NdStatus::nondegenerate: return "nondegenerate";
    case NdStatus::degenerate: return "degenerate";
    case NdStatus::numeric_nondegenerate: return "numeric-nondegenerate";
    case NdStatus::numeric_degenerate: return "numeric-degenerate";
    case NdStatus::unsupported_dimension: return "unsupported-dimension";
    }
    return "?";
}

namespace {

// Echelon basis of the integer row span.
std::vector<IVec> hermite_basis(std::vector<IVec> rows, int n)
{
    int r = 0;
    for (int col = 0; col < n; ++col) {
        for (;;) {
            int best = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 && (best < 0 || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                    best = i;
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][col] == 0) continue;
                std::int64_t q = rows[i][col] / rows[r][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                ++r;
                break;
            }
        }
        if (r == static_cast<int>(rows.size())) break;
    }
    rows.resize(r);
    return rows;
}

int pivot_col(const IVec& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string dir_str(const IVec& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

// nonzero repeated root of a univariate polynomial, as the common factor
std::optional<UPoly> repeated_nonzero_factor(const UPoly& p)
{
    UPoly q = p.strip_zero_root();
    UPoly g = gcd(q, q.derivative());
    if (g.degree() >= 1) return g;
    return std::nullopt;
}

NdVerdict edge_verdict(const MultiPoly& f, const Face& face)
{
    const auto& pts = face.lattice_points_of_support;
    int n = f.nvars();
    // endpoints are the extreme points along the edge
    Exponent a = pts.front(), b = pts.back();
    IVec d(n);
    std::int64_t g = 0;
    for (int i = 0; i < n; ++i) {
        d[i] = b[i] - a[i];
        g = gcd64(g, d[i]);
    }
    for (auto& x : d) x /= g;
    int pc = pivot_col(d);
    std::vector<Rational> c(g + 1, Rational(0));
    for (const auto& s : pts) {
        std::int64_t k = (s[pc] - a[pc]) / d[pc];
        c[k] = f.coeff(s);
    }
    UPoly phi(c);
    NdVerdict v;
    if (auto rep = repeated_nonzero_factor(phi)) {
        v.status = NdStatus::degenerate;
        v.witness = "phi(T) = " + phi.str("T") + " has the repeated factor " + rep->str("T") +
                    ", T = x^" + dir_str(d);
    }
    return v;
}

struct Split {
    UPoly factor;
};

using KPoly = std::vector<UPoly>;  // coefficients in v, low first, each reduced mod S

class Quotient {
public:
    explicit Quotient(UPoly s) : s_(std::move(s)) {}
    const UPoly& modulus() const { return s_; }
    UPoly red(const UPoly& a) const { return a % s_; }
    UPoly mul(const UPoly& a, const UPoly& b) const { return (a * b) % s_; }

    UPoly inv(const UPoly& a) const
    {
        auto [g, t] = half_extended_gcd(a, s_);
        if (g.degree() == 0) return red(t * (Rational(1) / g.coeff(0)));
        throw Split{g};
    }

    void trim(KPoly& p) const
    {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    }

    KPoly lift(const MultiPoly& h) const
    {
        KPoly out;
        for (const auto& c : h.coeffs_in(1)) out.push_back(red(c.to_upoly(0)));
        trim(out);
        return out;
    }

    KPoly rem(KPoly a, const KPoly& b) const
    {
        UPoly li = inv(b.back());
        int db = static_cast<int>(b.size()) - 1;
        trim(a);
        while (static_cast<int>(a.size()) - 1 >= db) {
            int shift = static_cast<int>(a.size()) - 1 - db;
            UPoly q = mul(a.back(), li);
            for (int i = 0; i <= db; ++i) a[i + shift] = red(a[i + shift] - q * b[i]);
            a.pop_back();
            trim(a);
        }
        return a;
    }

    KPoly gcd(KPoly a, KPoly b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            KPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.empty()) return a;
        UPoly li = inv(a.back());
        for (auto& c : a) c = mul(c, li);
        return a;
    }

private:
    UPoly s_;
};

std::string kpoly_str(const KPoly& p)
{
    std::string s;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        if (p[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p[k].str("u") + ")";
        if (k) s += "*v^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

// Common zero of h, h_u, h_v with v != 0 over some root of s.
std::optional<std::string> decide_mod(const UPoly& s, const MultiPoly& h, const MultiPoly& hu, const MultiPoly& hv)
{
    if (s.degree() < 1) return std::nullopt;
    Quotient K(s);
    try {
        KPoly g = K.gcd(K.gcd(K.lift(h), K.lift(hv)), K.lift(hu));
        if (g.empty()) return "modulus " + s.str("u") + ": h vanishes identically in v";
        while (g.size() > 1 && g.front().is_zero()) g.erase(g.begin());
        if (g.size() > 1) K.inv(g.front());  // splits if the low coefficient is a zero divisor
        if (g.size() > 1) return "modulus " + s.str("u") + ", common factor " + kpoly_str(g);
        return std::nullopt;
    } catch (const Split& sp) {
        if (auto w = decide_mod(sp.factor, h, hu, hv)) return w;
        return decide_mod(s / sp.factor, h, hu, hv);
    }
}

std::vector<Complex> complex_coeffs_in_v(const MultiPoly& h, Complex u)
{
    std::vector<Complex> out;
    for (const auto& c : h.coeffs_in(1)) {
        UPoly p = c.to_upoly(0);
        Complex s = 0;
        for (int k = p.degree(); k >= 0; --k) s = s * u + to_double(p.coeff(k));
        out.push_back(s);
    }
    return out;
}

NdVerdict numeric_decide(const UPoly& s, const MultiPoly& h, const MultiPoly& hu, const MultiPoly& hv, double tol)
{
    NdVerdict v;
    v.tolerance = tol;
    v.status = NdStatus::numeric_nondegenerate;
    auto scale = [](const std::vector<Complex>& c, Complex z) {
        double m = 0, p = 1;
        for (const auto& a : c) {
            m += std::abs(a) * p;
            p *= std::abs(z);
        }
        return std::max(m, 1.0);
    };
    for (Complex u0 : complex_roots(s)) {
        if (std::abs(u0) <= tol) continue;
        auto ch = complex_coeffs_in_v(h, u0);
        auto chu = complex_coeffs_in_v(hu, u0);
        auto chv = complex_coeffs_in_v(hv, u0);
        while (!ch.empty() && std::abs(ch.back()) <= tol * scale(ch, 1.0)) ch.pop_back();
        if (ch.size() <= 1) {
            if (ch.empty()) {
                v.status = NdStatus::numeric_degenerate;
                v.witness = "h(u0, v) vanishes identically near u0 = " + std::to_string(u0.real()) + "+" +
                            std::to_string(u0.imag()) + "i";
                return v;
            }
            continue;
        }
        for (Complex v0 : complex_roots(ch)) {
            if (std::abs(v0) <= tol) continue;
            if (std::abs(eval(chu, v0)) <= tol * scale(chu, v0) && std::abs(eval(chv, v0)) <= tol * scale(chv, v0)) {
                v.status = NdStatus::numeric_degenerate;
                v.witness = "approximate torus zero u = " + std::to_string(u0.real()) + "+" +
                            std::to_string(u0.imag()) + "i, v = " + std::to_string(v0.real()) + "+" +
                            std::to_string(v0.imag()) + "i";
                return v;
            }
        }
    }
    return v;
}

NdVerdict two_face_verdict(const MultiPoly& f, const Face& face, const NdOptions& opt)
{
    const auto& pts = face.lattice_points_of_support;
    int n = f.nvars();
    const Exponent& s0 = pts.front();
    std::vector<IVec> diffs;
    for (const auto& s : pts) {
        IVec d(n);
        for (int i = 0; i < n; ++i) d[i] = s[i] - s0[i];
        diffs.push_back(d);
    }
    auto basis = hermite_basis(diffs, n);
    if (basis.size() != 2) throw DomainError("face support is not two-dimensional");
    int c0 = pivot_col(basis[0]), c1 = pivot_col(basis[1]);

    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    std::int64_t amin = 0, bmin = 0;
    for (const auto& d : diffs) {
        std::int64_t a = d[c0] / basis[0][c0];
        std::int64_t b = (d[c1] - a * basis[0][c1]) / basis[1][c1];
        coords.emplace_back(a, b);
        amin = std::min(amin, a);
        bmin = std::min(bmin, b);
    }
    MultiPoly h(2);
    for (std::size_t k = 0; k < pts.size(); ++k)
        h.add_term({static_cast<int>(coords[k].first - amin), static_cast<int>(coords[k].second - bmin)},
                   f.coeff(pts[k]));
    h = h.divide_monomial(h.min_exponent());

    MultiPoly hu = partial_derivative(h, 0), hv = partial_derivative(h, 1);
    NdVerdict v;
    std::string where = " (face coordinates u = x^" + dir_str(basis[0]) + ", v = x^" + dir_str(basis[1]) + ")";

    for (int var = 0; var < 2; ++var) {
        if (h.degree_in(1 - var) != 0) continue;
        if (auto rep = repeated_nonzero_factor(h.to_upoly(var))) {
            v.status = NdStatus::degenerate;
            v.witness = "h has the repeated factor " + rep->str(var ? "v" : "u") + where;
        }
        return v;
    }

    UPoly R = univariate_resultant(h, hv, 1).to_upoly(0);
    if (R.is_zero()) {
        v.status = NdStatus::degenerate;
        v.witness = "h = " + h.str({"u", "v"}) + " has a repeated factor" + where;
        return v;
    }
    UPoly S = squarefree_part(R).strip_zero_root();
    if (S.degree() < 1) return v;
    if (R.degree() > opt.max_exact_degree) return numeric_decide(S, h, hu, hv, opt.numeric_tolerance);
    if (auto w = decide_mod(S.monic(), h, hu, hv)) {
        v.status = NdStatus::degenerate;
        v.witness = "h = " + h.str({"u", "v"}) + ": " + *w + where;
    }
    return v;
}

}  // namespace

NdVerdict face_nondegenerate(const MultiPoly& f, const Face& face, const NdOptions& opt)
{
    NdVerdict v;
    if (face.lattice_points_of_support.empty()) throw DomainError("face has no support points");
    if (face.dim == 0) return v;
    if (face.dim == 1) return edge_verdict(f, face);
    if (face.dim == 2 && f.nvars() == 3) return two_face_verdict(f, face, opt);
    v.status = NdStatus::unsupported_dimension;
    return v;
}

NndReport check_nnd(const MultiPoly& f, const NdOptions& opt)
{
    NndReport rep;
    rep.diagram = newton_diagram(f);
    bool all = true;
    for (auto& face : faces(rep.diagram, f)) {
        NdVerdict v;
        if (face.dim >= 2 && f.nvars() > 3)
            v.status = NdStatus::unsupported_dimension;
        else
            v = face_nondegenerate(f, face, opt);
        if (v.status == NdStatus::unsupported_dimension) rep.supported = false;
        if (!v.exact() && v.status != NdStatus::unsupported_dimension) rep.exact = false;
        if (!v.nondegenerate()) all = false;
        rep.faces.push_back({std::move(face), std::move(v)});
    }
    rep.nnd = all && rep.supported;
    return rep;
}

}  // namespace newtonsing
