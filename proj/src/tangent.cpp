#include "newtonsing/curve.hpp"
#include "newtonsing/errors.hpp"

#include <algorithm>
#include <random>

namespace newtonsing {

std::string Tangent::str(const std::vector<std::string>& vars) const
{
    if (rational) {
        MultiPoly l = MultiPoly::variable(2, 0) * a + MultiPoly::variable(2, 1) * b;
        return l.str(vars) + " = 0";
    }
    return vars[0] + " - t*" + vars[1] + " = 0, t root #" + std::to_string(conjugate) + " of " + minpoly.str("t");
}

std::vector<TangentDirection> tangent_directions(const MultiPoly& f)
{
    if (f.nvars() != 2) throw DomainError("tangent directions need n = 2");
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (f.constant_term() != 0) throw DomainError("f(0) != 0");
    int p = f.order();
    MultiPoly fp = homogeneous_component(f, p);
    std::vector<Rational> c(p + 1, Rational(0));
    for (const auto& [e, v] : fp.terms()) c[e[0]] = v;
    UPoly h(c);

    std::vector<TangentDirection> out;
    UPoly rest = h;
    for (const auto& [t, r] : rational_roots(h)) {
        TangentDirection d;
        d.tangent.a = 1;
        d.tangent.b = -t;
        d.multiplicity = r;
        out.push_back(d);
        rest = rest / pow(UPoly::x() - UPoly(t), r);
    }
    if (p - h.degree() > 0) {
        TangentDirection d;
        d.tangent.a = 0;
        d.tangent.b = 1;
        d.multiplicity = p - h.degree();
        out.push_back(d);
    }
    for (const auto& [fac, r] : squarefree_decomposition(rest)) {
        TangentDirection d;
        d.tangent.rational = false;
        d.tangent.minpoly = fac.monic();
        d.multiplicity = r;
        out.push_back(d);
    }
    return out;
}

namespace detail {

MultiPoly align_tangent(const MultiPoly& f, const Tangent& t)
{
    if (!t.rational) throw UnsupportedError("cannot align an irrational tangent over Q");
    // rows: X = M(x,y), Y = L(x,y)
    Rational m0 = 1, m1 = 0;
    if (t.b == 0) {
        m0 = 0;
        m1 = 1;
    }
    Rational det = m0 * t.b - m1 * t.a;
    CoordinateChange phi = CoordinateChange::identity(2, std::max(f.total_degree(), 1));
    phi.linear(0, 0) = t.b / det;
    phi.linear(0, 1) = -m1 / det;
    phi.linear(1, 0) = -t.a / det;
    phi.linear(1, 1) = m0 / det;
    return apply_change(f, phi);
}

void check_reduced(const MultiPoly& f)
{
    if (f.degree_in(1) <= 0) {
        if (f.order_in(0) >= 2) throw DomainError("non-reduced curve (non-isolated singularity)");
        return;
    }
    MultiPoly r = univariate_resultant(f, partial_derivative(f, 1), 1);
    if (r.is_zero()) throw DomainError("non-reduced curve (non-isolated singularity)");
    UPoly content;
    for (const auto& c : f.coeffs_in(1)) content = gcd(content, c.to_upoly(0));
    if (content.low_order() >= 2) throw DomainError("non-reduced curve (non-isolated singularity)");
}

}  // namespace detail

long long intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed)
{
    if (f.nvars() != 2 || g.nvars() != 2) throw DomainError("intersection multiplicity needs n = 2");
    if (f.is_zero() || g.is_zero()) throw DomainError("zero polynomial");
    if (f.constant_term() != 0 || g.constant_term() != 0) return 0;

    auto good = [](const MultiPoly& a) {
        int p = a.order();
        Exponent yp{0, p};
        if (a.coeff(yp) == 0) return false;
        auto cs = a.coeffs_in(1);
        return cs.back().constant_term() != 0;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        MultiPoly F = f, G = g;
        if (attempt > 0) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(attempt)};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<int> d(-3, 3);
            CoordinateChange phi = CoordinateChange::identity(2, std::max(f.total_degree(), g.total_degree()));
            do {
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) phi.linear(i, j) = d(rng);
            } while (phi.linear(0, 0) * phi.linear(1, 1) - phi.linear(0, 1) * phi.linear(1, 0) == 0);
            F = apply_change(f, phi);
            G = apply_change(g, phi);
        }
        if (!good(F) || !good(G)) continue;
        UPoly f0 = F.coeffs_in(0).front().to_upoly(1);
        UPoly g0 = G.coeffs_in(0).front().to_upoly(1);
        if (gcd(f0, g0).strip_zero_root().degree() != 0) continue;
        MultiPoly R = univariate_resultant(F, G, 1);
        if (R.is_zero()) throw DomainError("common component");
        return R.order();
    }
    throw DomainError("no generic direction found");
}

}  // namespace newtonsing
