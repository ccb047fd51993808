#include "newtonsing/curve.hpp"
#include "newtonsing/errors.hpp"

#include <algorithm>
#include <set>

namespace newtonsing {

namespace {

struct Divisor {
    int axis;  // 0: {u = 0}, 1: {v = 0}
    long long m;
};

class BlowUp {
public:
    ResolutionDatum data;

    void visit(const MultiPoly& g, const std::vector<Divisor>& divs, bool force, int depth)
    {
        if (depth > 200) throw DomainError("resolution did not terminate (non-reduced input?)");
        int ord = g.order();
        if (!force && ord == 1 && divs.size() == 1) {
            Rational a = g.coeff({1, 0}), b = g.coeff({0, 1});
            bool tangent = divs[0].axis == 0 ? b == 0 : a == 0;
            if (!tangent) {
                ++data.strict_branches;
                return;
            }
        }
        data.points.push_back({ord, divs.size() <= 1});
        long long M = ord;
        const Divisor* du = nullptr;
        const Divisor* dv = nullptr;
        for (const auto& d : divs) {
            M += d.m;
            (d.axis == 0 ? du : dv) = &d;
        }

        MultiPoly gm = homogeneous_component(g, ord);
        std::vector<Rational> hc(ord + 1, Rational(0));
        for (const auto& [e, c] : gm.terms()) hc[e[1]] = c;
        UPoly h(hc);
        int inf_mult = ord - h.degree();

        std::set<Rational> finite;
        int positions = 0;
        UPoly rest = h;
        auto roots = rational_roots(h);
        for (const auto& [c, r] : roots) {
            finite.insert(c);
            rest = rest / pow(UPoly::x() - UPoly(c), r);
        }
        for (const auto& [fac, r] : squarefree_decomposition(rest)) {
            if (r > 1)
                throw UnsupportedError("repeated irrational direction " + fac.str("t") + " during blow-up");
            positions += fac.degree();
            data.strict_branches += fac.degree();
        }
        if (dv) finite.insert(Rational(0));
        positions += static_cast<int>(finite.size());
        if (inf_mult > 0 || du) ++positions;
        data.exceptional.push_back({M, 2 - positions});

        MultiPoly U = MultiPoly::variable(2, 0), V = MultiPoly::variable(2, 1);
        for (const auto& [c, r] : roots) {
            MultiPoly g1 = compose(g, {U, U * (V + MultiPoly::constant(2, c))}).divide_monomial({ord, 0});
            std::vector<Divisor> d1{{0, M}};
            if (c == 0 && dv) d1.push_back({1, dv->m});
            visit(g1, d1, false, depth + 1);
        }
        if (inf_mult > 0) {
            MultiPoly g2 = compose(g, {U * V, V}).divide_monomial({0, ord});
            std::vector<Divisor> d2{{1, M}};
            if (du) d2.push_back({0, du->m});
            visit(g2, d2, false, depth + 1);
        }
    }
};

}  // namespace

ResolutionDatum resolution_data(const MultiPoly& f)
{
    if (f.nvars() != 2) throw DomainError("resolution needs n = 2");
    if (f.is_zero() || f.constant_term() != 0) throw DomainError("f must vanish at the origin");
    detail::check_reduced(f);
    BlowUp b;
    b.visit(f, {}, true, 0);
    return b.data;
}

ResolutionDatum resolution_data(const CurveModel& model) { return resolution_data(model.f); }

}  // namespace newtonsing
