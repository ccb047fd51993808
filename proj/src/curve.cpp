#include "newtonsing/curve.hpp"
#include "newtonsing/errors.hpp"
#include "newtonsing/puiseux_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace newtonsing {

namespace {

struct ComponentTest {
    bool gnnd = true;
    std::string witness;
    std::optional<NewtonDiagram> diagram;
};

NewtonDiagram smooth_directional(int p)
{
    if (p == 1) return diagram_of_points(2, {{0, 1}});
    return diagram_of_points(2, {{0, p}, {p - 1, 1}});
}

// Push degenerate integral-slope edges away by Y -> Y + xi X^m until none is left.
ComponentTest component_test(MultiPoly G, int p, int p_alpha)
{
    ComponentTest res;
    for (int iter = 0; iter < 64; ++iter) {
        int bj = 0, bi = 0;
        auto edges = detail::polygon_below(G, p - p_alpha, p_alpha, bj, bi);
        const detail::PolyEdge* bad = nullptr;
        UPoly rep;
        for (const auto& ed : edges) {
            rep = gcd(ed.phi, ed.phi.derivative());
            if (rep.degree() >= 1) {
                bad = &ed;
                break;
            }
        }
        if (!bad) {
            std::vector<Exponent> pts{{0, p}};
            pts.push_back({p - p_alpha, p_alpha});
            for (const auto& ed : edges) pts.push_back({ed.i_bot, ed.j_bot});
            res.diagram = diagram_of_points(2, pts);
            return res;
        }
        std::string slope = std::to_string(bad->m) + (bad->q > 1 ? "/" + std::to_string(bad->q) : "");
        if (bad->q != 1) {
            res.gnnd = false;
            res.witness = "edge of slope " + slope + " has a repeated root and non-integral slope";
            return res;
        }
        UPoly rad = squarefree_part(rep);
        if (rad.degree() != 1) {
            res.gnnd = false;
            res.witness = "edge of slope " + slope + " has " + std::to_string(rad.degree()) + " distinct repeated roots";
            return res;
        }
        Rational xi = -rad.coeff(0) / rad.coeff(1);
        MultiPoly X = MultiPoly::variable(2, 0), Y = MultiPoly::variable(2, 1);
        G = compose(G, {X, Y + MultiPoly::monomial({bad->m, 0}, xi)});
    }
    res.gnnd = false;
    res.witness = "no non-degenerate coordinates found within the shift budget";
    return res;
}

long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace

CurveModel tangential_decomposition(const MultiPoly& f)
{
    if (f.nvars() != 2) throw DomainError("curve analysis needs n = 2");
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (f.constant_term() != 0) throw DomainError("f(0) != 0");
    detail::check_reduced(f);

    CurveModel model;
    model.f = f;
    model.p = f.order();
    for (const auto& dir : tangent_directions(f)) {
        if (dir.tangent.rational) {
            TangentialComponent comp;
            comp.tangent = dir.tangent;
            comp.p_alpha = dir.multiplicity;
            int ci = static_cast<int>(model.components.size());
            MultiPoly F = detail::align_tangent(f, dir.tangent);
            for (auto& b : detail::puiseux_branches(F, model.p, comp.p_alpha, ci)) {
                comp.branches.push_back(static_cast<int>(model.branches.size()));
                model.branches.push_back(std::move(b));
            }
            auto t = component_test(F, model.p, comp.p_alpha);
            comp.gnnd = t.gnnd;
            comp.gnnd_witness = t.witness;
            comp.directional_diagram = t.diagram;
            if (comp.branches.size() == 1) {
                const auto& b = model.branches[comp.branches[0]];
                if (b.puiseux_pair) comp.single_pair = b.puiseux_pair;
            }
            model.components.push_back(std::move(comp));
            continue;
        }
        if (dir.multiplicity > 1)
            throw UnsupportedError("repeated irrational tangent " + dir.tangent.minpoly.str("t") +
                                   " (needs an algebraic extension)");
        for (int c = 0; c < dir.count(); ++c) {
            TangentialComponent comp;
            comp.tangent = dir.tangent;
            comp.tangent.conjugate = c;
            comp.p_alpha = 1;
            comp.directional_diagram = smooth_directional(model.p);
            Branch b;
            b.component = static_cast<int>(model.components.size());
            comp.branches.push_back(static_cast<int>(model.branches.size()));
            model.branches.push_back(b);
            model.components.push_back(std::move(comp));
        }
    }

    std::size_t r = model.branches.size();
    model.intersections.assign(r, std::vector<long long>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            const auto& A = model.branches[a];
            const auto& B = model.branches[b];
            long long I = A.component == B.component
                              ? detail::contact_intersection(A, B)
                              : static_cast<long long>(A.multiplicity) * B.multiplicity;
            model.intersections[a][b] = model.intersections[b][a] = I;
        }
    return model;
}

DeltaMu delta_and_mu(const CurveModel& model)
{
    DeltaMu d;
    d.r = static_cast<long long>(model.branches.size());
    for (std::size_t a = 0; a < model.branches.size(); ++a) {
        d.delta += model.branches[a].delta;
        for (std::size_t b = a + 1; b < model.branches.size(); ++b) d.delta += model.intersections[a][b];
    }
    d.mu = 2 * d.delta - d.r + 1;
    return d;
}

CurveClass classify_curve(const CurveModel& model)
{
    CurveClass c;
    bool branches_ok = true;
    for (std::size_t i = 0; i < model.branches.size(); ++i) {
        const auto& b = model.branches[i];
        if (!b.gnnd) {
            branches_ok = false;
            c.witnesses.push_back("branch " + std::to_string(i) + " has " + std::to_string(b.characteristic_pairs) +
                                  " Puiseux pairs (not gNnd)");
        }
    }
    bool pairs_ok = true;
    for (std::size_t a = 0; a < model.branches.size(); ++a)
        for (std::size_t b = a + 1; b < model.branches.size(); ++b) {
            const auto& A = model.branches[a];
            const auto& B = model.branches[b];
            if (!A.puiseux_pair || A.puiseux_pair != B.puiseux_pair) continue;
            auto [pp, qq] = *A.puiseux_pair;
            long long I = model.intersections[a][b];
            if (I > static_cast<long long>(pp) * qq) {
                pairs_ok = false;
                c.witnesses.push_back("equal Puiseux pairs (" + std::to_string(pp) + "," + std::to_string(qq) +
                                      "), intersection " + std::to_string(I) + " > " + std::to_string(pp * qq));
            }
        }
    c.tnnd = branches_ok && pairs_ok;
    c.essentially_degenerate = !c.tnnd;

    c.dnnd = true;
    int singular_components = 0;
    for (std::size_t i = 0; i < model.components.size(); ++i) {
        const auto& comp = model.components[i];
        if (comp.p_alpha > 1) ++singular_components;
        if (!comp.gnnd) {
            c.dnnd = false;
            c.witnesses.push_back("component " + std::to_string(i) + " (" + comp.tangent.str() +
                                  ") is not gNnd: " + comp.gnnd_witness);
        }
    }
    c.gnnd_candidate = singular_components <= 2 && c.dnnd;
    if (singular_components > 2)
        c.witnesses.push_back(std::to_string(singular_components) + " tangential components have p_alpha > 1");
    return c;
}

CurveClass classify_curve(const MultiPoly& f) { return classify_curve(tangential_decomposition(f)); }

std::vector<NewtonDiagram> directional_approximation_diagrams(const CurveModel& model)
{
    std::vector<NewtonDiagram> out;
    for (const auto& comp : model.components) {
        if (!comp.gnnd || !comp.directional_diagram)
            throw DomainError("component " + comp.tangent.str() + " is not gNnd: " + comp.gnnd_witness);
        out.push_back(*comp.directional_diagram);
    }
    return out;
}

std::vector<int> multiplicity_sequence(int p, int q)
{
    if (p < 1 || q <= p) throw DomainError("need q > p >= 1");
    if (std::gcd(p, q) != 1) throw DomainError("Puiseux pair must be coprime");
    if (p == 1) return {1};
    std::vector<int> seq;
    int a = q, b = p;
    while (a > 0 && b > 0) {
        seq.push_back(std::min(a, b));
        if (a >= b)
            a -= b;
        else
            b -= a;
    }
    return seq;
}

std::vector<std::pair<long long, long long>> ResolutionDatum::strata() const
{
    std::map<long long, long long> acc;
    for (const auto& e : exceptional) acc[e.m] += e.chi;
    return {acc.begin(), acc.end()};
}

long long tau_es(const ResolutionDatum& data)
{
    long long s = -1;
    for (const auto& pt : data.points) {
        s += binom2(pt.multiplicity + 1);
        if (pt.free) --s;
    }
    return s;
}

Modality modality_curve(const CurveModel& model)
{
    auto diagrams = directional_approximation_diagrams(model);
    for (const auto& b : model.branches)
        if (b.characteristic_pairs > 1) throw DomainError("modality needs one-pair branches");
    Modality md;
    long long p = model.p;
    md.lattice_count = binom2(p - 2);
    for (const auto& g : diagrams)
        for (const auto& pt : under_diagram_lattice_points(g, 2))
            if (pt[0] + pt[1] > p) ++md.lattice_count;
    md.mu_minus_tau_es = delta_and_mu(model).mu - tau_es(resolution_data(model));
    return md;
}

long long order_of_determinacy_curve(const CurveModel& model)
{
    long long best = 0;
    for (const auto& g : directional_approximation_diagrams(model)) best = std::max(best, determinacy_bound(g));
    return best;
}

}  // namespace newtonsing
