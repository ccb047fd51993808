#pragma once

#include "newtonsing/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace newtonsing {

// A tangent line. Rational: a*x + b*y = 0. Irrational: x - t*y = 0 for the
// root number conjugate of minpoly (roots are not ordered, only counted).
struct Tangent {
    bool rational = true;
    Rational a = 0, b = 1;
    UPoly minpoly;
    int conjugate = 0;

    std::string str(const std::vector<std::string>& vars = {"x", "y"}) const;
};

struct TangentDirection {
    Tangent tangent;  // for irrational factors: stands for all deg(minpoly) conjugates
    int multiplicity = 0;
    int count() const { return tangent.rational ? 1 : tangent.minpoly.degree(); }
};

std::vector<TangentDirection> tangent_directions(const MultiPoly& f);

// One step of the rational Newton-Puiseux tree along a branch.
struct PuiseuxStep {
    int node = 0;         // node id in the tree
    int edge = 0;         // edge index at that node; -1 for the exact leaf
    int root = 0;         // root id on that edge
    int m = 0, q = 1;     // edge slope m/q; q = 1 and m = 0 for the exact leaf
    Rational W = 0, E = 1;  // X-exponent of the node term and 1/ramification at the node
    Rational slope() const { return Rational(m) / Rational(q); }
    Rational contact() const { return W + slope() * E; }
};

struct Branch {
    int component = 0;
    int multiplicity = 1;
    int characteristic_pairs = 0;
    std::optional<std::pair<int, int>> puiseux_pair;  // present iff exactly one pair
    std::vector<Rational> characteristic_exponents;  // in the component's X
    long long delta = 0;
    bool gnnd = true;
    bool exact_leaf = false;  // coincides with Y = 0 after the last substitution
    std::vector<PuiseuxStep> path;

    bool smooth() const { return multiplicity == 1; }
};

struct TangentialComponent {
    Tangent tangent;
    int p_alpha = 0;
    std::vector<int> branches;
    bool gnnd = true;
    std::string gnnd_witness;  // why the component test failed
    std::optional<NewtonDiagram> directional_diagram;
    std::optional<std::pair<int, int>> single_pair;  // (p_a, q_a) when one singular one-pair branch
};

struct CurveModel {
    MultiPoly f;
    int p = 0;
    std::vector<TangentialComponent> components;
    std::vector<Branch> branches;
    std::vector<std::vector<long long>> intersections;  // symmetric, zero diagonal
};

CurveModel tangential_decomposition(const MultiPoly& f);

// order of Res_y after a seeded generic linear change
long long intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed = 1);

struct DeltaMu {
    long long delta = 0, r = 0, mu = 0;
};
DeltaMu delta_and_mu(const CurveModel& model);

struct CurveClass {
    bool gnnd_candidate = false, dnnd = false, tnnd = false, essentially_degenerate = false;
    std::vector<std::string> witnesses;
};
CurveClass classify_curve(const CurveModel& model);
CurveClass classify_curve(const MultiPoly& f);

std::vector<NewtonDiagram> directional_approximation_diagrams(const CurveModel& model);

std::vector<int> multiplicity_sequence(int p, int q);

struct InfinitelyNearPoint {
    int multiplicity = 0;
    bool free = true;
};
struct ExceptionalCurve {
    long long m = 0;
    long long chi = 0;
};
struct ResolutionDatum {
    std::vector<InfinitelyNearPoint> points;
    std::vector<ExceptionalCurve> exceptional;
    long long strict_branches = 0;
    // chi summed over exceptional curves of equal multiplicity
    std::vector<std::pair<long long, long long>> strata() const;
};
ResolutionDatum resolution_data(const CurveModel& model);
ResolutionDatum resolution_data(const MultiPoly& f);

long long tau_es(const ResolutionDatum& data);

struct Modality {
    long long lattice_count = 0;     // lattice points over the directional diagrams
    long long mu_minus_tau_es = 0;
};
Modality modality_curve(const CurveModel& model);

long long order_of_determinacy_curve(const CurveModel& model);

namespace detail {

struct PolyEdge {
    int i_top = 0, j_top = 0, i_bot = 0, j_bot = 0;
    int m = 0, q = 1;
    UPoly phi;  // phi(T) = sum_k a(i_bot - k m, j_bot + k q) T^k
};

// Lower Newton polygon of F(X,Y) from the vertex at height r (X-exponent i_top) down;
// bottom is the lowest Y-order.
std::vector<PolyEdge> polygon_below(const MultiPoly& F, int i_top, int r, int& bottom_j, int& bottom_i);

// F in coordinates (X,Y) with the rational tangent as Y = 0.
MultiPoly align_tangent(const MultiPoly& f, const Tangent& t);

void check_reduced(const MultiPoly& f);

}  // namespace detail

}  // namespace newtonsing
