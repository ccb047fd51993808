#pragma once

#include "newtonsing/poly.hpp"

#include <cstdint>
#include <vector>

namespace newtonsing {

using IVec = std::vector<std::int64_t>;

struct Facet {
    IVec normal;  // primitive, entries >= 0
    std::int64_t level = 0;
    std::vector<int> vertex_ids;

    bool compact() const;  // all normal entries positive
};

struct Face {
    int dim = 0;
    std::vector<int> vertex_ids;
    std::vector<Exponent> lattice_points_of_support;
    std::vector<int> facet_ids;  // facets containing the face
};

class NewtonDiagram {
public:
    int n = 0;
    std::vector<Exponent> vertices;  // sorted
    std::vector<Facet> facets;       // positive level, sorted by normal

    // Coordinate hyperplanes that are facets of the polyhedron (level 0). Not part of
    // the diagram proper, but needed to cut faces on the boundary.
    std::vector<Facet> boundary_facets;

    bool operator==(const NewtonDiagram& o) const { return n == o.n && vertices == o.vertices; }
    bool operator!=(const NewtonDiagram& o) const { return !(*this == o); }
    std::vector<int> compact_facet_ids() const;
};

NewtonDiagram newton_diagram(const MultiPoly& f);
NewtonDiagram diagram_of_points(int n, const std::vector<Exponent>& points);

bool is_commode(const NewtonDiagram& g);

// Compact faces of every dimension, vertices first, then by dimension.
std::vector<Face> faces(const NewtonDiagram& g, const MultiPoly& f);
MultiPoly truncation(const MultiPoly& f, const Face& face);

Rational weight_eval(const NewtonDiagram& g, const std::vector<Rational>& x);
bool diagram_geq(const NewtonDiagram& g1, const NewtonDiagram& g2);

// [Vol_0, ..., Vol_n]
std::vector<Rational> lattice_volumes(const NewtonDiagram& g);
// n! times the volume of the region on or below the diagram (exact)
Rational under_volume(const NewtonDiagram& g);

// axis is a 0-based coordinate index
std::vector<int> delta_faces(const NewtonDiagram& g, int axis);

std::vector<Exponent> under_diagram_lattice_points(const NewtonDiagram& g, int min_coord);

// Smallest N with every lattice point of degree > N strictly above the diagram,
// read off the compact facets.
long long determinacy_bound(const NewtonDiagram& g);

// Pure powers x_i^N added on every missing axis, with N past every vertex.
NewtonDiagram commode_closure(const NewtonDiagram& g);

std::int64_t dot(const IVec& a, const Exponent& e);

}  // namespace newtonsing
