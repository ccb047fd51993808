#pragma once

#include "newtonsing/curve.hpp"

namespace newtonsing::detail {

// F(X,Y) with the component tangent to Y = 0 and vertex (p - p_alpha, p_alpha).
std::vector<Branch> puiseux_branches(const MultiPoly& F, int p, int p_alpha, int component);

MultiPoly duval_substitute(const MultiPoly& F, const PolyEdge& ed, const Rational& xi, int keep_j);

// intersection number of two branches of one component from their Puiseux paths
long long contact_intersection(const Branch& A, const Branch& B);

}  // namespace newtonsing::detail
