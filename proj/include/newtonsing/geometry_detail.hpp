#pragma once

#include "newtonsing/diagram.hpp"

#include <cstdint>
#include <vector>

namespace newtonsing::detail {

std::int64_t det_int(std::vector<std::vector<std::int64_t>> m);
IVec normal_of(const std::vector<IVec>& dirs, int n);
int rank_of(const std::vector<IVec>& rows, int n);
int affine_rank(const std::vector<Exponent>& pts);

// Compact face as a vertex set; all_facet_ids index facets then boundary_facets.
struct FaceSet {
    int dim = 0;
    std::vector<int> vertex_ids;
    std::vector<int> all_facet_ids;
};
std::vector<FaceSet> face_sets(const NewtonDiagram& g);

}  // namespace newtonsing::detail
