#pragma once

#include "newtonsing/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newtonsing {

enum class NdStatus {
    nondegenerate,
    degenerate,
    numeric_nondegenerate,
    numeric_degenerate,
    unsupported_dimension,
};

std::string to_string(NdStatus s);

struct NdOptions {
    double numeric_tolerance = 1e-9;
    int max_exact_degree = 200;  // resultant degree above which 2-faces go numeric
};

struct NdVerdict {
    NdStatus status = NdStatus::nondegenerate;
    std::optional<std::string> witness;
    std::optional<double> tolerance;  // set for numeric statuses

    bool exact() const { return status == NdStatus::nondegenerate || status == NdStatus::degenerate; }
    bool nondegenerate() const
    {
        return status == NdStatus::nondegenerate || status == NdStatus::numeric_nondegenerate;
    }
};

NdVerdict face_nondegenerate(const MultiPoly& f, const Face& face, const NdOptions& opt = {});

struct FaceVerdict {
    Face face;
    NdVerdict verdict;
};

struct NndReport {
    NewtonDiagram diagram;
    std::vector<FaceVerdict> faces;
    bool nnd = false;          // every face nondegenerate (numeric ones included)
    bool exact = true;         // no numeric verdicts
    bool supported = true;     // false when some face could not be decided
};

NndReport check_nnd(const MultiPoly& f, const NdOptions& opt = {});

struct ProbeResult {
    bool stable_equal = true;
    std::optional<CoordinateChange> witness;
    std::string witness_origin;  // "sweep" or "sample <i>"
    NewtonDiagram diagram_f, diagram_g;  // after the witness change, when one was found
    int changes_tried = 0;
    int truncation_degree = 0;
};

// g absent: compares newton_diagram(phi*f) against newton_diagram(f).
ProbeResult diagram_stability_probe(const MultiPoly& f, const std::optional<MultiPoly>& g, int degree_bound,
                                    int samples, std::uint64_t seed);

}  // namespace newtonsing
