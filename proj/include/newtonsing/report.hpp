#pragma once

#include "newtonsing/curve.hpp"
#include "newtonsing/nondeg.hpp"
#include "newtonsing/zeta.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace newtonsing::report {

using Json = nlohmann::ordered_json;

Json exponent_json(const Exponent& e);
Json rational_json(const Rational& q);  // integer when integral, "a/b" otherwise

Json diagram_json(const NewtonDiagram& g);
NewtonDiagram diagram_from_json(const Json& j);

Json cyclo_json(const CycloProduct& z);
CycloProduct cyclo_from_json(const Json& j);

// {"value": v, "derivation": d}
Json derived(const Json& value, const std::string& derivation);

Json nnd_json(const NndReport& r);
Json probe_json(const ProbeResult& r, const std::vector<std::string>& vars);

Json curve_model_json(const CurveModel& m, const std::vector<std::string>& vars);
Json curve_class_json(const CurveClass& c);
Json resolution_json(const ResolutionDatum& d);
// every curve invariant, each with its derivation; failures land in "warnings"
Json curve_invariants_json(const CurveModel& m, const std::vector<std::string>& vars);

// {n, p, k, components:[{mu} | {zeta} | {q, mu_tc} | {special:{p_a, q_a}}]}
DirectionalInput directional_from_json(const Json& j);
Json directional_json(const DirectionalInput& in);

// Indented key: value listing of a report; numbers are printed exactly as in the JSON.
std::string render_text(const Json& j);

}  // namespace newtonsing::report
