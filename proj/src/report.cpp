#include "newtonsing/report.hpp"

#include "newtonsing/errors.hpp"

#include <sstream>

namespace newtonsing::report {

Json exponent_json(const Exponent& e)
{
    Json a = Json::array();
    for (int v : e) a.push_back(v);
    return a;
}

Json rational_json(const Rational& q)
{
    if (is_integer(q)) return to_ll(q);
    return q.str();
}

Json diagram_json(const NewtonDiagram& g)
{
    Json j;
    j["n"] = g.n;
    Json vs = Json::array();
    for (const auto& v : g.vertices) vs.push_back(exponent_json(v));
    j["vertices"] = vs;
    Json fs = Json::array();
    for (const auto& f : g.facets) {
        Json fj;
        fj["normal"] = f.normal;
        fj["level"] = f.level;
        fj["vertices"] = f.vertex_ids;
        fs.push_back(fj);
    }
    j["facets"] = fs;
    return j;
}

NewtonDiagram diagram_from_json(const Json& j)
{
    try {
        int n = j.at("n").get<int>();
        std::vector<Exponent> pts;
        for (const auto& v : j.at("vertices")) {
            Exponent e = v.get<Exponent>();
            if (static_cast<int>(e.size()) != n) throw DomainError("vertex dimension mismatch");
            pts.push_back(e);
        }
        NewtonDiagram g = diagram_of_points(n, pts);
        if (g.vertices.size() != pts.size()) throw DomainError("listed points are not all vertices");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what(), 0);
    }
}

Json cyclo_json(const CycloProduct& z)
{
    Json f = Json::object();
    for (const auto& [m, e] : z.factors()) f[std::to_string(m)] = e;
    Json j;
    j["factors"] = f;
    return j;
}

CycloProduct cyclo_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_object())
        throw ParseError("zeta must be {\"factors\": {...}}", 0);
    CycloProduct z;
    for (const auto& [k, v] : j["factors"].items()) {
        long long m = 0;
        try {
            std::size_t used = 0;
            m = std::stoll(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw ParseError("bad factor key '" + k + "'", 0);
        }
        if (!v.is_number_integer()) throw ParseError("factor exponent must be an integer", 0);
        z *= CycloProduct::factor(m, v.get<long long>());
    }
    return z;
}

Json derived(const Json& value, const std::string& derivation)
{
    Json j;
    j["value"] = value;
    j["derivation"] = derivation;
    return j;
}

Json nnd_json(const NndReport& r)
{
    Json j;
    j["diagram"] = diagram_json(r.diagram);
    Json fs = Json::array();
    Json warnings = Json::array();
    for (const auto& fv : r.faces) {
        Json f;
        f["dim"] = fv.face.dim;
        Json vs = Json::array();
        for (int id : fv.face.vertex_ids) vs.push_back(exponent_json(r.diagram.vertices[id]));
        f["vertices"] = vs;
        f["status"] = to_string(fv.verdict.status);
        if (fv.verdict.witness) f["witness"] = *fv.verdict.witness;
        if (fv.verdict.tolerance) {
            f["tolerance"] = *fv.verdict.tolerance;
            warnings.push_back("numeric verdict on a face of dimension " + std::to_string(fv.face.dim));
        }
        fs.push_back(f);
    }
    j["faces"] = fs;
    j["nnd"] = r.nnd;
    j["exact"] = r.exact;
    j["supported"] = r.supported;
    if (!r.supported) warnings.push_back("some faces could not be decided in this dimension");
    j["warnings"] = warnings;
    return j;
}

Json probe_json(const ProbeResult& r, const std::vector<std::string>& vars)
{
    Json j;
    j["stable_equal"] = r.stable_equal;
    j["changes_tried"] = r.changes_tried;
    j["truncation_degree"] = r.truncation_degree;
    if (r.witness) {
        j["witness"] = r.witness->str(vars);
        j["witness_origin"] = r.witness_origin;
        j["diagram_f"] = diagram_json(r.diagram_f);
        j["diagram_g"] = diagram_json(r.diagram_g);
    } else {
        j["witness"] = nullptr;
    }
    j["warnings"] = Json::array(
        {"probabilistic: diagrams compared over a finite set of coordinate changes, not a proof of stability"});
    return j;
}

namespace {

Json rationals(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

Json pair_json(const std::optional<std::pair<int, int>>& p)
{
    if (!p) return nullptr;
    return Json::array({p->first, p->second});
}

}  // namespace

Json curve_model_json(const CurveModel& m, const std::vector<std::string>& vars)
{
    Json j;
    j["p"] = m.p;
    Json cs = Json::array();
    for (const auto& c : m.components) {
        Json cj;
        cj["tangent"] = c.tangent.str(vars);
        cj["p_alpha"] = c.p_alpha;
        cj["branches"] = c.branches;
        cj["gnnd"] = c.gnnd;
        if (!c.gnnd_witness.empty()) cj["gnnd_witness"] = c.gnnd_witness;
        cj["directional_diagram"] = c.directional_diagram ? diagram_json(*c.directional_diagram) : Json(nullptr);
        cj["single_pair"] = pair_json(c.single_pair);
        cs.push_back(cj);
    }
    j["components"] = cs;
    Json bs = Json::array();
    for (const auto& b : m.branches) {
        Json bj;
        bj["component"] = b.component;
        bj["multiplicity"] = b.multiplicity;
        bj["characteristic_pairs"] = b.characteristic_pairs;
        bj["puiseux_pair"] = pair_json(b.puiseux_pair);
        bj["characteristic_exponents"] = rationals(b.characteristic_exponents);
        bj["delta"] = b.delta;
        bj["gnnd"] = b.gnnd;
        bs.push_back(bj);
    }
    j["branches"] = bs;
    j["intersections"] = m.intersections;
    return j;
}

Json curve_class_json(const CurveClass& c)
{
    Json j;
    j["gnnd_candidate"] = c.gnnd_candidate;
    j["dnnd"] = c.dnnd;
    j["tnnd"] = c.tnnd;
    j["essentially_degenerate"] = c.essentially_degenerate;
    j["witnesses"] = c.witnesses;
    return j;
}

Json resolution_json(const ResolutionDatum& d)
{
    Json j;
    Json pts = Json::array();
    for (const auto& p : d.points) pts.push_back(Json{{"multiplicity", p.multiplicity}, {"free", p.free}});
    j["points"] = pts;
    Json ex = Json::array();
    for (const auto& e : d.exceptional) ex.push_back(Json{{"m", e.m}, {"chi", e.chi}});
    j["exceptional"] = ex;
    Json st = Json::array();
    for (const auto& [m, chi] : d.strata()) st.push_back(Json{{"m", m}, {"chi", chi}});
    j["strata"] = st;
    j["strict_branches"] = d.strict_branches;
    return j;
}

Json curve_invariants_json(const CurveModel& m, const std::vector<std::string>& vars)
{
    Json j;
    Json warnings = Json::array();
    j["model"] = curve_model_json(m, vars);
    CurveClass cls = classify_curve(m);
    j["classification"] = curve_class_json(cls);

    DeltaMu dm = delta_and_mu(m);
    j["delta"] = derived(dm.delta, "sum of branch deltas plus pairwise intersection multiplicities");
    j["r"] = derived(dm.r, "number of branches");
    Json mu = derived(dm.mu, "mu = 2 delta - r + 1");
    Json routes;
    routes["delta_formula"] = dm.mu;

    ResolutionDatum res = resolution_data(m);
    CycloProduct az = acampo_zeta(res.strata());
    j["resolution"] = resolution_json(res);

    if (cls.dnnd) {
        MilnorResult dk = curve_mu_directional(m);
        routes["directional_kouchnirenko"] = dk.value;
        std::string route;
        CycloProduct z = curve_zeta(m, &route);
        routes["zeta_degree"] = zeta_mu_consistency(z, 2);
        Json zj = cyclo_json(z);
        zj["text"] = z.str();
        zj["derivation"] = route;
        j["zeta"] = zj;
        if (z != az) warnings.push_back("curve zeta and resolution zeta differ");
    } else {
        routes["zeta_degree"] = zeta_mu_consistency(az, 2);
        Json zj = cyclo_json(az);
        zj["text"] = az.str();
        zj["derivation"] = "A'Campo over the resolution strata";
        j["zeta"] = zj;
        warnings.push_back("curve is not directionally non-degenerate; directional routes skipped");
    }
    mu["routes"] = routes;
    j["mu"] = mu;

    Json azj = cyclo_json(az);
    azj["text"] = az.str();
    azj["derivation"] = "A'Campo: prod (1-z^m)^chi(S_m) over the resolution strata";
    j["acampo_zeta"] = azj;

    long long tes = tau_es(res);
    j["tau_es"] = derived(tes, "sum over infinitely near points of binom(m+1,2), minus 1, minus #free points");
    try {
        Modality mod = modality_curve(m);
        Json mj;
        mj["lattice_count"] = derived(mod.lattice_count, "binom(p-2,2) + lattice points x,y >= 2, x+y > p not above each directional diagram");
        mj["mu_minus_tau_es"] = derived(mod.mu_minus_tau_es, "mu - tau_es");
        j["modality"] = mj;
        if (mod.lattice_count != mod.mu_minus_tau_es) warnings.push_back("modality routes disagree");
    } catch (const DomainError& e) {
        j["modality"] = nullptr;
        warnings.push_back(std::string("modality: ") + e.what());
    }
    try {
        j["determinacy"] = derived(order_of_determinacy_curve(m), "max over compact facets of ceil(level / min normal entry)");
    } catch (const DomainError& e) {
        j["determinacy"] = nullptr;
        warnings.push_back(std::string("determinacy: ") + e.what());
    }
    j["warnings"] = warnings;
    return j;
}

DirectionalInput directional_from_json(const Json& j)
{
    DirectionalInput in;
    try {
        in.n = j.at("n").get<int>();
        in.p = j.at("p").get<long long>();
        const Json& cs = j.at("components");
        if (!cs.is_array()) throw ParseError("components must be a list", 0);
        in.k = j.contains("k") ? j["k"].get<int>() : static_cast<int>(cs.size());
        for (const auto& c : cs) {
            DirectionalComponent d;
            if (c.contains("mu")) d.mu = c["mu"].get<long long>();
            if (c.contains("zeta")) d.zeta = cyclo_from_json(c["zeta"]);
            if (c.contains("q") || c.contains("mu_tc"))
                d.q_mu_tc = std::make_pair(c.at("q").get<long long>(), c.at("mu_tc").get<long long>());
            if (c.contains("special")) {
                const Json& s = c["special"];
                d.zeta = special_surface_zeta(in.p, s.at("p_a").get<long long>(), s.at("q_a").get<long long>());
            }
            if (!d.mu && !d.zeta && !d.q_mu_tc) throw ParseError("component needs mu, zeta, q/mu_tc or special", 0);
            in.components.push_back(d);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad component data: ") + e.what(), 0);
    }
    if (in.n < 2 || in.p < 1) throw DomainError("need n >= 2 and p >= 1");
    return in;
}

Json directional_json(const DirectionalInput& in)
{
    Json j;
    j["n"] = in.n;
    j["p"] = in.p;
    j["k"] = in.k;
    Json warnings = Json::array();

    bool all_mu = true, all_zeta = true, all_q = true;
    for (const auto& c : in.components) {
        all_mu = all_mu && (c.mu || c.zeta);
        all_zeta = all_zeta && c.zeta.has_value();
        all_q = all_q && c.q_mu_tc.has_value();
    }
    if (all_mu && !in.components.empty())
        j["mu"] = derived(directional_mu(in), "mu = sum mu_alpha - (k-1)(p-1)^n");
    if (all_q && !in.components.empty()) {
        std::vector<std::pair<long long, long long>> pts;
        for (const auto& c : in.components) pts.push_back(*c.q_mu_tc);
        j["yomdin_mu"] = derived(yomdin_mu(in.n, in.p, pts), "mu = (p-1)^n + sum q_alpha mu_tc");
    }
    if (all_zeta && !in.components.empty()) {
        CycloProduct z = directional_zeta(in);
        Json zj = cyclo_json(z);
        zj["text"] = z.str();
        zj["derivation"] = "prod zeta_alpha / (1-z^p)^((k-1)(n-chi)), chi = ((1-p)^n-1)/p + n";
        j["zeta"] = zj;
        j["zeta_mu"] = derived(zeta_mu_consistency(z, in.n), "mu = (-1)^(n-1)(deg zeta - 1)");
    }
    if (!j.contains("mu") && !j.contains("yomdin_mu") && !j.contains("zeta"))
        warnings.push_back("components mix data kinds; nothing to combine");
    j["warnings"] = warnings;
    return j;
}

namespace {

bool is_cyclo(const Json& j) { return j.is_object() && j.contains("factors") && j["factors"].is_object(); }

void render(std::ostringstream& os, const std::string& key, const Json& j, int indent)
{
    std::string pad(indent * 2, ' ');
    if (j.is_object() && j.contains("value") && j.contains("derivation") && !j["value"].is_structured()) {
        os << pad << key << ": " << j["value"].dump() << "  [" << j["derivation"].get<std::string>() << "]\n";
        for (const auto& [k, v] : j.items())
            if (k != "value" && k != "derivation") render(os, k, v, indent + 1);
        return;
    }
    if (is_cyclo(j)) {
        os << pad << key << ": " << (j.contains("text") ? j["text"].get<std::string>() : j["factors"].dump());
        if (j.contains("derivation")) os << "  [" << j["derivation"].get<std::string>() << "]";
        os << "\n";
        return;
    }
    if (j.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, v] : j.items()) render(os, k, v, indent + 1);
        return;
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j) flat = flat && !e.is_object();
        if (flat) {
            std::string s = j.dump();
            if (s.size() <= 100 || j.empty()) {
                os << pad << key << ": " << s << "\n";
                return;
            }
        }
        os << pad << key << ":\n";
        int i = 0;
        for (const auto& e : j) render(os, "[" + std::to_string(i++) + "]", e, indent + 1);
        return;
    }
    os << pad << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& j)
{
    std::ostringstream os;
    if (!j.is_object()) return j.dump() + "\n";
    for (const auto& [k, v] : j.items()) {
        if (k == "warnings" && v.is_array()) {
            for (const auto& w : v) os << "warning: " << w.get<std::string>() << "\n";
            continue;
        }
        render(os, k, v, 0);
    }
    return os.str();
}

}  // namespace newtonsing::report
