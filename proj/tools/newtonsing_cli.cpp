#include "newtonsing/errors.hpp"
#include "newtonsing/report.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace newtonsing;
using report::Json;

namespace {

struct Common {
    std::vector<std::string> inputs;
    std::string file;
    std::string vars;
    bool json = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read input file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> input_texts(const Common& c)
{
    std::vector<std::string> out = c.inputs;
    if (!c.file.empty()) {
        std::string s = read_file(c.file);
        std::istringstream is(s);
        std::string line, acc;
        bool looks_json = s.find_first_not_of(" \t\r\n") != std::string::npos && s[s.find_first_not_of(" \t\r\n")] == '{';
        if (looks_json) {
            out.push_back(s);
        } else {
            while (std::getline(is, line)) {
                auto b = line.find_first_not_of(" \t\r");
                if (b == std::string::npos || line[b] == '#') continue;
                out.push_back(line.substr(b));
            }
        }
    }
    if (out.empty()) throw ParseError("no input given (argument or --file)", 0);
    return out;
}

bool is_json_text(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    return b != std::string::npos && s[b] == '{';
}

Json parse_json_text(const std::string& s)
{
    try {
        return Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

std::vector<std::string> split_vars(const std::string& s)
{
    std::vector<std::string> v;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            v.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    v.push_back(cur);
    std::set<std::string> seen;
    for (const auto& x : v)
        if (x.empty() || !seen.insert(x).second) throw ParseError("bad --vars list '" + s + "'", 0);
    return v;
}

// x,y unless z (or x1..xn style names) shows up
std::vector<std::string> guess_vars(const std::vector<std::string>& texts)
{
    bool has_z = false;
    for (const auto& t : texts)
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] == 'z' && (i == 0 || !std::isalnum(static_cast<unsigned char>(t[i - 1])))) has_z = true;
    return has_z ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"};
}

std::vector<std::string> vars_for(const Common& c, const std::vector<std::string>& texts)
{
    return c.vars.empty() ? guess_vars(texts) : split_vars(c.vars);
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

void emit(const Common& c, const Json& j)
{
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << report::render_text(j);
}

void merge(Json& into, const Json& from)
{
    for (const auto& [k, v] : from.items()) into[k] = v;
}

Json header(const std::string& input, const std::vector<std::string>& vars)
{
    Json j;
    j["input"] = input;
    j["vars"] = join(vars);
    return j;
}

MultiPoly single_poly(const Common& c, std::vector<std::string>& vars, std::string& text)
{
    auto texts = input_texts(c);
    if (texts.size() != 1) throw ParseError("expected exactly one polynomial", 0);
    text = texts[0];
    vars = vars_for(c, texts);
    return parse_poly(text, vars);
}

MultiPoly plane_poly(const Common& c, std::vector<std::string>& vars, std::string& text)
{
    MultiPoly f = single_poly(c, vars, text);
    if (f.nvars() != 2) throw DomainError("curve commands need exactly two variables");
    return f;
}

Json mu_of_poly(const MultiPoly& f, const std::string& text, const std::vector<std::string>& vars, const NdOptions& opt)
{
    Json j = header(text, vars);
    Json warnings = Json::array();
    if (f.nvars() == 2) {
        CurveModel m = tangential_decomposition(f);
        DeltaMu dm = delta_and_mu(m);
        Json mu = report::derived(dm.mu, "mu = 2 delta - r + 1");
        mu["delta"] = dm.delta;
        mu["r"] = dm.r;
        j["mu"] = mu;
        NewtonDiagram g = newton_diagram(f);
        if (is_commode(g)) {
            NndReport r = check_nnd(f, opt);
            Json k = report::derived(kouchnirenko_mu(g).value, "Kouchnirenko");
            k["nnd"] = r.nnd;
            j["newton_number"] = k;
        }
    } else {
        NewtonDiagram g = newton_diagram(f);
        if (!is_commode(g)) throw DomainError("Kouchnirenko route needs a commode diagram");
        NndReport r = check_nnd(f, opt);
        MilnorResult mr = kouchnirenko_mu(g, r.nnd && r.exact);
        Json mu = report::derived(mr.value, mr.route);
        mu["formula"] = "sum_j (-1)^(n-j) j! Vol_j";
        mu["nnd"] = r.nnd;
        mu["nnd_exact"] = r.exact;
        j["mu"] = mu;
        if (!r.nnd || !r.supported)
            warnings.push_back("non-degeneracy not certified: value is the Newton number, a lower bound for mu");
        else if (!r.exact)
            warnings.push_back("non-degeneracy certified only numerically");
    }
    j["warnings"] = warnings;
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"newtonsing: Newton-diagram invariants of isolated hypersurface singularities.\n"
                 "Exit codes: 0 success, 1 mathematical-domain error, 2 parse or usage error."};
    app.require_subcommand(1);

    Common c;
    NdOptions nd;
    std::uint64_t seed = 1;
    int samples = 200, degree_bound = 3;

    auto common = [&](CLI::App* s, bool many = false) {
        s->add_option("input", c.inputs, many ? "polynomial(s) or component-data JSON" : "polynomial or component-data JSON");
        s->add_option("--file", c.file, "read the input from a file (one polynomial per line, or a JSON document)")
            ->check(CLI::ExistingFile);
        s->add_option("--vars", c.vars, "comma separated variable names (default x,y or x,y,z)");
        s->add_flag("--json", c.json, "emit JSON instead of text");
    };
    auto nd_flags = [&](CLI::App* s) {
        s->add_option("--numeric-tolerance", nd.numeric_tolerance, "tolerance of numeric face verdicts")
            ->default_val(1e-9);
        s->add_option("--max-exact-degree", nd.max_exact_degree,
                      "resultant degree above which 2-face checks go numeric")
            ->default_val(200);
    };

    auto* diagram = app.add_subcommand("diagram", "Newton diagram of a polynomial");
    common(diagram);
    auto* nnd = app.add_subcommand("check-nnd", "per-face Newton non-degeneracy verdicts");
    common(nnd);
    nd_flags(nnd);
    auto* mu = app.add_subcommand("mu", "Milnor number (curve route, Kouchnirenko, or component data)");
    common(mu);
    nd_flags(mu);
    auto* zeta = app.add_subcommand("zeta", "monodromy zeta function (curve or component data)");
    common(zeta);
    auto* cls = app.add_subcommand("classify-curve", "gNnd / dNnd / tNnd classification of a plane curve");
    common(cls);
    auto* inv = app.add_subcommand("curve-invariants", "all invariants of a plane curve germ");
    common(inv);
    auto* probe = app.add_subcommand("probe", "compare diagrams under sampled coordinate changes");
    common(probe, true);
    probe->add_option("--degree-bound", degree_bound, "max degree of the sampled changes")->default_val(3);
    probe->add_option("--samples", samples, "number of random changes")->default_val(200);
    probe->add_option("--seed", seed, "random seed")->default_val(1);
    auto* dir = app.add_subcommand("directional", "combine component data (mu, zeta, Yomdin points)");
    common(dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::vector<std::string> vars;
        std::string text;
        if (diagram->parsed()) {
            MultiPoly f = single_poly(c, vars, text);
            NewtonDiagram g = newton_diagram(f);
            if (c.json) {
                std::cout << report::diagram_json(g).dump(2) << "\n";
            } else {
                Json j = header(text, vars);
                j["commode"] = is_commode(g);
                j["diagram"] = report::diagram_json(g);
                emit(c, j);
            }
        } else if (nnd->parsed()) {
            MultiPoly f = single_poly(c, vars, text);
            Json j = header(text, vars);
            merge(j, report::nnd_json(check_nnd(f, nd)));
            emit(c, j);
        } else if (mu->parsed() || zeta->parsed() || dir->parsed()) {
            auto texts = input_texts(c);
            if (texts.size() != 1) throw ParseError("expected exactly one input", 0);
            if (is_json_text(texts[0]) || dir->parsed()) {
                DirectionalInput in = report::directional_from_json(parse_json_text(texts[0]));
                Json j = report::directional_json(in);
                if (zeta->parsed() && !j.contains("zeta")) throw DomainError("component data carries no zeta functions");
                if (mu->parsed() && !j.contains("mu") && !j.contains("yomdin_mu"))
                    throw DomainError("component data carries no Milnor numbers");
                emit(c, j);
            } else if (mu->parsed()) {
                text = texts[0];
                vars = vars_for(c, texts);
                emit(c, mu_of_poly(parse_poly(text, vars), text, vars, nd));
            } else {
                text = texts[0];
                vars = vars_for(c, texts);
                MultiPoly f = parse_poly(text, vars);
                if (f.nvars() != 2)
                    throw UnsupportedError("zeta of a polynomial is computed for plane curves; use component data for n >= 3");
                Json inv_j = report::curve_invariants_json(tangential_decomposition(f), vars);
                Json j = header(text, vars);
                j["zeta"] = inv_j["zeta"];
                j["zeta_mu"] = report::derived(zeta_mu_consistency(report::cyclo_from_json(inv_j["zeta"]), 2),
                                               "mu = (-1)^(n-1)(deg zeta - 1)");
                j["warnings"] = inv_j["warnings"];
                emit(c, j);
            }
        } else if (cls->parsed()) {
            MultiPoly f = plane_poly(c, vars, text);
            CurveModel m = tangential_decomposition(f);
            Json j = header(text, vars);
            j["model"] = report::curve_model_json(m, vars);
            merge(j, report::curve_class_json(classify_curve(m)));
            emit(c, j);
        } else if (inv->parsed()) {
            MultiPoly f = plane_poly(c, vars, text);
            Json j = header(text, vars);
            merge(j, report::curve_invariants_json(tangential_decomposition(f), vars));
            emit(c, j);
        } else if (probe->parsed()) {
            auto texts = input_texts(c);
            if (texts.size() > 2) throw ParseError("probe takes one or two polynomials", 0);
            vars = vars_for(c, texts);
            MultiPoly f = parse_poly(texts[0], vars);
            std::optional<MultiPoly> g;
            if (texts.size() == 2) g = parse_poly(texts[1], vars);
            Json j = header(texts.size() == 2 ? texts[0] + " ; " + texts[1] : texts[0], vars);
            j["seed"] = seed;
            j["samples"] = samples;
            j["degree_bound"] = degree_bound;
            merge(j, report::probe_json(diagram_stability_probe(f, g, degree_bound, samples, seed), vars));
            emit(c, j);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
