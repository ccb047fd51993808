#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonsing/curve.hpp"
#include "newtonsing/errors.hpp"
#include "oracles.hpp"

using namespace newtonsing;

static const std::vector<std::string> XY{"x", "y"};
static MultiPoly P(const std::string& s) { return parse_poly(s, XY); }

static const char* CUSPS2 = "(x^2-y^3)*(y^2-x^3)";
static const char* CUSPS3 = "(x^2-y^3)*(y^2-x^3)*((x-y)^2-(x+y)^3)";

TEST_CASE("tangent directions")
{
    auto t = tangent_directions(P("x^2*y^2+x^5"));
    REQUIRE(t.size() == 2);
    CHECK(t[0].multiplicity == 2);
    CHECK(t[1].multiplicity == 2);

    auto c = tangent_directions(P("x^2+y^3"));
    REQUIRE(c.size() == 1);
    CHECK(c[0].multiplicity == 2);
    CHECK(c[0].tangent.str() == "x = 0");

    CHECK(tangent_directions(P("x*(x+y)*(x-y)")).size() == 3);

    auto irr = tangent_directions(P("x^2-2*y^2+x^5"));
    REQUIRE(irr.size() == 1);
    CHECK_FALSE(irr[0].tangent.rational);
    CHECK(irr[0].count() == 2);
}

TEST_CASE("tangential decomposition")
{
    CurveModel m = tangential_decomposition(P(CUSPS2));
    CHECK(m.p == 4);
    REQUIRE(m.components.size() == 2);
    REQUIRE(m.branches.size() == 2);
    for (const auto& b : m.branches) CHECK(b.puiseux_pair == std::make_pair(2, 3));
    CHECK(m.intersections[0][1] == 4);

    CurveModel t = tangential_decomposition(P(CUSPS3));
    CHECK(t.components.size() == 3);
    for (const auto& b : t.branches) CHECK(b.puiseux_pair == std::make_pair(2, 3));

    CurveModel node = tangential_decomposition(P("x*y"));
    CHECK(node.components.size() == 2);
    CHECK(node.intersections[0][1] == 1);
}

TEST_CASE("non-reduced input is rejected")
{
    CHECK_THROWS_AS(tangential_decomposition(P("(x^2-y^3)^2")), DomainError);
    CHECK_THROWS_AS(tangential_decomposition(P("x^2")), DomainError);
}

TEST_CASE("intersection multiplicity by resultant order")
{
    CHECK(intersection_multiplicity(P("y"), P("x^2-y^3")) == 2);
    CHECK(intersection_multiplicity(P("x"), P("y")) == 1);
    CHECK(intersection_multiplicity(P("x^2-y^3"), P("x^2-y^3+x^3")) == 9);
    CHECK_THROWS_AS(intersection_multiplicity(P("x*y"), P("x*(x+y)")), DomainError);
}

TEST_CASE("Puiseux contacts match the resultant oracle on pairs of branches")
{
    std::vector<std::pair<const char*, const char*>> pairs{
        {"x^2-y^3", "y^2-x^3"},
        {"x^2-y^3", "x^2-y^3+x^3"},
        {"y-x^2", "y-x^2-x^3"},
        {"y^2-x^3", "y^2-x^3-x^4*y"},
        {"x^3-y^5", "x^3-2*y^5"},
        {"y^2-x^3", "y-x^2"},
        {"(y^2-x^3)^2-x^5*y", "y^2-x^3"},
    };
    for (auto [a, b] : pairs) {
        MultiPoly fa = P(a), fb = P(b);
        CurveModel m = tangential_decomposition(fa * fb);
        REQUIRE(m.branches.size() == 2);
        CHECK(m.intersections[0][1] == intersection_multiplicity(fa, fb));
    }
}

TEST_CASE("delta and mu")
{
    auto dm = [](const char* s) { return delta_and_mu(tangential_decomposition(P(s))); };
    DeltaMu c = dm("x^2-y^3");
    CHECK(c.delta == 1);
    CHECK(c.r == 1);
    CHECK(c.mu == 2);
    DeltaMu two = dm(CUSPS2);
    CHECK(two.delta == 6);
    CHECK(two.r == 2);
    CHECK(two.mu == 11);
    DeltaMu node = dm("x*y");
    CHECK(node.delta == 1);
    CHECK(node.r == 2);
    CHECK(node.mu == 1);
}

TEST_CASE("delta-formula mu agrees with the Milnor-algebra oracle")
{
    for (const auto* s : {"x^2-y^3", CUSPS2, CUSPS3, "(x^2-y^3)*(x^2-y^3+x^3)", "(x^2+y^3)^2+x^2*y^4",
                          "(y^2-x^3)^2-x^5*y", "(y-x^2)*(y-x^2-x^3)", "(x^2-y^3)*y", "x^3+y^7", "x^2-2*y^2+x^5"}) {
        MultiPoly f = P(s);
        CAPTURE(s);
        CHECK(delta_and_mu(tangential_decomposition(f)).mu == *oracle::milnor_number(f));
    }
}

TEST_CASE("classification fixtures")
{
    CurveClass three = classify_curve(P(CUSPS3));
    CHECK_FALSE(three.gnnd_candidate);
    CHECK(three.dnnd);
    CHECK(three.tnnd);

    CurveClass eq = classify_curve(P("(x^2-y^3)*(x^2-y^3+x^3)"));
    CHECK_FALSE(eq.tnnd);
    CHECK(eq.essentially_degenerate);
    REQUIRE_FALSE(eq.witnesses.empty());
    CHECK(eq.witnesses[0] == "equal Puiseux pairs (2,3), intersection 9 > 6");

    CurveModel m = tangential_decomposition(P("(x^2+y^3)^2+x^2*y^4"));
    CurveClass d = classify_curve(m);
    CHECK_FALSE(d.tnnd);
    CHECK_FALSE(d.gnnd_candidate);
    CHECK(m.components.size() == 1);
    CHECK_FALSE(m.components[0].gnnd);
    CHECK(delta_and_mu(m).mu == 17);
    // over C this germ splits into two conjugate cusps
    CHECK(m.branches.size() == 2);
    CHECK(m.intersections[0][1] == 7);

    CurveClass cusp = classify_curve(P("x^2-y^3"));
    CHECK(cusp.gnnd_candidate);
    CHECK(cusp.dnnd);
    CHECK(cusp.tnnd);
}

TEST_CASE("two-pair branch")
{
    CurveModel m = tangential_decomposition(P("(y^2-x^3)^2-x^5*y"));
    REQUIRE(m.branches.size() == 1);
    CHECK(m.branches[0].characteristic_pairs == 2);
    CHECK_FALSE(m.branches[0].puiseux_pair.has_value());
    CHECK_FALSE(m.branches[0].gnnd);
    CHECK(delta_and_mu(m).mu == 16);
    CHECK_FALSE(classify_curve(m).tnnd);
}

TEST_CASE("directional approximation diagrams")
{
    auto ds = directional_approximation_diagrams(tangential_decomposition(P(CUSPS2)));
    REQUIRE(ds.size() == 2);
    for (const auto& g : ds) CHECK(g.vertices == std::vector<Exponent>{{0, 4}, {2, 2}, {5, 0}});

    auto one = directional_approximation_diagrams(tangential_decomposition(P("x^2-y^3")));
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices.size() == 2);

    auto cl = directional_approximation_diagrams(tangential_decomposition(P("(x^2-y^3)*y")));
    REQUIRE(cl.size() == 2);
    bool smooth_seen = false, cusp_seen = false;
    for (const auto& g : cl) {
        if (g.vertices == std::vector<Exponent>{{0, 3}, {2, 1}}) smooth_seen = true;
        if (g.vertices == std::vector<Exponent>{{0, 3}, {1, 2}, {4, 0}}) cusp_seen = true;
    }
    CHECK(smooth_seen);
    CHECK(cusp_seen);
}

TEST_CASE("multiplicity sequences")
{
    CHECK(multiplicity_sequence(2, 3) == std::vector<int>{2, 1, 1});
    CHECK(multiplicity_sequence(3, 5) == std::vector<int>{3, 2, 1, 1});
    CHECK(multiplicity_sequence(1, 7) == std::vector<int>{1});
}

TEST_CASE("resolution data of the cusp")
{
    ResolutionDatum d = resolution_data(P("x^2-y^3"));
    auto st = d.strata();
    CHECK(st == std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {6, -1}});
    CHECK(tau_es(d) == 2);
}

TEST_CASE("resolution multiplicities agree with Euclid on y^p - x^q")
{
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {2, 7}, {4, 7}, {3, 7}, {5, 7}}) {
        MultiPoly f = MultiPoly::monomial({0, p}, 1) - MultiPoly::monomial({q, 0}, 1);
        ResolutionDatum d = resolution_data(f);
        auto want = multiplicity_sequence(p, q);
        std::vector<int> got(d.points.size());
        for (std::size_t i = 0; i < d.points.size(); ++i) got[i] = d.points[i].multiplicity;
        got.resize(std::min(got.size(), want.size()));
        CHECK(got == want);
        long long delta = 0;
        for (const auto& pt : d.points) delta += pt.multiplicity * (pt.multiplicity - 1) / 2;
        CHECK(delta == (p - 1) * (q - 1) / 2);
    }
}

TEST_CASE("tau_es and modality")
{
    auto mod = [](const char* s) { return modality_curve(tangential_decomposition(P(s))); };
    Modality c = mod("x^2-y^3");
    CHECK(c.lattice_count == 0);
    CHECK(c.mu_minus_tau_es == 0);
    Modality e12 = mod("x^3+y^7");
    CHECK(e12.lattice_count == 1);
    CHECK(e12.mu_minus_tau_es == 1);
    Modality w12 = mod("x^4+y^5");
    CHECK(w12.lattice_count == 1);
    CHECK(w12.mu_minus_tau_es == 1);
    Modality two = mod(CUSPS2);
    CHECK(two.lattice_count == 1);
    CHECK(two.mu_minus_tau_es == 1);
    Modality three = mod(CUSPS3);
    CHECK(three.lattice_count == 6);
    CHECK(three.mu_minus_tau_es == 6);

    // smooth germ: tau_es = -1 by convention
    CHECK(tau_es(resolution_data(P("x+y^2"))) == -1);
}

TEST_CASE("order of determinacy")
{
    auto det = [](const char* s) { return order_of_determinacy_curve(tangential_decomposition(P(s))); };
    CHECK(det("x^2-y^3") == 3);
    CHECK(det("x^2+y^5") == 5);
    CHECK(det("x^3+y^4") == 4);
    CHECK(det(CUSPS2) == 5);
}
