#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonsing/diagram.hpp"
#include "newtonsing/errors.hpp"
#include "newtonsing/zeta.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>

using namespace newtonsing;

static const std::vector<std::string> XY{"x", "y"}, XYZ{"x", "y", "z"};
static MultiPoly P(const std::string& s) { return parse_poly(s, XY); }
static MultiPoly P3(const std::string& s) { return parse_poly(s, XYZ); }
static const char* G2219 = "x^14+y^13+z^16+x^2*z^13+y^4*z^11";

TEST_CASE("diagram vertices and facets")
{
    NewtonDiagram g = newton_diagram(P("x^2+y^3"));
    CHECK(g.vertices == std::vector<Exponent>{{0, 3}, {2, 0}});
    REQUIRE(g.facets.size() == 1);
    CHECK(g.facets[0].normal == IVec{3, 2});
    CHECK(g.facets[0].level == 6);

    NewtonDiagram h = newton_diagram(P("x^2*y^2+x^5+y^5"));
    CHECK(h.vertices.size() == 3);
    CHECK(h.facets.size() == 2);

    CHECK_THROWS_AS(newton_diagram(MultiPoly(2)), DomainError);
    CHECK_THROWS_AS(newton_diagram(P("1+x")), DomainError);
}

TEST_CASE("the 2219 diagram has the three faces")
{
    NewtonDiagram g = newton_diagram(P3(G2219));
    REQUIRE(g.facets.size() == 3);
    std::vector<std::vector<Exponent>> sets;
    for (const auto& f : g.facets) {
        std::vector<Exponent> s;
        for (int id : f.vertex_ids) s.push_back(g.vertices[id]);
        std::sort(s.begin(), s.end());
        sets.push_back(s);
    }
    std::sort(sets.begin(), sets.end());
    std::vector<std::vector<Exponent>> want{
        {{0, 0, 16}, {0, 4, 11}, {2, 0, 13}},
        {{0, 4, 11}, {0, 13, 0}, {2, 0, 13}},
        {{0, 13, 0}, {2, 0, 13}, {14, 0, 0}},
    };
    for (auto& w : want) std::sort(w.begin(), w.end());
    std::sort(want.begin(), want.end());
    CHECK(sets == want);
}

TEST_CASE("commode")
{
    CHECK_FALSE(is_commode(newton_diagram(P("x^2+x*y"))));
    CHECK(is_commode(newton_diagram(P("x^2+y^2"))));
    CHECK(is_commode(newton_diagram(P("x^2*y^2+x^5+y^5"))));
}

TEST_CASE("faces and truncations")
{
    MultiPoly f = P("x^2*y^2+x^5+y^5");
    NewtonDiagram g = newton_diagram(f);
    auto fs = faces(g, f);
    CHECK(fs.size() == 5);
    bool saw_edge = false, saw_vertex = false;
    for (const auto& s : fs) {
        MultiPoly t = truncation(f, s);
        if (t == P("x^5+x^2*y^2")) saw_edge = true;
        if (t == P("x^2*y^2")) saw_vertex = true;
    }
    CHECK(saw_edge);
    CHECK(saw_vertex);

    MultiPoly c = P("x^2+y^3");
    auto cf = faces(newton_diagram(c), c);
    CHECK(truncation(c, cf.back()) == c);

    CHECK_THROWS_AS(faces(newton_diagram(P("x^2+y^2")), P("x^3+y^2")), DomainError);
}

TEST_CASE("weight function")
{
    NewtonDiagram g = newton_diagram(P("x^2+y^3"));
    CHECK(weight_eval(g, {1, 1}) == Rational(5, 6));
    for (const auto& v : g.vertices) CHECK(weight_eval(g, {v[0], v[1]}) == 1);
    CHECK_THROWS_AS(weight_eval(newton_diagram(P("x^2+x*y")), {1, 1}), DomainError);
}

TEST_CASE("diagram order")
{
    NewtonDiagram a = newton_diagram(P("x^2+y^3")), b = newton_diagram(P("x^2+y^2"));
    CHECK(diagram_geq(a, b));
    CHECK(diagram_geq(a, a));
    CHECK_FALSE(diagram_geq(b, a));
}

TEST_CASE("lattice volumes")
{
    CHECK(lattice_volumes(newton_diagram(P("x^2+y^3"))) == std::vector<Rational>{1, 5, 3});
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 7}}) {
        auto f = MultiPoly::monomial({p, 0}, 1) + MultiPoly::monomial({0, q}, 1);
        CHECK(lattice_volumes(newton_diagram(f)) == std::vector<Rational>{1, p + q, Rational(p * q, 2)});
    }
    auto v = lattice_volumes(newton_diagram(P3("x^2+y^3+z^5")));
    CHECK(v == std::vector<Rational>{1, 10, Rational(6 + 15 + 10, 2), Rational(30, 6)});
}

TEST_CASE("under-diagram volume against the slicing oracle")
{
    oracle::Gen g(3);
    for (const auto* s : {"x^2+y^3", "x^2*y^2+x^5+y^5", "x^7+x^2*y+y^9+x*y^3"}) {
        MultiPoly f = P(s);
        CHECK(under_volume(newton_diagram(f)) == 2 * oracle::slicing_volume(f));
    }
    for (const auto* s : {G2219, "x^3+y^4+z^5+x*y*z", "x^5+y^5+z^5+x^2*y^2+y^2*z^2"}) {
        MultiPoly f = P3(s);
        CHECK(under_volume(newton_diagram(f)) == 6 * oracle::slicing_volume(f));
    }
    // random commode 3-variable supports
    for (int i = 0; i < 15; ++i) {
        MultiPoly f = oracle::random_poly(g, 3, 2, 7, 5);
        f += MultiPoly::monomial({static_cast<int>(g.uniform(2, 9)), 0, 0}, 1);
        f += MultiPoly::monomial({0, static_cast<int>(g.uniform(2, 9)), 0}, 1);
        f += MultiPoly::monomial({0, 0, static_cast<int>(g.uniform(2, 9))}, 1);
        CHECK(under_volume(newton_diagram(f)) == 6 * oracle::slicing_volume(f));
    }
}

TEST_CASE("Newton number equals the Milnor-algebra oracle on non-degenerate germs")
{
    for (const auto* s : {"x^2+y^3", "x^3+y^7", "x^2*y^2+x^5+y^5", "x^4+x^2*y^2+y^5", "x^3+x*y^4+y^7"}) {
        MultiPoly f = P(s);
        CHECK(kouchnirenko_mu(newton_diagram(f)).value == *oracle::milnor_number(f));
    }
    for (const auto* s : {"x^2+y^3+z^4", "x^3+y^3+z^3+x*y*z", "x^4+y^4+z^4+x^2*y*z"}) {
        MultiPoly f = P3(s);
        CHECK(kouchnirenko_mu(newton_diagram(f)).value == *oracle::milnor_number(f));
    }
}

TEST_CASE("delta faces")
{
    MultiPoly f = P3("x*y*z+x^4+y^5+z^6");
    NewtonDiagram g = newton_diagram(f);
    auto d = delta_faces(g, 2);
    REQUIRE(d.size() == 1);
    std::vector<Exponent> vs;
    for (int id : g.facets[d[0]].vertex_ids) vs.push_back(g.vertices[id]);
    std::sort(vs.begin(), vs.end());
    CHECK(vs == std::vector<Exponent>{{0, 5, 0}, {1, 1, 1}, {4, 0, 0}});

    CHECK(delta_faces(newton_diagram(P("x^2+y^2")), 1).size() == 1);
    CHECK(delta_faces(newton_diagram(P("x^2+y^3")), 1).empty());
}

TEST_CASE("lattice points under the diagram")
{
    CHECK(under_diagram_lattice_points(newton_diagram(P("x^3+y^7")), 2) == std::vector<Exponent>{{2, 2}});
    CHECK(under_diagram_lattice_points(newton_diagram(P("x^2+y^3")), 2).empty());
    CHECK(under_diagram_lattice_points(newton_diagram(P("x^5+y^5")), 2).size() == 3);
}

TEST_CASE("determinacy bound")
{
    CHECK(determinacy_bound(newton_diagram(P("x^2+y^3"))) == 3);
    CHECK(determinacy_bound(newton_diagram(P("x^2+y^5"))) == 5);
    CHECK(determinacy_bound(newton_diagram(P("x^4+y^4"))) == 4);
}

TEST_CASE("Kouchnirenko values")
{
    CHECK(kouchnirenko_mu(newton_diagram(P("x^2+y^3"))).value == 2);
    CHECK(kouchnirenko_mu(newton_diagram(P3(G2219))).value == 2219);
    CHECK(kouchnirenko_mu(newton_diagram(P3("x^2+y^3+z^4"))).value == 6);
}

TEST_CASE("Kouchnirenko is invariant under coordinate permutations")
{
    MultiPoly f = P3(G2219);
    std::vector<int> perm{0, 1, 2};
    do {
        MultiPoly g(3);
        for (const auto& [e, c] : f.terms()) g.add_term({e[perm[0]], e[perm[1]], e[perm[2]]}, c);
        CHECK(kouchnirenko_mu(newton_diagram(g)).value == 2219);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("commode closure")
{
    NewtonDiagram g = newton_diagram(P("x*y+y^3"));
    CHECK_FALSE(is_commode(g));
    NewtonDiagram c = commode_closure(g);
    CHECK(is_commode(c));
    CHECK(kouchnirenko_mu(c).value == 1);
}
