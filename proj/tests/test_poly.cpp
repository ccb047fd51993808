#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonsing/errors.hpp"
#include "newtonsing/poly.hpp"
#include "oracles.hpp"

using namespace newtonsing;

static const std::vector<std::string> XY{"x", "y"}, XYZ{"x", "y", "z"};
static MultiPoly P(const std::string& s) { return parse_poly(s, XY); }
static MultiPoly P3(const std::string& s) { return parse_poly(s, XYZ); }

TEST_CASE("parse simple terms")
{
    MultiPoly f = P("x^2*y + 3");
    CHECK(f.size() == 2);
    CHECK(f.coeff({2, 1}) == 1);
    CHECK(f.coeff({0, 0}) == 3);

    MultiPoly g = P("x^2 - y^3");
    CHECK(g.coeff({2, 0}) == 1);
    CHECK(g.coeff({0, 3}) == -1);
}

TEST_CASE("parse powers of sums")
{
    MultiPoly f = P3("z^11*(z*x + y^2)^2");
    CHECK(f == P3("x^2*z^13 + 2*x*y^2*z^12 + y^4*z^11"));
    CHECK(P("(x+y)^0") == MultiPoly::constant(2, 1));
}

TEST_CASE("parse rationals, implicit products, unicode minus")
{
    CHECK(P("1/2 x y") == MultiPoly::monomial({1, 1}, Rational(1, 2)));
    CHECK(P("x \xE2\x88\x92 y") == P("x - y"));
    CHECK(P("2(x+1)") == P("2*x+2"));
    CHECK(P("x*y/3") == MultiPoly::monomial({1, 1}, Rational(1, 3)));
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("x + w"), ParseError);
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    try {
        P("x + w");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print and reparse")
{
    oracle::Gen g(7);
    for (int i = 0; i < 30; ++i) {
        MultiPoly f = oracle::random_poly(g, 3, 0, 6, 6);
        CHECK(P3(f.str(XYZ)) == f);
    }
}

TEST_CASE("homogeneous components")
{
    CHECK(homogeneous_component(P("x^2+x*y+y^3"), 2) == P("x^2+x*y"));
    CHECK(homogeneous_component(P("x^2+y^3"), 5).is_zero());
    MultiPoly f = P3("x*y*z*(x+y+z) + (x^2*y^2+y^2*z^2+x^2*z^2)*(x+2*y+3*z)^2 + x^8+y^8+z^8");
    CHECK(homogeneous_component(f, 4) == P3("x*y*z*(x+y+z)"));
    CHECK(f.order() == 4);
}

TEST_CASE("coordinate changes")
{
    MultiPoly f = P("x^2+y^3");
    CHECK(apply_change(f, CoordinateChange::identity(2, -1)) == f);

    CoordinateChange swap = CoordinateChange::identity(2, -1);
    swap.linear << 0, 1, 1, 0;
    CHECK(apply_change(f, swap) == P("y^2+x^3"));

    CoordinateChange shift = CoordinateChange::identity(2, -1);
    shift.higher = {P("-y^2"), MultiPoly(2)};
    CHECK(apply_change(P("(x+y^2)^2 + x^5 + y^5"), shift) == P("x^2 + (x-y^2)^5 + y^5"));

    CoordinateChange bad = CoordinateChange::identity(2, -1);
    bad.linear << 1, 1, 1, 1;
    CHECK_THROWS_AS(apply_change(f, bad), DomainError);

    CoordinateChange lin_higher = CoordinateChange::identity(2, -1);
    lin_higher.higher = {P("y"), MultiPoly(2)};
    CHECK_THROWS_AS(apply_change(f, lin_higher), DomainError);
}

TEST_CASE("truncated composition drops high degrees")
{
    CoordinateChange c = CoordinateChange::identity(2, 4);
    c.higher = {P("y^2"), MultiPoly(2)};
    MultiPoly g = apply_change(P("x^3"), c);
    CHECK(g == P("x^3 + 3*x^2*y^2"));
}

TEST_CASE("partial derivatives")
{
    CHECK(partial_derivative(P("x^2*y"), 0) == P("2*x*y"));
    CHECK(partial_derivative(P("x^2"), 1).is_zero());
    CHECK(partial_derivative(P("(x+y)^2"), 0) == P("2*x+2*y"));
    CHECK_THROWS_AS(partial_derivative(P("x"), 2), DomainError);
}

TEST_CASE("resultants follow the Sylvester convention")
{
    CHECK(univariate_resultant(P("y-x"), P("y+x"), 1) == P("2*x"));
    CHECK(univariate_resultant(P("x^2-y^3"), P("y"), 1) == P("-x^2"));
    MultiPoly r = univariate_resultant(P("x^2-y^3"), P("x^2-y^3+x^3"), 0);
    CHECK(r.order() == 9);
    CHECK(r.order_in(0) == 0);
    CHECK_THROWS_AS(univariate_resultant(P("x"), MultiPoly(2), 1), DomainError);
}

TEST_CASE("resultant vanishes on a common factor, oracle by product")
{
    oracle::Gen g(11);
    for (int i = 0; i < 10; ++i) {
        MultiPoly c = oracle::random_poly(g, 2, 1, 2, 2) + P("y");
        if (c.degree_in(1) < 1) c += P("y");
        MultiPoly a = c * (oracle::random_poly(g, 2, 0, 2, 2) + P("y^2"));
        MultiPoly b = c * (oracle::random_poly(g, 2, 0, 2, 2) + P("y^3"));
        CHECK(univariate_resultant(a, b, 1).is_zero());
    }
}

TEST_CASE("three-variable resultant through Bareiss")
{
    MultiPoly f = P3("y^2 - x*z"), g = P3("y - z");
    // Res_y(y^2 - xz, y - z) = f(y=z) up to the Sylvester sign: z^2 - x z
    CHECK(univariate_resultant(f, g, 1) == P3("z^2 - x*z"));
}

TEST_CASE("proportional modulo scalar")
{
    CHECK(proportional_modulo_scalar(P("2*x^2*y"), P("x^2*y")));
    CHECK_FALSE(proportional_modulo_scalar(P("x^2"), P("y^2")));
    CHECK(proportional_modulo_scalar(homogeneous_component(P("x^2*y^2+x^5+y^5"), 4),
                                     homogeneous_component(P("x^2*y^2+x^5-y^5"), 4)));
}

TEST_CASE("univariate tools")
{
    UPoly t = UPoly::x();
    UPoly a = (t - 1) * (t - 1) * (t + 2);
    auto sq = squarefree_decomposition(a);
    REQUIRE(sq.size() == 2);
    CHECK(squarefree_part(a) == ((t - 1) * (t + 2)).monic());
    auto roots = rational_roots(a);
    CHECK(roots.size() == 2);
    CHECK(resultant(t - 1, t + 1) == 2);
    CHECK(gcd(a, t - 1) == t - 1);
}
