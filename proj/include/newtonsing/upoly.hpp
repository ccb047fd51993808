#pragma once

#include "newtonsing/number.hpp"

#include <utility>
#include <vector>

namespace newtonsing {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c);
    UPoly(int c) : UPoly(Rational(c)) {}

    static UPoly monomial(const Rational& c, int deg);
    static UPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational lead() const;
    int low_order() const;  // order at 0; -1 for zero

    Rational eval(const Rational& t) const;
    UPoly derivative() const;
    UPoly monic() const;
    UPoly shift_down(int k) const;  // divide by t^k (caller ensures divisibility)
    UPoly strip_zero_root() const;  // remove the factor t^low_order
    UPoly compose(const UPoly& inner) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);  // quotient
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0)=0
// returns g, s with s*a = g mod b
std::pair<UPoly, UPoly> half_extended_gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, unsigned e);

UPoly squarefree_part(const UPoly& a);
// Yun decomposition: a = c * prod f_i^i, returns (f_i, i) with deg f_i > 0
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);
// distinct rational roots with multiplicities
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a);

// Resultant with the Sylvester convention (rows of a first).
Rational resultant(const UPoly& a, const UPoly& b);

// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UPoly& a);

}  // namespace newtonsing
