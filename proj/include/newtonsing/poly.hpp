#pragma once

#include "newtonsing/number.hpp"
#include "newtonsing/upoly.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <string>
#include <vector>

namespace newtonsing {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic, larger monomials first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    MultiPoly() : n_(1) {}
    explicit MultiPoly(int n) : n_(n) {}

    static MultiPoly constant(int n, const Rational& c);
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(const Exponent& e, const Rational& c);

    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    int total_degree() const;  // -1 for zero
    int order() const;         // lowest total degree, -1 for zero
    int degree_in(int i) const;
    int order_in(int i) const;
    Rational constant_term() const;
    Exponent min_exponent() const;  // componentwise minimum over the support

    std::vector<Exponent> support() const;
    MultiPoly truncated(int max_degree) const;
    MultiPoly divide_monomial(const Exponent& e) const;  // exact, caller checks
    Rational eval(const std::vector<Rational>& x) const;

    // coefficients as polynomials in variable i: result[k] = coeff of x_i^k
    std::vector<MultiPoly> coeffs_in(int i) const;
    // f as a univariate polynomial when only variable i occurs
    UPoly to_upoly(int i) const;
    static MultiPoly from_upoly(const UPoly& p, int n, int i);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& vars) const;
    std::string str() const;  // default names x,y,z or x1..xn

private:
    int n_;
    Terms terms_;
};

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree);
MultiPoly pow(const MultiPoly& a, unsigned e);
MultiPoly pow_truncated(const MultiPoly& a, unsigned e, int max_degree);

std::vector<std::string> default_var_names(int n);

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

MultiPoly homogeneous_component(const MultiPoly& f, int d);
MultiPoly partial_derivative(const MultiPoly& f, int i);
bool proportional_modulo_scalar(const MultiPoly& f, const MultiPoly& g);

// Substitute images[i] for variable i (no truncation when max_degree < 0).
MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& images, int max_degree = -1);

struct CoordinateChange {
    RationalMatrix linear;          // old x_i = sum_j linear(i,j) new x_j + higher[i]
    std::vector<MultiPoly> higher;  // empty or n polynomials of order >= 2
    int degree_bound = 0;

    static CoordinateChange identity(int n, int degree_bound);
    int n() const { return static_cast<int>(linear.rows()); }
    std::vector<MultiPoly> images() const;
    std::string str(const std::vector<std::string>& vars) const;
};

// f o phi truncated at phi.degree_bound; throws DomainError on a singular linear part
MultiPoly apply_change(const MultiPoly& f, const CoordinateChange& phi);

// Sylvester resultant eliminating variable i, rows of f first.
MultiPoly univariate_resultant(const MultiPoly& f, const MultiPoly& g, int i);

}  // namespace newtonsing
