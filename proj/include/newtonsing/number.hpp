#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace newtonsing {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline Rational pow(const Rational& base, long e)
{
    Rational r = 1;
    Rational b = e >= 0 ? base : Rational(1) / base;
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

long long to_ll(const Integer& z);
long long to_ll(const Rational& q);  // throws unless integral and in range

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// floor/ceil of a/b for b>0
long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

}  // namespace newtonsing
