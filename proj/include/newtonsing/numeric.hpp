#pragma once

#include "newtonsing/upoly.hpp"

#include <complex>
#include <vector>

namespace newtonsing {

using Complex = std::complex<double>;

double to_double(const Rational& q);

// Complex roots (with repetition) via companion-matrix eigenvalues.
std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs_low_first);
std::vector<Complex> complex_roots(const UPoly& p);

Complex eval(const std::vector<Complex>& coeffs_low_first, Complex z);

}  // namespace newtonsing
