#include "newtonsing/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace newtonsing {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::vector<Complex> complex_roots(const std::vector<Complex>& c)
{
    int n = static_cast<int>(c.size()) - 1;
    while (n > 0 && std::abs(c[n]) == 0.0) --n;
    if (n <= 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    // a few Newton steps on the original coefficients
    for (auto& z : out) {
        for (int it = 0; it < 3; ++it) {
            Complex p = 0, dp = 0;
            for (int i = n; i >= 0; --i) {
                dp = dp * z + p;
                p = p * z + c[i];
            }
            if (std::abs(dp) < 1e-300) break;
            Complex step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            z -= step;
        }
    }
    return out;
}

std::vector<Complex> complex_roots(const UPoly& p)
{
    std::vector<Complex> c;
    for (const auto& q : p.coeffs()) c.emplace_back(to_double(q), 0.0);
    return complex_roots(c);
}

Complex eval(const std::vector<Complex>& c, Complex z)
{
    Complex r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

}  // namespace newtonsing
