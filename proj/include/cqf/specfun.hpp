#pragma once

#include <cmath>
#include <limits>

#include "cqf/errors.hpp"
#include "cqf/quadrature.hpp"

namespace cqf {

// Gamma function for real arguments, Lanczos approximation (g = 7, n = 9),
// relative accuracy ~1e-14 in double.
double gamma_fn(double x);

double log_gamma(double x);

// Modified Bessel function of the second kind, real (possibly fractional)
// order, via K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt. Valid z > 0.
double bessel_k(double nu, double z);

// Inverse standard normal CDF (rational approximation + Halley refinement
// against std::erfc). Used by the diagnostics reference oracle.
double inv_normal_cdf(double u);

template <class Real>
Real pi_const() {
    // enough digits for cpp_bin_float_50 and below
    return static_cast<Real>(Real(
        "3.14159265358979323846264338327950288419716939937510582097494459"));
}

template <>
inline double pi_const<double>() {
    return 3.141592653589793238462643383279502884;
}

// Spouge's approximation, usable with multiprecision float types. The
// number of series terms is derived from the type's decimal digits.
template <class Real>
Real gamma_spouge(Real z) {
    constexpr int d10 = std::numeric_limits<Real>::digits10;
    constexpr int a = static_cast<int>(d10 / 0.79) + 3;
    const Real pi = pi_const<Real>();
    if (z < Real(0.5))
        return pi / (sin(pi * z) * gamma_spouge<Real>(Real(1) - z));
    z -= 1;
    Real acc = sqrt(2 * pi);
    Real num(1); // (-1)^{k-1} / (k-1)!
    for (int k = 1; k < a; ++k) {
        if (k > 1) num /= -(k - 1);
        const Real ak = Real(a - k);
        acc += num * pow(ak, Real(k) - Real(0.5)) * exp(ak) / (z + k);
    }
    return pow(z + a, z + Real(0.5)) * exp(-(z + Real(a))) * acc;
}

} // namespace cqf
