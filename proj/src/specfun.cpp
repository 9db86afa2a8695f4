#include "cqf/specfun.hpp"

#include <cmath>

namespace cqf {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

double gamma_fn(double x) {
    if (x < 0.5) {
        // reflection formula; poles at non-positive integers
        const double s = std::sin(kPi * x);
        if (s == 0.0) throw DomainError("gamma_fn: pole at non-positive integer");
        return kPi / (s * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double log_gamma(double x) {
    if (x < 0.5)
        return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma(1.0 - x);
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t +
           std::log(a);
}

double bessel_k(double nu, double z) {
    if (z <= 0.0) throw DomainError("bessel_k: requires z > 0");
    nu = std::abs(nu);
    // integrand exp(-z cosh t) cosh(nu t); peak near asinh(nu/z) when nu > z
    const double tpeak = nu > z ? std::asinh(nu / z) : 0.0;
    auto log_f = [&](double t) {
        const double c = std::cosh(nu * t);
        return -z * std::cosh(t) + std::log(c);
    };
    const double log_peak = log_f(tpeak);
    double tmax = tpeak + 1.0;
    while (log_f(tmax) > log_peak - 46.0 && tmax < 800.0) tmax += 1.0;

    auto f = [&](double t) {
        const double e = -z * std::cosh(t);
        if (e < -745.0) return 0.0;
        // cosh(nu t) can overflow on its own; work with exp-combined form
        const double a = nu * t;
        if (a > 30.0) return 0.5 * (std::exp(e + a) + std::exp(e - a));
        return std::exp(e) * std::cosh(a);
    };
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 0.0;
    return integrate_adaptive(f, 0.0, tmax, cfg).value;
}

double inv_normal_cdf(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("inv_normal_cdf: u must lie in (0,1)");
    // Acklam's rational initial guess
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (u < plow) {
        const double q = std::sqrt(-2.0 * std::log(u));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - plow) {
        const double q = u - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
            q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
              c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // two Halley steps against erfc
    for (int it = 0; it < 2; ++it) {
        const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - u;
        const double g = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
        x -= g / (1.0 + 0.5 * x * g);
    }
    return x;
}

} // namespace cqf
