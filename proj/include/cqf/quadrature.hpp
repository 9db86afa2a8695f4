#pragma once

#include <functional>

#include "cqf/errors.hpp"

namespace cqf {

struct QuadratureConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    double trunc_threshold = 1e-18; // envelope cutoff for infinite tails
    int max_subdivisions = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
};

// Globally adaptive Gauss-Kronrod (G7/K15) on [a, b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureConfig& cfg);

// Integral over [a, inf) of a decaying integrand. The upper truncation point
// is found by scanning the envelope |f| until it falls below
// cfg.trunc_threshold times the peak scale.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a, const QuadratureConfig& cfg);

// Single non-adaptive K15 panel, used for the oscillatory half-period sums.
double kronrod15(const std::function<double(double)>& f, double a, double b);

} // namespace cqf
