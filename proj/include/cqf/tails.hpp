#pragma once

#include <optional>

#include "cqf/series.hpp"

namespace cqf {

// Inverted four-term asymptotic CDF of the symmetric stable law:
// w(u) ~ { c_{-1}/(1-u) + c_0 + c_1 (1-u) + c_2 (1-u)^2 }^{1/alpha}.
struct TailModel {
    double alpha = 0.0;
    double c_m1 = 0.0, c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double u_switch = 0.0;

    double eval(double u) const;
};

// Central series plus optional upper tail; symmetric series mirror the tail
// below 1 - u_switch.
struct CompositeQuantile {
    CentralSeries central;
    std::optional<TailModel> upper_tail;
    bool reflection = false;
};

TailModel stable_tail(double alpha, const QuadratureConfig& cfg);

// Scans u in [0.90, 0.99] for the point where central and tail evaluations
// agree best; warns when the relative gap at the minimizer exceeds 1e-3.
double choose_switch(const CentralSeries& cs, TailModel& tm);

// Builds the composite for a descriptor: stable alpha < 2 gets the
// asymptotic tail, everything else is central-series only.
CompositeQuantile make_composite(const CharFnDescriptor& cf,
                                 const CentralSeries& cs,
                                 const QuadratureConfig& cfg);

double eval_quantile(const CompositeQuantile& q, double u);

} // namespace cqf
