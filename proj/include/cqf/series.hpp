#pragma once

#include <string>
#include <vector>

#include "cqf/charfn.hpp"
#include "cqf/diffpoly.hpp"
#include "cqf/moments.hpp"

namespace cqf {

// Quantile power series about the anchor: w(u) = sum_k q_k (u - u0)^k with
// q_1 = w'(u0). Symmetric series have u0 = 1/2 and vanishing even orders.
struct CentralSeries {
    double u0 = 0.5;
    double wdash = 0.0;
    std::vector<double> qcoeffs; // qcoeffs[k-1] = q_k, k = 1..nterms
    bool symmetric = true;
    int nterms = 0; // highest power present
    std::string dist; // label for emitted artifacts

    double q(int k) const { return qcoeffs.at(static_cast<std::size_t>(k) - 1); }
};

// 1 / D_0; the anchor-slope condition.
double slope_at_anchor(const MomentVector& mv);

// Number of series terms requested: for a symmetric cf this counts the odd
// coefficients (orders 1, 3, ..., 2*terms-1); otherwise orders 1..terms.
struct SeriesOptions {
    int terms = 35;
    bool extended_precision = false; // multiprecision coefficient assembly
};

// Assemble from a precomputed P-sequence covering the required orders.
CentralSeries build_series(const CharFnDescriptor& cf,
                           const std::vector<DiffPoly>& pseq, int terms,
                           const QuadratureConfig& cfg);

// Self-contained build; streams the P-sequence so deep series do not hold
// every polynomial in memory at once.
CentralSeries build_series(const CharFnDescriptor& cf, const SeriesOptions& opt,
                           const QuadratureConfig& cfg);

// Multiprecision assembly for several symmetric descriptors sharing one
// pass over the P-sequence; the recurrence dominates deep builds, so this
// costs barely more than a single build.
std::vector<CentralSeries> build_series_batch(
    const std::vector<CharFnDescriptor>& cfs, int terms);

// Nested-multiplication coefficients in v = 2u-1: a_j = q_{2j+1} / 2^{2j+1}.
// Symmetric series only.
std::vector<double> horner_coeffs(const CentralSeries& cs);

double eval_series(const CentralSeries& cs, double u);

// dw/du of the truncated series; 1/f(w(u)) inside the validity range.
double eval_series_derivative(const CentralSeries& cs, double u);

} // namespace cqf
