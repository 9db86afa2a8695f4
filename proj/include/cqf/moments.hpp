#pragma once

#include <vector>

#include "cqf/charfn.hpp"
#include "cqf/quadrature.hpp"

namespace cqf {

enum class MomentSource { ClosedForm, Quadrature, Symmetry };

// D_k = f^{(k)}(0) for k = 0..K, with provenance and an absolute error
// estimate per entry. For symmetric sources the odd entries are exactly 0.
struct MomentVector {
    std::vector<double> dvals;
    std::vector<MomentSource> provenance;
    std::vector<double> abs_error;

    int max_order() const { return static_cast<int>(dvals.size()) - 1; }
};

// E_k = (1/2pi) int t^{2k} phi(t) dt, evaluated as (1/pi) int_0^inf.
double even_moment(const CharFnDescriptor& cf, int k,
                   const QuadratureConfig& cfg);

// f^{(k)}(0) = (1/pi) int_0^inf t^k Re[(-i)^k phi(t)] dt.
double derivative_at_zero(const CharFnDescriptor& cf, int k,
                          const QuadratureConfig& cfg);

MomentVector build_moment_vector(const CharFnDescriptor& cf, int K,
                                 const QuadratureConfig& cfg);

// Gil-Pelaez inversion for F(x). Oscillation-dominated arguments are handled
// by half-period segmentation with Euler acceleration of the partial sums.
double gil_pelaez_cdf(const CharFnDescriptor& cf, double x,
                      const QuadratureConfig& cfg);

// u0 with w(u0) = 0; exactly 1/2 for symmetric descriptors.
double zero_location(const CharFnDescriptor& cf, const QuadratureConfig& cfg);

} // namespace cqf
