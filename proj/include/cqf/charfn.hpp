#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "cqf/errors.hpp"

namespace cqf {

// A characteristic function with the metadata the pipeline needs:
// symmetry, how many absolute moments of phi converge, and a closed-form
// characteristic moment provider when one is known.
struct CharFnDescriptor {
    std::string name;
    std::map<std::string, double> params;
    std::function<std::complex<double>(double)> eval;
    bool symmetric = false;
    // Max k with int |t|^k |phi(t)| dt finite; nullopt = all moments exist.
    std::optional<int> moment_order;
    // k -> E_k, the normalized even moment; empty when only quadrature works.
    std::function<double(int)> closed_moments;

    bool has_closed_moments() const { return static_cast<bool>(closed_moments); }
};

CharFnDescriptor make_gaussian(double mu);
CharFnDescriptor make_student(double n);
CharFnDescriptor make_stable_symmetric(double alpha);
// phi(t) = exp(-|t|^alpha (1 - i beta sign(t) tan(pi alpha / 2))). Supplied
// for the zero-location formula; not a sampling target.
CharFnDescriptor make_stable_asymmetric(double alpha, double beta);
CharFnDescriptor make_sgh(double lambda, double alpha, double delta);
CharFnDescriptor make_levy_area_p(double r);
// Symmetric variance gamma, a deliberately non-analytic case: only finitely
// many characteristic moments exist.
CharFnDescriptor make_vg(double lambda, double alpha);

// Wraps an arbitrary evaluator; probes phi(0) = 1 and the symmetry claim on
// a t-grid, throwing ValidationError on failure.
CharFnDescriptor make_custom(std::function<std::complex<double>(double)> eval,
                             bool symmetric, std::optional<int> moment_order);

// Grid probes used by make_custom, also applied to catalog entries in tests.
void validate_descriptor(const CharFnDescriptor& cf);

// {"dist": "stable", "alpha": 1.5, ...} -> descriptor.
CharFnDescriptor descriptor_from_spec(const std::string& json_spec);

} // namespace cqf
