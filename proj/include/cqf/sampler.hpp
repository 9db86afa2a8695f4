#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqf/tails.hpp"

namespace cqf {

// Seedable 64-bit generator with a documented recurrence so other language
// implementations can reproduce streams bit-exactly:
//   state seeded by one splitmix64 step of the user seed;
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output = x * 0x2545F4914F6CDD1D.
class Xorshift64Star {
  public:
    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next_u64();
    // (k + 0.5) / 2^64, clamped strictly inside (0, 1).
    double next_unit();

    // Per-partition derivation for parallel batches: one extra splitmix64
    // step folding in the partition index.
    static std::uint64_t derive_seed(std::uint64_t seed,
                                     std::uint64_t partition);

  private:
    std::uint64_t state_;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string dist; // echo of the generating spec
    std::size_t n = 0;
};

SampleBatch sample(const CompositeQuantile& q, std::size_t n,
                   std::uint64_t seed);

// Levy stochastic area: L = Q_X(U1) + dt * Q_P(U2) with the logistic loop
// quantile Q_X(u) = (dt/pi) log(u/(1-u)) and Q_P built from the conditioned
// component's characteristic function. With gaussian_tail the extreme tail
// (|2u-1| > 0.998) falls back to the small-s approximation P ~ r Z / sqrt(3);
// off by default since it understates the true exponential tail.
SampleBatch sample_levy_area(double r, double delta_t, std::size_t n,
                             std::uint64_t seed, const SeriesOptions& opt,
                             const QuadratureConfig& cfg,
                             bool gaussian_tail = false);

double logistic_loop_quantile(double delta_t, double u);

} // namespace cqf
