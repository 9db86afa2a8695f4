#include "cqf/sampler.hpp"

#include <cmath>

#include "cqf/specfun.hpp"

namespace cqf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL; // xorshift forbids 0
}

std::uint64_t Xorshift64Star::next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::next_unit() {
    const std::uint64_t k = next_u64();
    double u = (static_cast<double>(k) + 0.5) * 0x1p-64;
    if (u >= 1.0) u = 1.0 - 0x1p-53;
    if (u <= 0.0) u = 0x1p-65;
    return u;
}

std::uint64_t Xorshift64Star::derive_seed(std::uint64_t seed,
                                          std::uint64_t partition) {
    return splitmix64(splitmix64(seed) ^ partition);
}

SampleBatch sample(const CompositeQuantile& q, std::size_t n,
                   std::uint64_t seed) {
    if (n < 1) throw DomainError("sample: n must be >= 1");
    SampleBatch batch;
    batch.seed = seed;
    batch.n = n;
    batch.dist = q.central.dist;
    batch.values.reserve(n);
    Xorshift64Star rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        batch.values.push_back(eval_quantile(q, rng.next_unit()));
    return batch;
}

double logistic_loop_quantile(double delta_t, double u) {
    return delta_t / kPi * std::log(u / (1.0 - u));
}

SampleBatch sample_levy_area(double r, double delta_t, std::size_t n,
                             std::uint64_t seed, const SeriesOptions& opt,
                             const QuadratureConfig& cfg, bool gaussian_tail) {
    if (n < 1) throw DomainError("sample_levy_area: n must be >= 1");
    if (!(delta_t > 0.0)) throw DomainError("sample_levy_area: delta_t must be > 0");
    const CharFnDescriptor cf = make_levy_area_p(r);
    const CentralSeries cs = build_series(cf, opt, cfg);
    const CompositeQuantile qp = make_composite(cf, cs, cfg);

    SampleBatch batch;
    batch.seed = seed;
    batch.n = n;
    batch.dist = "{\"dist\":\"levy-area\",\"r\":" + std::to_string(r) +
                 ",\"delta_t\":" + std::to_string(delta_t) + "}";
    batch.values.reserve(n);
    const double gauss_scale = r / std::sqrt(3.0);
    Xorshift64Star rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        const double p = (gaussian_tail && std::abs(2.0 * u2 - 1.0) > 0.998)
                             ? gauss_scale * inv_normal_cdf(u2)
                             : eval_quantile(qp, u2);
        batch.values.push_back(logistic_loop_quantile(delta_t, u1) +
                               delta_t * p);
    }
    return batch;
}

} // namespace cqf
