#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cqf/sampler.hpp"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cqf::QuadratureConfig kCfg{};
}

TEST_CASE("prng stream matches the documented recurrence") {
    // frozen outputs from an independent implementation of
    // splitmix64-seeded xorshift64*
    cqf::Xorshift64Star rng(1);
    CHECK(rng.next_u64() == 0x4b46a55df3611b9bULL);
    CHECK(rng.next_u64() == 0xd7e1f1410e763ef4ULL);
    CHECK(rng.next_u64() == 0x5f14ec66975f9b06ULL);
    CHECK(rng.next_u64() == 0x3b2c74fad44d6cdbULL);

    cqf::Xorshift64Star rng42(42);
    CHECK(rng42.next_u64() == 0x31b0ece7c4f697a2ULL);
    CHECK(rng42.next_u64() == 0x9008a3b1cb686f03ULL);
}

TEST_CASE("unit variates stay strictly inside (0,1)") {
    cqf::Xorshift64Star rng(1);
    CHECK(rng.next_unit() == doctest::Approx(0.294046721875365).epsilon(1e-15));
    cqf::Xorshift64Star rng2(987654321);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng2.next_unit();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("seed derivation separates partitions") {
    CHECK(cqf::Xorshift64Star::derive_seed(7, 3) == 0x6baa78681a99f995ULL);
    CHECK(cqf::Xorshift64Star::derive_seed(7, 3) !=
          cqf::Xorshift64Star::derive_seed(7, 4));
    CHECK(cqf::Xorshift64Star::derive_seed(7, 3) !=
          cqf::Xorshift64Star::derive_seed(8, 3));
}

TEST_CASE("batches are bit-reproducible and seed-sensitive") {
    cqf::SeriesOptions opt;
    opt.terms = 8;
    const auto cf = cqf::make_stable_symmetric(1.5);
    const auto q = cqf::make_composite(cf, cqf::build_series(cf, opt, kCfg), kCfg);

    const auto a = cqf::sample(q, 500, 123);
    const auto b = cqf::sample(q, 500, 123);
    CHECK(a.values == b.values);
    CHECK(a.seed == 123);
    CHECK(a.n == 500);

    const auto c = cqf::sample(q, 500, 124);
    CHECK(a.values != c.values);
    CHECK_THROWS_AS(cqf::sample(q, 0, 1), cqf::DomainError);
}

TEST_CASE("sample empirical median sits near the distribution median") {
    cqf::SeriesOptions opt;
    opt.terms = 10;
    const auto cf = cqf::make_gaussian(0.0);
    const auto q = cqf::make_composite(cf, cqf::build_series(cf, opt, kCfg), kCfg);
    auto batch = cqf::sample(q, 20000, 2024);
    std::sort(batch.values.begin(), batch.values.end());
    const double median = batch.values[10000];
    CHECK(std::abs(median) < 0.03); // ~3 sigma of the median estimator
}

TEST_CASE("logistic loop quantile closed values") {
    // 0.75/0.25 is exactly 3 in binary, so the identity holds bitwise
    CHECK(cqf::logistic_loop_quantile(1.0, 0.75) == 1.0 / kPi * std::log(3.0));
    CHECK(cqf::logistic_loop_quantile(2.0, 0.5) == 0.0);
    CHECK(cqf::logistic_loop_quantile(1.0, 0.25) ==
          doctest::Approx(-std::log(3.0) / kPi).epsilon(1e-15));
}

TEST_CASE("levy area batches are reproducible") {
    cqf::SeriesOptions opt;
    opt.terms = 6;
    const auto a = cqf::sample_levy_area(1.0, 1.0, 200, 5, opt, kCfg);
    const auto b = cqf::sample_levy_area(1.0, 1.0, 200, 5, opt, kCfg);
    CHECK(a.values == b.values);
    CHECK(a.values.size() == 200);
}
