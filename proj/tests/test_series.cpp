#include <doctest.h>

#include <cmath>

#include "cqf/series.hpp"
#include "cqf/specfun.hpp"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cqf::QuadratureConfig kCfg{};

cqf::CentralSeries build(const cqf::CharFnDescriptor& cf, int terms,
                         bool extended = false) {
    cqf::SeriesOptions opt;
    opt.terms = terms;
    opt.extended_precision = extended;
    return cqf::build_series(cf, opt, kCfg);
}
} // namespace

TEST_CASE("anchor slope from the moment vector") {
    const auto mv = cqf::build_moment_vector(cqf::make_gaussian(0.0), 2, kCfg);
    CHECK(cqf::slope_at_anchor(mv) ==
          doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("gaussian series reproduces the closed-form odd coefficients") {
    const auto cs = build(cqf::make_gaussian(0.0), 6);
    REQUIRE(cs.symmetric);
    REQUIRE(cs.nterms == 11);
    const double s2pi = std::sqrt(2.0 * kPi);
    const std::vector<double> expected = {
        s2pi,
        std::sqrt(2.0) * std::pow(kPi, 1.5) / 3.0,
        7.0 * std::pow(kPi, 2.5) / (15.0 * std::sqrt(2.0)),
        127.0 * std::pow(kPi, 3.5) / (315.0 * std::sqrt(2.0)),
        4369.0 * std::pow(kPi, 4.5) / (11340.0 * std::sqrt(2.0)),
        34807.0 * std::pow(kPi, 5.5) / (89100.0 * std::sqrt(2.0))};
    for (int j = 0; j < 6; ++j)
        CHECK(cs.q(2 * j + 1) == doctest::Approx(expected[j]).epsilon(1e-11));
    for (int k = 2; k <= 10; k += 2) CHECK(cs.q(k) == 0.0);
}

TEST_CASE("cauchy series matches the tangent Taylor coefficients") {
    // tan(pi d) expanded: q_k = pi^k T_k with T = 1, 1/3, 2/15, 17/315, ...
    const auto cs = build(cqf::make_stable_symmetric(1.0), 5);
    const std::vector<double> tk = {1.0, 1.0 / 3.0, 2.0 / 15.0, 17.0 / 315.0,
                                    62.0 / 2835.0};
    for (int j = 0; j < 5; ++j)
        CHECK(cs.q(2 * j + 1) ==
              doctest::Approx(tk[j] * std::pow(kPi, 2 * j + 1)).epsilon(1e-11));
}

TEST_CASE("extended and double assembly agree at shallow depth") {
    const auto d = build(cqf::make_stable_symmetric(1.5), 6);
    const auto mp = build(cqf::make_stable_symmetric(1.5), 6, true);
    for (int j = 0; j < 6; ++j)
        CHECK(d.q(2 * j + 1) == doctest::Approx(mp.q(2 * j + 1)).epsilon(1e-10));
}

TEST_CASE("batch assembly equals individual extended builds") {
    const auto batch = cqf::build_series_batch(
        {cqf::make_gaussian(0.0), cqf::make_stable_symmetric(1.0)}, 5);
    REQUIRE(batch.size() == 2);
    const auto g = build(cqf::make_gaussian(0.0), 5, true);
    const auto c = build(cqf::make_stable_symmetric(1.0), 5, true);
    for (int j = 0; j < 5; ++j) {
        CHECK(batch[0].q(2 * j + 1) == g.q(2 * j + 1));
        CHECK(batch[1].q(2 * j + 1) == c.q(2 * j + 1));
    }
}

TEST_CASE("pseq overload agrees with the streaming overload") {
    const auto pseq = cqf::compute_p_sequence(9);
    const auto from_pseq =
        cqf::build_series(cqf::make_student(3.0), pseq, 5, kCfg);
    const auto streamed = build(cqf::make_student(3.0), 5);
    CHECK(from_pseq.qcoeffs == streamed.qcoeffs);
    CHECK_THROWS_AS(cqf::build_series(cqf::make_student(3.0), pseq, 20, kCfg),
                    cqf::DomainError);
}

TEST_CASE("asymmetric gaussian series is the shifted standard normal") {
    // w_mu(u) = N^{-1}(u) + mu near the anchor u0 = N(-mu)
    const auto cs = build(cqf::make_gaussian(1.0), 12);
    REQUIRE_FALSE(cs.symmetric);
    CHECK(cs.u0 == doctest::Approx(0.15865525393146).epsilon(1e-9));
    // truncation error grows away from the anchor; tolerances follow suit
    for (double u : {0.10, 0.14, 0.18}) {
        const double expected = cqf::inv_normal_cdf(u) + 1.0;
        CHECK(cqf::eval_series(cs, u) == doctest::Approx(expected).epsilon(1e-5));
    }
    CHECK(cqf::eval_series(cs, 0.25) ==
          doctest::Approx(cqf::inv_normal_cdf(0.25) + 1.0).epsilon(1e-3));
}

TEST_CASE("scale invariance through a custom descriptor") {
    // X ~ N(0, sigma^2): phi(t) = exp(-sigma^2 t^2 / 2), w_sigma = sigma w_1
    const double sigma = 2.0;
    const auto cf = cqf::make_custom(
        [sigma](double t) {
            return std::complex<double>(std::exp(-0.5 * sigma * sigma * t * t),
                                        0.0);
        },
        true, std::nullopt);
    const auto cs = build(cf, 8);
    const auto ref = build(cqf::make_gaussian(0.0), 8);
    CHECK(cs.wdash == doctest::Approx(sigma * ref.wdash).epsilon(1e-10));
    for (double u : {0.3, 0.55, 0.7})
        CHECK(cqf::eval_series(cs, u) ==
              doctest::Approx(sigma * cqf::eval_series(ref, u)).epsilon(1e-10));
}

TEST_CASE("horner coefficients rescale the odd series") {
    const auto cs = build(cqf::make_stable_symmetric(1.5), 4);
    const auto a = cqf::horner_coeffs(cs);
    REQUIRE(a.size() == 4);
    CHECK(a[0] == doctest::Approx(cs.q(1) / 2.0).epsilon(1e-15));
    CHECK(a[1] == doctest::Approx(cs.q(3) / 8.0).epsilon(1e-15));
    CHECK(a[2] == doctest::Approx(cs.q(5) / 32.0).epsilon(1e-15));

    auto asym = cs;
    asym.symmetric = false;
    CHECK_THROWS_AS(cqf::horner_coeffs(asym), cqf::ShapeError);
}

TEST_CASE("series evaluation derivative is consistent with differencing") {
    const auto cs = build(cqf::make_gaussian(0.0), 10);
    for (double u : {0.35, 0.5, 0.62}) {
        const double h = 1e-6;
        const double fd =
            (cqf::eval_series(cs, u + h) - cqf::eval_series(cs, u - h)) /
            (2.0 * h);
        CHECK(cqf::eval_series_derivative(cs, u) ==
              doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("antisymmetry of symmetric series") {
    const auto cs = build(cqf::make_student(3.0), 8);
    for (double u : {0.12, 0.3, 0.48})
        CHECK(cqf::eval_series(cs, u) ==
              doctest::Approx(-cqf::eval_series(cs, 1.0 - u)).epsilon(1e-13));
}

TEST_CASE("invalid term counts are rejected") {
    CHECK_THROWS_AS(build(cqf::make_gaussian(0.0), 0), cqf::DomainError);
}
