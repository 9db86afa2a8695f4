#include <doctest.h>

#include <cmath>

#include "cqf/moments.hpp"
#include "cqf/specfun.hpp"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cqf::QuadratureConfig kCfg{};
}

TEST_CASE("even moments: quadrature matches closed forms") {
    for (const auto& cf : {cqf::make_gaussian(0.0), cqf::make_student(3.0),
                           cqf::make_stable_symmetric(1.5)}) {
        REQUIRE(cf.has_closed_moments());
        for (int k = 0; k <= 4; ++k) {
            const double quad = cqf::even_moment(cf, k, kCfg);
            const double closed = cf.closed_moments(k);
            CHECK(quad == doctest::Approx(closed).epsilon(1e-10));
        }
    }
}

TEST_CASE("even moments refuse to integrate past the advertised order") {
    const auto vg = cqf::make_vg(2.0, 1.0); // moments exist for k < 3 only
    CHECK_NOTHROW(cqf::even_moment(vg, 1, kCfg));
    CHECK_THROWS_AS(cqf::even_moment(vg, 2, kCfg), cqf::DivergenceError);
}

TEST_CASE("derivatives at zero recover density values and slopes") {
    // gaussian: f(0) = 1/sqrt(2 pi), f'(0) = 0, f''(0) = -1/sqrt(2 pi)
    const auto g = cqf::make_gaussian(0.0);
    const double f0 = 1.0 / std::sqrt(2.0 * kPi);
    CHECK(cqf::derivative_at_zero(g, 0, kCfg) == doctest::Approx(f0).epsilon(1e-11));
    CHECK(cqf::derivative_at_zero(g, 1, kCfg) == doctest::Approx(0.0));
    CHECK(cqf::derivative_at_zero(g, 2, kCfg) ==
          doctest::Approx(-f0).epsilon(1e-10));

    // shifted gaussian: f(0) = standard normal density at -mu
    const auto s = cqf::make_gaussian(1.0);
    const double fs = std::exp(-0.5) / std::sqrt(2.0 * kPi);
    CHECK(cqf::derivative_at_zero(s, 0, kCfg) == doctest::Approx(fs).epsilon(1e-10));
    // f'(0) = mu * f(0) for the unit-variance gaussian density
    CHECK(cqf::derivative_at_zero(s, 1, kCfg) == doctest::Approx(fs).epsilon(1e-9));
}

TEST_CASE("moment vector provenance and symmetry zeros") {
    const auto mv = cqf::build_moment_vector(cqf::make_gaussian(0.0), 6, kCfg);
    REQUIRE(mv.dvals.size() == 7);
    for (int k = 1; k <= 5; k += 2) {
        CHECK(mv.dvals[k] == 0.0);
        CHECK(mv.provenance[k] == cqf::MomentSource::Symmetry);
    }
    CHECK(mv.provenance[0] == cqf::MomentSource::ClosedForm);
    CHECK(mv.dvals[0] == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-12));
    // D_2 = -E_1 = -1/sqrt(2 pi) for the gaussian
    CHECK(mv.dvals[2] == doctest::Approx(-1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("gil-pelaez cdf against closed references") {
    const auto cauchy = cqf::make_stable_symmetric(1.0);
    CHECK(cqf::gil_pelaez_cdf(cauchy, 0.0, kCfg) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(cqf::gil_pelaez_cdf(cauchy, 1.0, kCfg) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(cqf::gil_pelaez_cdf(cauchy, -1.0, kCfg) == doctest::Approx(0.25).epsilon(1e-12));

    const auto g = cqf::make_gaussian(0.0);
    auto phi_cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    for (double x : {-2.0, -0.3, 0.7, 1.0, 3.0})
        CHECK(cqf::gil_pelaez_cdf(g, x, kCfg) ==
              doctest::Approx(phi_cdf(x)).epsilon(1e-10));
}

TEST_CASE("gil-pelaez oscillatory branch far from the origin") {
    const auto cauchy = cqf::make_stable_symmetric(1.0);
    auto cdf = [](double x) { return 0.5 + std::atan(x) / kPi; };
    for (double x : {20.0, 100.0}) {
        CHECK(cqf::gil_pelaez_cdf(cauchy, x, kCfg) ==
              doctest::Approx(cdf(x)).epsilon(1e-9));
        CHECK(cqf::gil_pelaez_cdf(cauchy, -x, kCfg) ==
              doctest::Approx(cdf(-x)).epsilon(1e-7));
    }
    const auto g = cqf::make_gaussian(0.0);
    CHECK(cqf::gil_pelaez_cdf(g, 10.0, kCfg) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cdf is monotone along a coarse grid") {
    const auto cf = cqf::make_student(3.0);
    double prev = 0.0;
    for (double x = -4.0; x <= 4.0; x += 0.8) {
        const double f = cqf::gil_pelaez_cdf(cf, x, kCfg);
        CHECK(f >= prev);
        prev = f;
    }
}

TEST_CASE("zero location: symmetric anchors and the skewed stable family") {
    CHECK(cqf::zero_location(cqf::make_gaussian(0.0), kCfg) == 0.5);
    CHECK(cqf::zero_location(cqf::make_student(3.0), kCfg) == 0.5);

    // closed form u0 = 1/2 - arctan(beta tan(pi alpha/2)) / (pi alpha)
    for (double alpha : {0.75, 1.5}) {
        for (double beta : {-0.5, 0.5, 1.0}) {
            const double closed =
                0.5 - std::atan(beta * std::tan(0.5 * kPi * alpha)) / (kPi * alpha);
            const double quad = cqf::zero_location(
                cqf::make_stable_asymmetric(alpha, beta), kCfg);
            CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
        }
    }

    // gaussian mu = 1: u0 = N(-1)
    CHECK(cqf::zero_location(cqf::make_gaussian(1.0), kCfg) ==
          doctest::Approx(0.5 * std::erfc(1.0 / std::sqrt(2.0))).epsilon(1e-10));
}
