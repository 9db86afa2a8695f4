#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "cqf/diagnostics.hpp"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cqf::QuadratureConfig kCfg{};
}

TEST_CASE("uniform grid endpoints and spacing") {
    const auto g = cqf::uniform_grid(0.1, 0.9, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == doctest::Approx(0.1));
    CHECK(g.back() == doctest::Approx(0.9));
    CHECK(g[2] == doctest::Approx(0.5));
    CHECK(cqf::uniform_grid(0.3, 0.7, 1).front() == doctest::Approx(0.3));
}

TEST_CASE("round trip on the gaussian is small in the central range") {
    cqf::SeriesOptions opt;
    opt.terms = 12;
    const auto cf = cqf::make_gaussian(0.0);
    const auto q = cqf::make_composite(cf, cqf::build_series(cf, opt, kCfg), kCfg);
    const auto rep = cqf::round_trip(q, cf, cqf::uniform_grid(0.35, 0.65, 7), kCfg);
    CHECK(rep.max_abs_rte < 1e-9);
    CHECK(rep.max_abs_eqe < 1e-8);
    REQUIRE(rep.rte.size() == 7);
    // at the median the round trip is essentially exact
    CHECK(std::abs(rep.rte[3]) < 1e-12);

    const std::string csv = rep.to_csv();
    CHECK(csv.find("# round-trip") != std::string::npos);
    CHECK(csv.find("u,w,rte,eqe") != std::string::npos);
}

TEST_CASE("round trip rejects grid points outside (0,1)") {
    cqf::SeriesOptions opt;
    opt.terms = 4;
    const auto cf = cqf::make_gaussian(0.0);
    const auto q = cqf::make_composite(cf, cqf::build_series(cf, opt, kCfg), kCfg);
    CHECK_THROWS_AS(cqf::round_trip(q, cf, {0.5, 1.0}, kCfg), cqf::DomainError);
}

TEST_CASE("reference scan against the exact cauchy quantile") {
    cqf::SeriesOptions opt;
    opt.terms = 12;
    const auto cf = cqf::make_stable_symmetric(1.0);
    const auto q = cqf::make_composite(cf, cqf::build_series(cf, opt, kCfg), kCfg);
    const auto scan = cqf::reference_scan(
        q, [](double u) { return std::tan(kPi * (u - 0.5)); },
        cqf::uniform_grid(0.25, 0.75, 11));
    CHECK(scan.max_rel_err < 1e-6);
    CHECK(scan.log10_rel_err.size() == 11);
    CHECK(scan.to_csv().find("u,w,reference,log10_rel_err") != std::string::npos);
}

TEST_CASE("table oracle parses comments and headers and interpolates") {
    const char* path = "diag_table_test.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "% another comment\n";
        f << "u quantile\n"; // header row, skipped because it fails to parse
        f << "0.4  2.0\n";
        f << "\n";
        f << "0.2 \t 1.0\n"; // unsorted on purpose
        f << "0.6  4.0\n";
    }
    const auto oracle = cqf::load_table_oracle(path);
    CHECK(oracle(0.2) == doctest::Approx(1.0));
    CHECK(oracle(0.3) == doctest::Approx(1.5));
    CHECK(oracle(0.5) == doctest::Approx(3.0));
    CHECK(oracle(0.6) == doctest::Approx(4.0));
    CHECK_THROWS_AS(oracle(0.7), cqf::DomainError);
    CHECK_THROWS_AS(oracle(0.1), cqf::DomainError);
    std::remove(path);

    CHECK_THROWS_AS(cqf::load_table_oracle("no_such_table_file.txt"),
                    cqf::IoError);
}
