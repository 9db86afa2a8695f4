#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cqf/moments.hpp"
#include "cqf/tails.hpp"

namespace cqf {

// Round-trip error F(w(u)) - u and the Newton-normalized quantile error
// estimate rte / f(w(u)) over a u-grid.
struct DiagnosticsReport {
    std::vector<double> grid;
    std::vector<double> w;
    std::vector<double> rte;
    std::vector<double> eqe;
    double max_abs_rte = 0.0;
    double max_abs_eqe = 0.0;
    double elapsed_seconds = 0.0;

    std::string to_csv() const; // columns u,w,rte,eqe with '#' metadata
};

std::vector<double> uniform_grid(double lo, double hi, int n);

DiagnosticsReport round_trip(const CompositeQuantile& q,
                             const CharFnDescriptor& cf,
                             const std::vector<double>& grid,
                             const QuadratureConfig& cfg);

// log10 relative error against a reference quantile oracle.
struct ReferenceScan {
    std::vector<double> grid;
    std::vector<double> w;
    std::vector<double> reference;
    std::vector<double> log10_rel_err;
    double max_rel_err = 0.0;

    std::string to_csv() const;
};

ReferenceScan reference_scan(const CompositeQuantile& q,
                             const std::function<double(double)>& oracle,
                             const std::vector<double>& grid);

// Whitespace-separated u/quantile table; '#' and '%' comment lines and
// non-numeric header rows are skipped. Returns a linear-interpolating oracle
// restricted to the table's u-range.
std::function<double(double)> load_table_oracle(const std::string& path);

} // namespace cqf
