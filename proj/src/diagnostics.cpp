#include "cqf/diagnostics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cqf {

namespace {

// density at w(u): series derivative inside the central range, a centered
// CDF difference beyond the tail join.
double density_at(const CompositeQuantile& q, const CharFnDescriptor& cf,
                  double u, double w, const QuadratureConfig& cfg) {
    bool central = true;
    if (q.upper_tail) {
        const double us = q.upper_tail->u_switch;
        central = (u <= us) && (!q.reflection || u >= 1.0 - us);
    }
    if (central) {
        const double wd = eval_series_derivative(q.central, u);
        if (wd > 0.0) return 1.0 / wd;
    }
    const double h = std::max(1e-6, 1e-6 * std::abs(w));
    return (gil_pelaez_cdf(cf, w + h, cfg) - gil_pelaez_cdf(cf, w - h, cfg)) /
           (2.0 * h);
}

} // namespace

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return g;
}

DiagnosticsReport round_trip(const CompositeQuantile& q,
                             const CharFnDescriptor& cf,
                             const std::vector<double>& grid,
                             const QuadratureConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    DiagnosticsReport rep;
    rep.grid = grid;
    for (double u : grid) {
        if (!(u > 0.0 && u < 1.0))
            throw DomainError("round_trip: grid must lie in (0,1)");
        const double w = eval_quantile(q, u);
        const double rte = gil_pelaez_cdf(cf, w, cfg) - u;
        const double f = density_at(q, cf, u, w, cfg);
        rep.w.push_back(w);
        rep.rte.push_back(rte);
        rep.eqe.push_back(f > 0.0 ? rte / f : std::nan(""));
        rep.max_abs_rte = std::max(rep.max_abs_rte, std::abs(rte));
        if (f > 0.0)
            rep.max_abs_eqe = std::max(rep.max_abs_eqe, std::abs(rte / f));
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

std::string DiagnosticsReport::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "# round-trip diagnostics, max|rte|=" << max_abs_rte
       << ", max|eqe|=" << max_abs_eqe << ", seconds=" << elapsed_seconds
       << "\n";
    os << "u,w,rte,eqe\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        os << grid[i] << "," << w[i] << "," << rte[i] << "," << eqe[i] << "\n";
    return os.str();
}

ReferenceScan reference_scan(const CompositeQuantile& q,
                             const std::function<double(double)>& oracle,
                             const std::vector<double>& grid) {
    ReferenceScan scan;
    scan.grid = grid;
    for (double u : grid) {
        const double w = eval_quantile(q, u);
        const double ref = oracle(u);
        const double rel =
            std::abs(w - ref) / std::max(std::abs(ref), 1e-300);
        scan.w.push_back(w);
        scan.reference.push_back(ref);
        scan.log10_rel_err.push_back(rel > 0.0 ? std::log10(rel) : -18.0);
        scan.max_rel_err = std::max(scan.max_rel_err, rel);
    }
    return scan;
}

std::string ReferenceScan::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "# reference scan, max_rel_err=" << max_rel_err << "\n";
    os << "u,w,reference,log10_rel_err\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        os << grid[i] << "," << w[i] << "," << reference[i] << ","
           << log10_rel_err[i] << "\n";
    return os.str();
}

std::function<double(double)> load_table_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open reference table: " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;
        std::istringstream ls(line.substr(first));
        double u, w;
        if (ls >> u >> w) rows.emplace_back(u, w); // header rows fail to parse
    }
    if (rows.size() < 2)
        throw IoError("reference table has fewer than two numeric rows: " + path);
    std::sort(rows.begin(), rows.end());
    return [rows, path](double u) -> double {
        if (u < rows.front().first || u > rows.back().first)
            throw DomainError("reference table does not cover u");
        auto hi = std::lower_bound(
            rows.begin(), rows.end(), std::make_pair(u, -1e300));
        if (hi == rows.begin()) return hi->second;
        auto lo = hi - 1;
        if (hi == rows.end() || hi->first == lo->first) return lo->second;
        const double t = (u - lo->first) / (hi->first - lo->first);
        return lo->second + t * (hi->second - lo->second);
    };
}

} // namespace cqf
