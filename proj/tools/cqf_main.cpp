#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqf/codegen.hpp"
#include "cqf/diagnostics.hpp"
#include "cqf/sampler.hpp"
#include "cqf/specfun.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct DistOptions {
    std::string name;
    std::string spec_json; // overrides flags when given
    double mu = 0.0;
    double df = 3.0;
    double alpha = 1.5;
    double beta = 0.0;
    double lambda = -0.5;
    double delta = 1.0;
    double r = 1.0;
};

void add_dist_options(CLI::App* cmd, DistOptions& d) {
    cmd->add_option("dist", d.name,
                    "distribution: gaussian|student|stable|sgh|levy-area-p|"
                    "custom-vg")
        ->required();
    cmd->add_option("--spec", d.spec_json, "full JSON distribution spec");
    cmd->add_option("--mu", d.mu, "gaussian location");
    cmd->add_option("--df", d.df, "student degrees of freedom");
    cmd->add_option("--alpha", d.alpha, "stable/sgh/vg alpha");
    cmd->add_option("--beta", d.beta, "stable skew");
    cmd->add_option("--lambda", d.lambda, "sgh/vg lambda");
    cmd->add_option("--delta", d.delta, "sgh delta");
    cmd->add_option("--r", d.r, "levy-area unit-time radial distance");
}

cqf::CharFnDescriptor make_descriptor(const DistOptions& d) {
    if (!d.spec_json.empty()) return cqf::descriptor_from_spec(d.spec_json);
    nlohmann::json j;
    if (d.name == "gaussian") {
        j = {{"dist", "gaussian"}, {"mu", d.mu}};
    } else if (d.name == "student") {
        j = {{"dist", "student"}, {"n", d.df}};
    } else if (d.name == "stable") {
        j = {{"dist", "stable"}, {"alpha", d.alpha}, {"beta", d.beta}};
    } else if (d.name == "sgh") {
        j = {{"dist", "sgh"},
             {"lambda", d.lambda},
             {"alpha", d.alpha},
             {"delta", d.delta}};
    } else if (d.name == "levy-area-p") {
        j = {{"dist", "levy-area-p"}, {"r", d.r}};
    } else if (d.name == "custom-vg" || d.name == "vg") {
        j = {{"dist", "vg"}, {"lambda", d.lambda}, {"alpha", d.alpha}};
    } else {
        throw cqf::DomainError("unknown distribution: " + d.name);
    }
    return cqf::descriptor_from_spec(j.dump());
}

cqf::QuadratureConfig load_quad_config(const std::string& path) {
    cqf::QuadratureConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw cqf::IoError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw cqf::IoError(std::string("config file: ") + e.what());
    }
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("abs_tol")) cfg.abs_tol = j["abs_tol"].get<double>();
    if (j.contains("trunc_threshold"))
        cfg.trunc_threshold = j["trunc_threshold"].get<double>();
    if (j.contains("max_subdivisions"))
        cfg.max_subdivisions = j["max_subdivisions"].get<int>();
    return cfg;
}

// Cached build: shallow orders go through the serialized P-sequence cache in
// $CQF_CACHE_DIR; deep orders stream the recurrence instead.
cqf::CentralSeries build_series_cached(const cqf::CharFnDescriptor& cf,
                                       const cqf::SeriesOptions& opt,
                                       const cqf::QuadratureConfig& cfg) {
    const int order = cf.symmetric ? 2 * opt.terms - 1 : opt.terms;
    const char* cache_dir = std::getenv("CQF_CACHE_DIR");
    if (cache_dir == nullptr || opt.extended_precision || order < 2 ||
        order > 45)
        return cqf::build_series(cf, opt, cfg);

    namespace fs = std::filesystem;
    const fs::path path =
        fs::path(cache_dir) / ("pseq_" + std::to_string(order) + ".json");
    std::vector<cqf::DiffPoly> pseq;
    if (fs::exists(path)) {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        pseq = cqf::deserialize_p_sequence(text);
    } else {
        pseq = cqf::compute_p_sequence(order);
        std::error_code ec;
        fs::create_directories(fs::path(cache_dir), ec);
        std::ofstream out(path);
        if (out) out << cqf::serialize_p_sequence(pseq);
    }
    return cqf::build_series(cf, pseq, opt.terms, cfg);
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw cqf::IoError("cannot open output file: " + out);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantile functions from characteristic functions"};
    app.require_subcommand(1);

    DistOptions dist;
    std::string config_path, out_path;
    cqf::SeriesOptions sopt;
    app.add_option("--config", config_path,
                   "JSON file overriding quadrature tolerances")
        ->envname("CQF_CONFIG");

    auto add_common = [&](CLI::App* cmd) {
        add_dist_options(cmd, dist);
        cmd->add_option("--terms", sopt.terms, "series terms (default 35)");
        cmd->add_flag("--extended", sopt.extended_precision,
                      "multiprecision coefficient assembly");
        cmd->add_option("--out,-o", out_path, "output file (default stdout)");
    };

    auto* cmd_series = app.add_subcommand("series", "build series, emit coefficient JSON");
    add_common(cmd_series);

    auto* cmd_u0 = app.add_subcommand("u0", "print the zero-quantile location");
    add_dist_options(cmd_u0, dist);

    double u_arg = 0.5;
    bool no_tail = false;
    auto* cmd_quantile = app.add_subcommand("quantile", "evaluate w(u)");
    add_common(cmd_quantile);
    cmd_quantile->add_option("--u", u_arg, "probability level in (0,1)")
        ->required();
    cmd_quantile->add_flag("--no-tail", no_tail, "central series only");

    std::size_t n_samples = 10000;
    std::uint64_t seed = 1;
    double delta_t = 1.0;
    auto* cmd_sample = app.add_subcommand("sample", "inverse-transform samples to CSV");
    add_common(cmd_sample);
    cmd_sample->add_option("--n", n_samples, "sample count");
    cmd_sample->add_option("--seed", seed, "PRNG seed");
    cmd_sample->add_option("--delta-t", delta_t, "levy-area time step");
    bool levy_area = false;
    cmd_sample->add_flag("--levy-area", levy_area,
                         "sample the full Levy area (loop + conditioned part)");
    bool gaussian_tail = false;
    cmd_sample->add_flag("--gaussian-tail", gaussian_tail,
                         "use the Gaussian small-s approximation for extreme "
                         "Levy-area tail draws");

    double grid_start = 0.1, grid_end = 0.9;
    int grid_n = 81;
    std::string oracle_spec;
    auto* cmd_diagnose = app.add_subcommand("diagnose", "round-trip error report");
    add_common(cmd_diagnose);
    cmd_diagnose->add_option("--grid-start", grid_start, "first grid point");
    cmd_diagnose->add_option("--grid-end", grid_end, "last grid point");
    cmd_diagnose->add_option("--grid-n", grid_n, "grid size");
    cmd_diagnose->add_option("--oracle", oracle_spec,
                             "reference: 'normal', 'cauchy', or a table file");

    std::string lang = "c";
    int digits = 17;
    auto* cmd_codegen = app.add_subcommand("codegen", "emit quantile source code");
    add_common(cmd_codegen);
    cmd_codegen->add_option("--lang", lang, "c | json");
    cmd_codegen->add_option("--digits", digits, "significant digits");

    CLI11_PARSE(app, argc, argv);

    try {
        const cqf::QuadratureConfig cfg = load_quad_config(config_path);

        if (cmd_u0->parsed()) {
            const auto cf = make_descriptor(dist);
            std::printf("%.12f\n", cqf::zero_location(cf, cfg));
            return 0;
        }
        if (cmd_series->parsed()) {
            const auto cf = make_descriptor(dist);
            const auto cs = build_series_cached(cf, sopt, cfg);
            write_output(out_path, cqf::emit_coeff_json(cs).text + "\n");
            return 0;
        }
        if (cmd_quantile->parsed()) {
            const auto cf = make_descriptor(dist);
            const auto cs = build_series_cached(cf, sopt, cfg);
            cqf::CompositeQuantile q;
            if (no_tail) {
                q.central = cs;
                q.reflection = cs.symmetric;
            } else {
                q = cqf::make_composite(cf, cs, cfg);
            }
            if (!q.upper_tail && (u_arg > 0.94 || u_arg < 0.06))
                std::fprintf(stderr,
                             "cqf: warning: u=%g is outside the central "
                             "series validity range and no tail model is "
                             "attached\n",
                             u_arg);
            std::printf("%.15g\n", cqf::eval_quantile(q, u_arg));
            return 0;
        }
        if (cmd_sample->parsed()) {
            cqf::SampleBatch batch;
            if (levy_area || dist.name == "levy-area") {
                batch = cqf::sample_levy_area(dist.r, delta_t, n_samples, seed,
                                              sopt, cfg, gaussian_tail);
            } else {
                const auto cf = make_descriptor(dist);
                const auto cs = build_series_cached(cf, sopt, cfg);
                const auto q = cqf::make_composite(cf, cs, cfg);
                batch = cqf::sample(q, n_samples, seed);
            }
            std::ostringstream os;
            os.precision(17);
            os << "# dist=" << batch.dist << " seed=" << batch.seed
               << " n=" << batch.n << "\n";
            for (double v : batch.values) os << v << "\n";
            write_output(out_path, os.str());
            return 0;
        }
        if (cmd_diagnose->parsed()) {
            const auto cf = make_descriptor(dist);
            const auto cs = build_series_cached(cf, sopt, cfg);
            const auto q = cqf::make_composite(cf, cs, cfg);
            const auto grid = cqf::uniform_grid(grid_start, grid_end, grid_n);
            if (!oracle_spec.empty()) {
                std::function<double(double)> oracle;
                if (oracle_spec == "normal")
                    oracle = [](double u) { return cqf::inv_normal_cdf(u); };
                else if (oracle_spec == "cauchy")
                    oracle = [](double u) { return std::tan(kPi * (u - 0.5)); };
                else
                    oracle = cqf::load_table_oracle(oracle_spec);
                write_output(out_path,
                             cqf::reference_scan(q, oracle, grid).to_csv());
            } else {
                write_output(out_path, cqf::round_trip(q, cf, grid, cfg).to_csv());
            }
            return 0;
        }
        if (cmd_codegen->parsed()) {
            const auto cf = make_descriptor(dist);
            const auto cs = build_series_cached(cf, sopt, cfg);
            if (lang == "c")
                write_output(out_path, cqf::emit_horner_c(cs, digits).text);
            else if (lang == "json")
                write_output(out_path, cqf::emit_coeff_json(cs).text + "\n");
            else
                throw cqf::DomainError("codegen: unknown --lang " + lang);
            return 0;
        }
    } catch (const cqf::IoError& e) {
        std::fprintf(stderr, "cqf: io error: %s\n", e.what());
        return 3;
    } catch (const cqf::MathError& e) {
        std::fprintf(stderr, "cqf: error: %s\n", e.what());
        return 2;
    }
    return 0;
}
