#include "cqf/series.hpp"

#include <cmath>
#include <cstdio>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "cqf/specfun.hpp"

namespace cqf {

namespace {

// Deep coefficients cancel catastrophically: the intermediate monomial
// values reach ~40 decimal digits above the assembled q_n near order 70,
// so 100 digits keeps comfortably more than double accuracy in the result.
using MP = boost::multiprecision::cpp_bin_float_100;

std::string spec_label(const CharFnDescriptor& cf) {
    nlohmann::json j;
    j["dist"] = cf.name;
    for (const auto& [k, v] : cf.params) j[k] = v;
    return j.dump();
}

// q_n = wdash^{n+1} P_n[wdash, 0] / n! for n >= 2, computed in Real.
template <class Real>
class CoeffAssembler {
  public:
    CoeffAssembler(std::vector<Real> bvals, Real wdash, int order)
        : bvals_(std::move(bvals)), wdash_(wdash), fact_(2),
          wpow_(wdash * wdash * wdash), qcoeffs_(order, 0.0) {
        qcoeffs_[0] = static_cast<double>(wdash);
    }

    void visit(int n, const DiffPoly& p) {
        if (n < 2) return;
        while (next_ < n) advance_scales();
        if (skip_even_ && n % 2 == 0) return;
        const Real val =
            reduced_ ? substitute<Real>(symmetric_reduce(p), bvals_, wdash_)
                     : substitute<Real>(p, bvals_, wdash_);
        qcoeffs_[n - 1] = static_cast<double>(wpow_ * val / fact_);
    }

    // For callers that share one reduction across several assemblers.
    void visit_prepared(int n, const DiffPoly& reduced) {
        if (n < 2) return;
        while (next_ < n) advance_scales();
        if (skip_even_ && n % 2 == 0) return;
        const Real val = substitute<Real>(reduced, bvals_, wdash_);
        qcoeffs_[n - 1] = static_cast<double>(wpow_ * val / fact_);
    }

    void set_skip_even(bool s) { skip_even_ = s; }
    // Substitution table holds E-values and each P_n is symmetric-reduced
    // first; this keeps the expensive arithmetic off the vanishing terms.
    void set_reduced(bool r) { reduced_ = r; }
    const std::vector<double>& qcoeffs() const { return qcoeffs_; }

  private:
    void advance_scales() {
        ++next_;
        fact_ *= next_;
        wpow_ *= wdash_;
    }

    std::vector<Real> bvals_;
    Real wdash_;
    Real fact_;  // n!
    Real wpow_;  // wdash^{n+1}
    int next_ = 2;
    bool skip_even_ = false;
    bool reduced_ = false;
    std::vector<double> qcoeffs_;
};

std::vector<MP> mp_even_moments(const CharFnDescriptor& cf, int jmax) {
    const MP pi = pi_const<MP>();
    std::vector<MP> e(jmax + 1);
    if (cf.name == "gaussian" && cf.params.at("mu") == 0.0) {
        for (int j = 0; j <= jmax; ++j)
            e[j] = pow(MP(2), MP(j) - MP(0.5)) *
                   gamma_spouge<MP>(MP(j) + MP(0.5)) / pi;
    } else if (cf.name == "stable") {
        const MP alpha(cf.params.at("alpha"));
        for (int j = 0; j <= jmax; ++j)
            e[j] = gamma_spouge<MP>((2 * MP(j) + 1) / alpha) / (alpha * pi);
    } else {
        throw DomainError(
            "extended-precision series requires closed gamma-form moments "
            "(gaussian or symmetric stable)");
    }
    return e;
}

void warn_if_not_monotone(const CentralSeries& cs) {
    for (int i = 1; i < 40; ++i) {
        const double u = 0.05 + 0.9 * i / 40.0;
        if (eval_series_derivative(cs, u) <= 0.0) {
            std::fprintf(stderr,
                         "cqf: warning: series for %s not monotone near u=%.3f; "
                         "truncation order is too low for this range\n",
                         cs.dist.c_str(), u);
            return;
        }
    }
}

CentralSeries finish_series(const CharFnDescriptor& cf, double u0, double wdash,
                            std::vector<double> qcoeffs, int order) {
    CentralSeries cs;
    cs.u0 = u0;
    cs.wdash = wdash;
    cs.qcoeffs = std::move(qcoeffs);
    cs.symmetric = cf.symmetric;
    cs.nterms = order;
    cs.dist = spec_label(cf);
    warn_if_not_monotone(cs);
    return cs;
}

CentralSeries build_series_double(
    const CharFnDescriptor& cf, int terms, const QuadratureConfig& cfg,
    const std::function<void(const std::function<void(int, const DiffPoly&)>&)>&
        stream) {
    const int order = cf.symmetric ? 2 * terms - 1 : terms;
    const MomentVector mv = build_moment_vector(cf, std::max(order - 1, 0), cfg);
    const double wdash = slope_at_anchor(mv);
    const double u0 = zero_location(cf, cfg);
    std::vector<double> b(std::max(order - 1, 1), 0.0);
    for (std::size_t m = 0; m + 1 < mv.dvals.size() && m < b.size(); ++m)
        b[m] = -mv.dvals[m + 1];
    CoeffAssembler<double> asmb(std::move(b), wdash, order);
    asmb.set_skip_even(cf.symmetric);
    stream([&](int n, const DiffPoly& p) { asmb.visit(n, p); });
    return finish_series(cf, u0, wdash, asmb.qcoeffs(), order);
}

CoeffAssembler<MP> make_mp_assembler(const CharFnDescriptor& cf, int terms) {
    if (!cf.symmetric)
        throw DomainError("extended-precision series: symmetric only");
    const int order = 2 * terms - 1;
    const std::vector<MP> e = mp_even_moments(cf, std::max(terms - 1, 0) + 1);
    CoeffAssembler<MP> asmb(e, 1 / e[0], order);
    asmb.set_skip_even(true);
    asmb.set_reduced(true);
    return asmb;
}

CentralSeries build_series_extended(
    const CharFnDescriptor& cf, int terms,
    const std::function<void(const std::function<void(int, const DiffPoly&)>&)>&
        stream) {
    CoeffAssembler<MP> asmb = make_mp_assembler(cf, terms);
    stream([&](int n, const DiffPoly& p) { asmb.visit(n, p); });
    return finish_series(cf, 0.5, asmb.qcoeffs()[0], asmb.qcoeffs(),
                         2 * terms - 1);
}

// Symmetric descriptors with gamma-form moments lose too many digits in
// double assembly once the order passes the low twenties; route them
// through the multiprecision path automatically.
bool wants_extended(const CharFnDescriptor& cf, int order) {
    if (!cf.symmetric || order <= 21) return false;
    if (cf.name == "stable") return true;
    return cf.name == "gaussian" && cf.params.at("mu") == 0.0;
}

} // namespace

double slope_at_anchor(const MomentVector& mv) {
    if (mv.dvals.empty() || !std::isfinite(mv.dvals[0]) || mv.dvals[0] <= 0.0)
        throw DomainError("slope_at_anchor: degenerate density, D_0 <= 0");
    return 1.0 / mv.dvals[0];
}

CentralSeries build_series(const CharFnDescriptor& cf,
                           const std::vector<DiffPoly>& pseq, int terms,
                           const QuadratureConfig& cfg) {
    if (terms < 1) throw DomainError("build_series: terms must be >= 1");
    const int order = cf.symmetric ? 2 * terms - 1 : terms;
    if (order >= 2 && static_cast<int>(pseq.size()) < order - 1)
        throw DomainError("build_series: P-sequence does not cover order " +
                          std::to_string(order));
    auto stream = [&](const std::function<void(int, const DiffPoly&)>& visit) {
        for (int n = 2; n <= order; ++n) visit(n, pseq[n - 2]);
    };
    return build_series_double(cf, terms, cfg, stream);
}

CentralSeries build_series(const CharFnDescriptor& cf, const SeriesOptions& opt,
                           const QuadratureConfig& cfg) {
    if (opt.terms < 1) throw DomainError("build_series: terms must be >= 1");
    const int order = cf.symmetric ? 2 * opt.terms - 1 : opt.terms;
    auto stream = [&](const std::function<void(int, const DiffPoly&)>& visit) {
        if (order >= 2) stream_p_sequence(order, visit);
    };
    if (opt.extended_precision || wants_extended(cf, order))
        return build_series_extended(cf, opt.terms, stream);
    return build_series_double(cf, opt.terms, cfg, stream);
}

std::vector<CentralSeries> build_series_batch(
    const std::vector<CharFnDescriptor>& cfs, int terms) {
    if (terms < 1) throw DomainError("build_series_batch: terms must be >= 1");
    std::vector<CoeffAssembler<MP>> asmbs;
    asmbs.reserve(cfs.size());
    for (const auto& cf : cfs) asmbs.push_back(make_mp_assembler(cf, terms));
    const int order = 2 * terms - 1;
    if (order >= 2)
        stream_p_sequence(order, [&](int n, const DiffPoly& p) {
            if (n % 2 == 0) return; // every assembler skips even orders
            const DiffPoly r = symmetric_reduce(p);
            for (auto& a : asmbs) a.visit_prepared(n, r);
        });
    std::vector<CentralSeries> out;
    for (std::size_t i = 0; i < cfs.size(); ++i)
        out.push_back(finish_series(cfs[i], 0.5, asmbs[i].qcoeffs()[0],
                                    asmbs[i].qcoeffs(), order));
    return out;
}

std::vector<double> horner_coeffs(const CentralSeries& cs) {
    if (!cs.symmetric)
        throw ShapeError("horner_coeffs: defined for symmetric series only");
    std::vector<double> a;
    a.reserve((cs.nterms + 1) / 2);
    double scale = 0.5; // 1/2^{2j+1}
    for (int k = 1; k <= cs.nterms; k += 2) {
        a.push_back(cs.q(k) * scale);
        scale *= 0.25;
    }
    return a;
}

double eval_series(const CentralSeries& cs, double u) {
    const double d = u - cs.u0;
    if (cs.symmetric) {
        const double s = d * d;
        double acc = 0.0;
        for (int k = cs.nterms; k >= 1; k -= 2) acc = acc * s + cs.q(k);
        return acc * d;
    }
    double acc = 0.0;
    for (int k = cs.nterms; k >= 1; --k) acc = acc * d + cs.q(k);
    return acc * d;
}

double eval_series_derivative(const CentralSeries& cs, double u) {
    const double d = u - cs.u0;
    if (cs.symmetric) {
        const double s = d * d;
        double acc = 0.0;
        for (int k = cs.nterms; k >= 1; k -= 2) acc = acc * s + k * cs.q(k);
        return acc;
    }
    double acc = 0.0;
    for (int k = cs.nterms; k >= 1; --k) acc = acc * d + k * cs.q(k);
    return acc;
}

} // namespace cqf
