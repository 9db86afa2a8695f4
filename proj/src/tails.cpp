#include "cqf/tails.hpp"

#include <cmath>
#include <cstdio>

#include "cqf/specfun.hpp"

namespace cqf {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double TailModel::eval(double u) const {
    const double e = 1.0 - u;
    const double inner = c_m1 / e + c0 + c1 * e + c2 * e * e;
    if (!(inner > 0.0))
        throw DomainError("tail model: negative base outside validity range");
    return std::pow(inner, 1.0 / alpha);
}

TailModel stable_tail(double alpha, const QuadratureConfig& cfg) {
    (void)cfg;
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("stable_tail: requires 0 < alpha < 2");
    const double ha = 0.5 * kPi * alpha;
    const double s = std::sin(ha);
    const double cs = std::cos(ha);
    const double g1 = gamma_fn(alpha);
    const double g2 = gamma_fn(2.0 * alpha);
    const double g3 = gamma_fn(3.0 * alpha);
    const double g4 = gamma_fn(4.0 * alpha);
    const double csc = 1.0 / s;
    const double cospa = std::cos(kPi * alpha);
    const double sinpa = std::sin(kPi * alpha);
    const double sin3ha = std::sin(3.0 * ha);

    TailModel tm;
    tm.alpha = alpha;
    tm.c_m1 = g1 * s / kPi;
    tm.c0 = -cs * g2 / g1;
    tm.c1 = kPi * csc * csc *
            (2.0 * g1 * g3 * sin3ha - 3.0 * csc * g2 * g2 * sinpa * sinpa) /
            (12.0 * g1 * g1 * g1);
    tm.c2 = -kPi * kPi * (cs / s) * csc *
            (6.0 * (cospa + 1.0) * g2 * g2 * g2 -
             3.0 * (2.0 * cospa + 1.0) * g1 * g3 * g2 +
             cospa * g1 * g1 * g4) /
            (6.0 * std::pow(g1, 5));
    return tm;
}

double choose_switch(const CentralSeries& cs, TailModel& tm) {
    double best_u = 0.95;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 180; ++i) {
        const double u = 0.90 + 0.09 * i / 180.0;
        double tail;
        try {
            tail = tm.eval(u);
        } catch (const DomainError&) {
            continue;
        }
        const double central = eval_series(cs, u);
        const double gap = std::abs(central - tail) / std::abs(tail);
        if (gap < best_gap) {
            best_gap = gap;
            best_u = u;
        }
    }
    if (best_gap > 1e-3)
        std::fprintf(stderr,
                     "cqf: warning: central/tail join gap %.2e at u=%.4f "
                     "exceeds 1e-3\n",
                     best_gap, best_u);
    tm.u_switch = best_u;
    return best_u;
}

CompositeQuantile make_composite(const CharFnDescriptor& cf,
                                 const CentralSeries& cs,
                                 const QuadratureConfig& cfg) {
    CompositeQuantile q;
    q.central = cs;
    q.reflection = cs.symmetric;
    if (cf.name == "stable" && cf.symmetric) {
        const double alpha = cf.params.at("alpha");
        if (alpha < 2.0) {
            TailModel tm = stable_tail(alpha, cfg);
            choose_switch(cs, tm);
            q.upper_tail = tm;
        }
    }
    return q;
}

double eval_quantile(const CompositeQuantile& q, double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("eval_quantile: u must lie strictly in (0,1)");
    if (q.upper_tail) {
        const double us = q.upper_tail->u_switch;
        if (u > us) return q.upper_tail->eval(u);
        if (q.reflection && u < 1.0 - us) return -q.upper_tail->eval(1.0 - u);
    }
    return eval_series(q.central, u);
}

} // namespace cqf
