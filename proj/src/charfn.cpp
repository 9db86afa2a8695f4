#include "cqf/charfn.hpp"

#include <cmath>

#include <json.hpp>

#include "cqf/specfun.hpp"

namespace cqf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using cplx = std::complex<double>;

double x_coth_x(double s) {
    if (std::abs(s) < 1e-4) {
        const double s2 = s * s;
        return 1.0 + s2 / 3.0 - s2 * s2 / 45.0;
    }
    return s / std::tanh(s);
}

} // namespace

CharFnDescriptor make_gaussian(double mu) {
    CharFnDescriptor d;
    d.name = "gaussian";
    d.params = {{"mu", mu}};
    d.symmetric = (mu == 0.0);
    d.eval = [mu](double t) {
        return std::exp(cplx(-0.5 * t * t, mu * t));
    };
    if (mu == 0.0) {
        d.closed_moments = [](int k) {
            return std::pow(2.0, k - 0.5) * gamma_fn(k + 0.5) / kPi;
        };
    }
    return d;
}

CharFnDescriptor make_student(double n) {
    if (!(n > 0.0)) throw DomainError("student: degrees of freedom must be > 0");
    CharFnDescriptor d;
    d.name = "student";
    d.params = {{"n", n}};
    d.symmetric = true;
    const double norm =
        std::pow(2.0, 1.0 - 0.5 * n) * std::pow(n, 0.25 * n) / gamma_fn(0.5 * n);
    d.eval = [n, norm](double t) -> cplx {
        const double at = std::abs(t);
        if (at < 1e-14) return 1.0;
        const double z = std::sqrt(n) * at;
        return norm * std::pow(at, 0.5 * n) * bessel_k(0.5 * n, z);
    };
    d.closed_moments = [n](int k) {
        return std::pow(4.0, k) * std::pow(n, -k - 0.5) * gamma_fn(k + 0.5) *
               gamma_fn(k + 0.5 * (n + 1.0)) / (kPi * gamma_fn(0.5 * n));
    };
    return d;
}

CharFnDescriptor make_stable_symmetric(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw DomainError("stable: alpha must lie in (0, 2]");
    CharFnDescriptor d;
    d.name = "stable";
    d.params = {{"alpha", alpha}};
    d.symmetric = true;
    d.eval = [alpha](double t) -> cplx {
        return std::exp(-std::pow(std::abs(t), alpha));
    };
    d.closed_moments = [alpha](int k) {
        return gamma_fn((2.0 * k + 1.0) / alpha) / (alpha * kPi);
    };
    return d;
}

CharFnDescriptor make_stable_asymmetric(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw DomainError("stable: alpha must lie in (0, 2]");
    if (!(beta >= -1.0 && beta <= 1.0))
        throw DomainError("stable: beta must lie in [-1, 1]");
    if (beta == 0.0) return make_stable_symmetric(alpha);
    CharFnDescriptor d;
    d.name = "stable";
    d.params = {{"alpha", alpha}, {"beta", beta}};
    d.symmetric = false;
    const double skew = std::tan(0.5 * kPi * alpha);
    d.eval = [alpha, beta, skew](double t) -> cplx {
        const double a = std::pow(std::abs(t), alpha);
        const double sgn = t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0);
        return std::exp(cplx(-a, a * beta * sgn * skew));
    };
    return d;
}

CharFnDescriptor make_sgh(double lambda, double alpha, double delta) {
    if (!(alpha > 0.0)) throw DomainError("sgh: alpha must be > 0");
    if (!(delta > 0.0)) throw DomainError("sgh: delta must be > 0");
    if (!(lambda < 2.0))
        throw DomainError("sgh: closed moments require lambda < 2");
    CharFnDescriptor d;
    d.name = "sgh";
    d.params = {{"lambda", lambda}, {"alpha", alpha}, {"delta", delta}};
    d.symmetric = true;
    const double kref = bessel_k(lambda, alpha * delta);
    d.eval = [lambda, alpha, delta, kref](double t) -> cplx {
        if (std::abs(t) < 1e-14) return 1.0;
        const double q = std::sqrt(alpha * alpha + t * t);
        return std::pow(alpha * alpha / (q * q), 0.5 * lambda) *
               bessel_k(lambda, delta * q) / kref;
    };
    d.closed_moments = [lambda, alpha, delta, kref](int k) {
        return std::pow(2.0, k - 0.5) * gamma_fn(k + 0.5) *
               std::pow(alpha / delta, k + 0.5) *
               bessel_k(0.5 + k - lambda, alpha * delta) / (kPi * kref);
    };
    return d;
}

CharFnDescriptor make_levy_area_p(double r) {
    if (!(r > 0.0)) throw DomainError("levy-area-p: r must be > 0");
    CharFnDescriptor d;
    d.name = "levy-area-p";
    d.params = {{"r", r}};
    d.symmetric = true;
    d.eval = [r](double s) -> cplx {
        return std::exp(-0.5 * r * r * (x_coth_x(s) - 1.0));
    };
    return d;
}

CharFnDescriptor make_vg(double lambda, double alpha) {
    if (!(lambda > 0.0)) throw DomainError("vg: lambda must be > 0");
    if (!(alpha > 0.0)) throw DomainError("vg: alpha must be > 0");
    CharFnDescriptor d;
    d.name = "vg";
    d.params = {{"lambda", lambda}, {"alpha", alpha}};
    d.symmetric = true;
    d.eval = [lambda, alpha](double t) -> cplx {
        return std::pow(alpha * alpha / (alpha * alpha + t * t), lambda);
    };
    // |t|^k |phi| integrable iff k < 2 lambda - 1
    const double bound = 2.0 * lambda - 1.0;
    int kmax = static_cast<int>(std::floor(bound));
    if (static_cast<double>(kmax) == bound) kmax -= 1; // strict inequality
    d.moment_order = std::max(kmax, -1);
    return d;
}

CharFnDescriptor make_custom(std::function<cplx(double)> eval, bool symmetric,
                             std::optional<int> moment_order) {
    CharFnDescriptor d;
    d.name = "custom";
    d.eval = std::move(eval);
    d.symmetric = symmetric;
    d.moment_order = moment_order;
    validate_descriptor(d);
    return d;
}

void validate_descriptor(const CharFnDescriptor& cf) {
    const cplx at0 = cf.eval(0.0);
    if (std::abs(at0 - 1.0) > 1e-12)
        throw ValidationError(cf.name + ": phi(0) != 1");
    for (double t : {0.1, 0.37, 1.0, 2.5, 5.0, 10.0}) {
        const cplx p = cf.eval(t);
        const cplx m = cf.eval(-t);
        if (std::abs(p) > 1.0 + 1e-12)
            throw ValidationError(cf.name + ": |phi(t)| > 1");
        if (std::abs(m - std::conj(p)) > 1e-10 * (1.0 + std::abs(p)))
            throw ValidationError(cf.name + ": phi(-t) != conj(phi(t))");
        if (cf.symmetric && std::abs(p.imag()) > 1e-12)
            throw ValidationError(cf.name + ": symmetry claim violated");
    }
}

CharFnDescriptor descriptor_from_spec(const std::string& json_spec) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_spec);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("distribution spec: ") + e.what());
    }
    const std::string dist = j.at("dist").get<std::string>();
    auto num = [&](const char* key, double dflt,
                   bool required = false) -> double {
        if (!j.contains(key)) {
            if (required)
                throw DomainError("distribution spec: missing parameter " +
                                  std::string(key));
            return dflt;
        }
        return j.at(key).get<double>();
    };
    if (dist == "gaussian") return make_gaussian(num("mu", 0.0));
    if (dist == "student") return make_student(num("n", 0.0, true));
    if (dist == "stable") {
        const double beta = num("beta", 0.0);
        return beta == 0.0 ? make_stable_symmetric(num("alpha", 0.0, true))
                           : make_stable_asymmetric(num("alpha", 0.0, true), beta);
    }
    if (dist == "sgh")
        return make_sgh(num("lambda", 0.0, true), num("alpha", 0.0, true),
                        num("delta", 0.0, true));
    if (dist == "levy-area-p") return make_levy_area_p(num("r", 0.0, true));
    if (dist == "vg" || dist == "custom-vg")
        return make_vg(num("lambda", 0.0, true), num("alpha", 1.0));
    throw DomainError("distribution spec: unknown dist '" + dist + "'");
}

} // namespace cqf
