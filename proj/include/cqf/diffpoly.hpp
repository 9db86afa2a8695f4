#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "cqf/errors.hpp"

namespace cqf {

using Rational = boost::multiprecision::mpq_rational;

// Monomial x^xdeg * B_{m1} * B_{m2} * ... in the differential ring.
// B_m stands for the m-th w-derivative of the kernel integral P2 at the
// expansion point; bfactors is kept sorted so equal monomials compare equal.
struct Monomial {
    std::uint32_t xdeg = 0;
    std::vector<std::uint8_t> bfactors; // ascending

    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial over the monomials above with exact rational
// coefficients. Canonical form: no zero coefficients are stored.
class DiffPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly{}; }
    static DiffPoly constant(Rational c);
    static DiffPoly bsym(unsigned m);               // B_m
    static DiffPoly monomial(Monomial m, Rational c);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // Highest power of x present, 0 for the zero polynomial.
    std::uint32_t max_xdeg() const;
    // Largest B index present, -1 if none.
    int max_bindex() const;

    void add_term(const Monomial& m, const Rational& c);

    bool operator==(const DiffPoly&) const = default;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);

    std::string str() const; // human-readable, deterministic order

  private:
    TermMap terms_;
};

// Formal partial derivative in x.
DiffPoly ddx(const DiffPoly& p);

// Derivative in the expansion variable: each B_m factor maps to B_{m+1}
// by the product rule.
DiffPoly ddw(const DiffPoly& p);

// One step of P_{n+1} = (n+1) x B0 P_n + x^2 B0 d/dx P_n + d/dw P_n.
DiffPoly recurrence_step(const DiffPoly& p_n, int n);

inline constexpr std::size_t kDefaultTermCap = 5'000'000;

// [P_2, ..., P_{n_max}], with P_2 = B0. Throws ResourceLimitError if any
// member exceeds term_cap monomials.
std::vector<DiffPoly> compute_p_sequence(int n_max,
                                         std::size_t term_cap = kDefaultTermCap);

// Streaming form for deep sequences: calls visit(n, P_n) for n = 2..n_max
// while retaining only the current polynomial.
void stream_p_sequence(int n_max,
                       const std::function<void(int, const DiffPoly&)>& visit,
                       std::size_t term_cap = kDefaultTermCap);

// Rewrite of a P_n under the symmetry rules: even-index B vanish,
// B_{2j+1} -> (-1)^j E_{j+1}. The result reuses the monomial type with
// bfactors holding E indices.
DiffPoly symmetric_reduce(const DiffPoly& p);

// Numeric specialization: coefficients folded into Real arithmetic with
// B_m = bvals[m] and the given x. Real is double or a multiprecision float.
template <class Real>
Real substitute(const DiffPoly& p, const std::vector<Real>& bvals, Real x) {
    Real acc(0);
    for (const auto& [mono, coeff] : p.terms()) {
        Real t = static_cast<Real>(coeff);
        if (mono.xdeg > 0) {
            Real xp(1);
            for (std::uint32_t i = 0; i < mono.xdeg; ++i) xp *= x;
            t *= xp;
        }
        for (std::uint8_t m : mono.bfactors) {
            if (m >= bvals.size())
                throw MissingSymbolError("substitute: no value for B_" +
                                         std::to_string(m));
            t *= bvals[m];
        }
        acc += t;
    }
    return acc;
}

// Versioned JSON cache of a computed sequence.
std::string serialize_p_sequence(const std::vector<DiffPoly>& seq);
std::vector<DiffPoly> deserialize_p_sequence(const std::string& json_text);

} // namespace cqf
