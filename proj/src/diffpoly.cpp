#include "cqf/diffpoly.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cqf {

DiffPoly DiffPoly::constant(Rational c) {
    DiffPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

DiffPoly DiffPoly::bsym(unsigned m) {
    DiffPoly p;
    Monomial mono;
    mono.bfactors.push_back(static_cast<std::uint8_t>(m));
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

DiffPoly DiffPoly::monomial(Monomial m, Rational c) {
    DiffPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

std::uint32_t DiffPoly::max_xdeg() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.xdeg);
    return d;
}

int DiffPoly::max_bindex() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (!m.bfactors.empty()) d = std::max<int>(d, m.bfactors.back());
    return d;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.xdeg = ma.xdeg + mb.xdeg;
            m.bfactors.reserve(ma.bfactors.size() + mb.bfactors.size());
            std::merge(ma.bfactors.begin(), ma.bfactors.end(),
                       mb.bfactors.begin(), mb.bfactors.end(),
                       std::back_inserter(m.bfactors));
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.xdeg == 1) os << "*x";
        else if (m.xdeg > 1) os << "*x^" << m.xdeg;
        for (std::uint8_t b : m.bfactors) os << "*B" << int(b);
    }
    return os.str();
}

DiffPoly ddx(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.xdeg == 0) continue;
        Monomial d = m;
        d.xdeg -= 1;
        r.add_term(d, c * m.xdeg);
    }
    return r;
}

DiffPoly ddw(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        // product rule over runs of equal B indices
        std::size_t i = 0;
        while (i < m.bfactors.size()) {
            std::size_t j = i;
            while (j < m.bfactors.size() && m.bfactors[j] == m.bfactors[i]) ++j;
            const auto mult = static_cast<unsigned>(j - i);
            Monomial d = m;
            d.bfactors[i] = static_cast<std::uint8_t>(m.bfactors[i] + 1);
            std::sort(d.bfactors.begin(), d.bfactors.end());
            r.add_term(d, c * mult);
            i = j;
        }
    }
    return r;
}

DiffPoly recurrence_step(const DiffPoly& p_n, int n) {
    // (n+1) x B0 P_n and x^2 B0 d/dx P_n land on the same monomials:
    // combined weight (n+1+xdeg).
    DiffPoly r;
    for (const auto& [m, c] : p_n.terms()) {
        Monomial up = m;
        up.xdeg += 1;
        up.bfactors.insert(up.bfactors.begin(), 0);
        r.add_term(up, c * (n + 1 + static_cast<int>(m.xdeg)));
    }
    return r + ddw(p_n);
}

std::vector<DiffPoly> compute_p_sequence(int n_max, std::size_t term_cap) {
    if (n_max < 2) throw DomainError("compute_p_sequence: n_max must be >= 2");
    std::vector<DiffPoly> seq;
    seq.reserve(static_cast<std::size_t>(n_max) - 1);
    stream_p_sequence(
        n_max, [&seq](int, const DiffPoly& p) { seq.push_back(p); }, term_cap);
    return seq;
}

void stream_p_sequence(int n_max,
                       const std::function<void(int, const DiffPoly&)>& visit,
                       std::size_t term_cap) {
    if (n_max < 2) throw DomainError("stream_p_sequence: n_max must be >= 2");
    DiffPoly p = DiffPoly::bsym(0); // P_2
    visit(2, p);
    for (int n = 2; n < n_max; ++n) {
        p = recurrence_step(p, n);
        if (p.term_count() > term_cap)
            throw ResourceLimitError(
                "p-sequence term cap exceeded at n = " + std::to_string(n + 1) +
                " (" + std::to_string(p.term_count()) + " terms)");
        visit(n + 1, p);
    }
}

DiffPoly symmetric_reduce(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        bool vanishes = false;
        int sign = 1;
        Monomial e;
        e.xdeg = m.xdeg;
        e.bfactors.reserve(m.bfactors.size());
        for (std::uint8_t b : m.bfactors) {
            if (b % 2 == 0) { // even-index B vanish by symmetry
                vanishes = true;
                break;
            }
            const unsigned j = (b - 1) / 2;
            if (j % 2 == 1) sign = -sign;
            e.bfactors.push_back(static_cast<std::uint8_t>(j + 1)); // E_{j+1}
        }
        if (vanishes) continue;
        std::sort(e.bfactors.begin(), e.bfactors.end());
        r.add_term(e, sign > 0 ? c : -c);
    }
    return r;
}

namespace {
constexpr int kCacheVersion = 1;
}

std::string serialize_p_sequence(const std::vector<DiffPoly>& seq) {
    nlohmann::json doc;
    doc["version"] = kCacheVersion;
    doc["n_max"] = static_cast<int>(seq.size()) + 1;
    auto& arr = doc["polys"] = nlohmann::json::array();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        nlohmann::json entry;
        entry["n"] = static_cast<int>(i) + 2;
        auto& ts = entry["terms"] = nlohmann::json::array();
        for (const auto& [m, c] : seq[i].terms()) {
            nlohmann::json t;
            t["xdeg"] = m.xdeg;
            t["bfactors"] = m.bfactors;
            t["num"] = numerator(c).str();
            t["den"] = denominator(c).str();
            ts.push_back(std::move(t));
        }
        arr.push_back(std::move(entry));
    }
    return doc.dump();
}

std::vector<DiffPoly> deserialize_p_sequence(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("p-sequence cache: ") + e.what());
    }
    if (!doc.contains("version") || doc["version"].get<int>() != kCacheVersion)
        throw IoError("p-sequence cache: unsupported version");
    std::vector<DiffPoly> seq;
    for (const auto& entry : doc.at("polys")) {
        DiffPoly p;
        for (const auto& t : entry.at("terms")) {
            Monomial m;
            m.xdeg = t.at("xdeg").get<std::uint32_t>();
            for (const auto& b : t.at("bfactors"))
                m.bfactors.push_back(b.get<std::uint8_t>());
            Rational c(boost::multiprecision::mpz_int(t.at("num").get<std::string>()),
                       boost::multiprecision::mpz_int(t.at("den").get<std::string>()));
            p.add_term(m, c);
        }
        seq.push_back(std::move(p));
    }
    return seq;
}

} // namespace cqf
