#pragma once

#include <functional>
#include <map>
#include <string>

#include "cqf/series.hpp"

namespace cqf {

struct GeneratedCode {
    std::string language; // "c" | "json-coeffs"
    std::string text;
    int terms = 0;
    int digits = 0;
    std::string dist;
};

// Self-contained C function evaluating the symmetric series in nested
// multiplication form with v = 2u-1, w = v*v.
GeneratedCode emit_horner_c(const CentralSeries& cs, int digits = 17);

// {u0, wdash, qcoeffs[], symmetric, dist} for cross-language reuse.
GeneratedCode emit_coeff_json(const CentralSeries& cs);

CentralSeries load_coeff_json(const std::string& text);

// Minimal expression evaluator for the emitted Horner bodies (numbers,
// identifiers, + - * / and parentheses); backs the parse-back round trip.
std::function<double(const std::map<std::string, double>&)>
parse_expression(const std::string& text);

// Convenience: extract the expression from emitted C and evaluate it at u.
double eval_emitted_c(const GeneratedCode& code, double u);

} // namespace cqf
