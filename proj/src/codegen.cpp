#include "cqf/codegen.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace cqf {

namespace {

// Shortest decimal form that parses back to the same double; digits below 17
// switch to fixed significant-digit formatting.
std::string format_coeff(double x, int digits) {
    if (digits >= 17) {
        char buf[40];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
        std::string s(buf, p);
        if (s.find('.') == std::string::npos &&
            s.find('e') == std::string::npos &&
            s.find("inf") == std::string::npos &&
            s.find("nan") == std::string::npos)
            s += ".0";
        return s;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

// --- tiny expression evaluator ------------------------------------------

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    using Env = std::map<std::string, double>;
    using Node = std::function<double(const Env&)>;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Node parse_expr() {
        Node left = parse_term();
        for (;;) {
            if (eat('+')) {
                Node right = parse_term();
                left = [left, right](const Env& e) { return left(e) + right(e); };
            } else if (eat('-')) {
                Node right = parse_term();
                left = [left, right](const Env& e) { return left(e) - right(e); };
            } else {
                return left;
            }
        }
    }

    Node parse_term() {
        Node left = parse_factor();
        for (;;) {
            if (eat('*')) {
                Node right = parse_factor();
                left = [left, right](const Env& e) { return left(e) * right(e); };
            } else if (eat('/')) {
                Node right = parse_factor();
                left = [left, right](const Env& e) { return left(e) / right(e); };
            } else {
                return left;
            }
        }
    }

    Node parse_factor() {
        skip();
        if (eat('(')) {
            Node inner = parse_expr();
            if (!eat(')')) throw IoError("expression: missing ')'");
            return inner;
        }
        if (eat('-')) {
            Node inner = parse_factor();
            return [inner](const Env& e) { return -inner(e); };
        }
        if (i < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) ||
                    s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            return [name](const Env& e) {
                auto it = e.find(name);
                if (it == e.end())
                    throw IoError("expression: unbound identifier " + name);
                return it->second;
            };
        }
        // number
        skip();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
                s[i] == 'e' || s[i] == 'E' ||
                ((s[i] == '+' || s[i] == '-') && i > start &&
                 (s[i - 1] == 'e' || s[i - 1] == 'E'))))
            ++i;
        if (i == start) throw IoError("expression: parse error at position " +
                                      std::to_string(i));
        return [v = std::stod(s.substr(start, i - start))](const Env&) {
            return v;
        };
    }
};

} // namespace

std::function<double(const std::map<std::string, double>&)>
parse_expression(const std::string& text) {
    auto parser = std::make_shared<Parser>(text);
    Parser::Node root = parser->parse_expr();
    parser->skip();
    if (parser->i != text.size())
        throw IoError("expression: trailing characters");
    return [root](const std::map<std::string, double>& env) { return root(env); };
}

GeneratedCode emit_horner_c(const CentralSeries& cs, int digits) {
    const std::vector<double> a = horner_coeffs(cs); // throws on asymmetric
    std::ostringstream os;
    os << "/* " << cs.dist << ", " << a.size() << " nested terms */\n";
    os << "double quantile(double u)\n{\n";
    os << "    const double v = 2.0*u - 1.0;\n";
    os << "    const double w = v*v;\n";
    os << "    return v*(";
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j > 0) os << "\n        + w*(";
        os << format_coeff(a[j], digits);
    }
    for (std::size_t j = 0; j < a.size(); ++j) os << ")";
    os << ";\n}\n";

    GeneratedCode code;
    code.language = "c";
    code.text = os.str();
    code.terms = static_cast<int>(a.size());
    code.digits = digits;
    code.dist = cs.dist;
    return code;
}

double eval_emitted_c(const GeneratedCode& code, double u) {
    const auto pos = code.text.find("return ");
    const auto end = code.text.find(';', pos);
    if (pos == std::string::npos || end == std::string::npos)
        throw IoError("emitted code: no return expression found");
    const std::string expr = code.text.substr(pos + 7, end - pos - 7);
    const auto fn = parse_expression(expr);
    const double v = 2.0 * u - 1.0;
    return fn({{"u", u}, {"v", v}, {"w", v * v}});
}

GeneratedCode emit_coeff_json(const CentralSeries& cs) {
    nlohmann::json j;
    j["version"] = 1;
    j["u0"] = cs.u0;
    j["wdash"] = cs.wdash;
    j["qcoeffs"] = cs.qcoeffs;
    j["symmetric"] = cs.symmetric;
    j["nterms"] = cs.nterms;
    try {
        j["dist"] = nlohmann::json::parse(cs.dist);
    } catch (const nlohmann::json::exception&) {
        j["dist"] = cs.dist;
    }
    GeneratedCode code;
    code.language = "json-coeffs";
    code.text = j.dump(2);
    code.terms = cs.symmetric ? (cs.nterms + 1) / 2 : cs.nterms;
    code.digits = 17;
    code.dist = cs.dist;
    return code;
}

CentralSeries load_coeff_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("coefficient json: ") + e.what());
    }
    CentralSeries cs;
    cs.u0 = j.at("u0").get<double>();
    cs.wdash = j.at("wdash").get<double>();
    cs.qcoeffs = j.at("qcoeffs").get<std::vector<double>>();
    cs.symmetric = j.at("symmetric").get<bool>();
    cs.nterms = j.at("nterms").get<int>();
    cs.dist = j.at("dist").dump();
    return cs;
}

} // namespace cqf
