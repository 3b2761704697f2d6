#include "alexsum/format.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace alexsum {

namespace {

// One "c x^e" piece, appended with " + " / " - " separators.
void append_term(std::string& out, const Int& coeff, const std::string& var_power) {
    const bool negative = coeff < 0;
    Int magnitude = negative ? Int(-coeff) : coeff;
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    if (var_power.empty()) {
        out += magnitude.str();
    } else {
        if (magnitude != 1) out += magnitude.str();
        out += var_power;
    }
}

std::string integer_power(char variable, int e) {
    if (e == 0) return {};
    std::string out(1, variable);
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

// The t-power for a doubled exponent: 2 -> "t", 1 -> "t^1/2", -3 -> "t^-3/2".
std::string half_power(int doubled) {
    if (doubled == 0) return {};
    if (doubled % 2 == 0) return integer_power('t', doubled / 2);
    return "t^" + std::to_string(doubled) + "/2";
}

nlohmann::json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

Int coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or decimal string");
}

void check_variable(const nlohmann::json& j, const std::string& variable) {
    if (!j.is_object() || !j.contains("variable") || !j.contains("terms") ||
        !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON needs {variable, terms}");
    if (j["variable"] != variable)
        throw std::invalid_argument("expected variable '" + variable + "'");
}

}  // namespace

std::string render(const LaurentPoly& p, char variable) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        append_term(out, it->second, integer_power(variable, it->first));
    return out;
}

std::string render(const ConwayPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) append_term(out, c, integer_power('z', e));
    return out;
}

std::string render(const HalfTPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.doubled.terms().rbegin(); it != p.doubled.terms().rend(); ++it)
        append_term(out, it->second, half_power(it->first));
    return out;
}

std::string render(const RationalFn& f, char variable) {
    if (f.is_laurent()) return render(f.num(), variable);
    return "(" + render(f.num(), variable) + ") / (" + render(f.den(), variable) + ")";
}

nlohmann::json poly_to_json(const LaurentPoly& p, const std::string& variable) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, coeff_to_json(c)});
    return {{"variable", variable}, {"terms", std::move(terms)}};
}

nlohmann::json poly_to_json(const ConwayPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, coeff_to_json(c)});
    return {{"variable", "z"}, {"terms", std::move(terms)}};
}

nlohmann::json poly_to_json(const HalfTPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [doubled, c] : p.doubled.terms()) {
        std::string exp = doubled % 2 == 0 ? std::to_string(doubled / 2)
                                           : std::to_string(doubled) + "/2";
        terms.push_back({std::move(exp), coeff_to_json(c)});
    }
    return {{"variable", "t"}, {"terms", std::move(terms)}};
}

nlohmann::json rational_to_json(const RationalFn& f, const std::string& variable) {
    return {{"num", poly_to_json(f.num(), variable)}, {"den", poly_to_json(f.den(), variable)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j, const std::string& variable) {
    check_variable(j, variable);
    LaurentPoly p;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw std::invalid_argument("terms must be [integer exponent, coefficient]");
        p.add_term(term[0].get<int>(), coeff_from_json(term[1]));
    }
    return p;
}

ConwayPoly conway_from_json(const nlohmann::json& j) {
    check_variable(j, "z");
    ConwayPoly p;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw std::invalid_argument("terms must be [integer exponent, coefficient]");
        p.set(term[0].get<int>(), coeff_from_json(term[1]));
    }
    return p;
}

HalfTPoly half_t_from_json(const nlohmann::json& j) {
    check_variable(j, "t");
    HalfTPoly p;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string())
            throw std::invalid_argument("t-terms must be [exponent string, coefficient]");
        std::string exp = term[0].get<std::string>();
        int doubled;
        if (exp.size() > 2 && exp.compare(exp.size() - 2, 2, "/2") == 0)
            doubled = std::stoi(exp.substr(0, exp.size() - 2));
        else
            doubled = 2 * std::stoi(exp);
        p.doubled.add_term(doubled, coeff_from_json(term[1]));
    }
    return p;
}

}  // namespace alexsum
