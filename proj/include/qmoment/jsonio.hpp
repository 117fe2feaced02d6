#pragma once

// JSON encoding of field elements and series. A field element a + b sqrt2 is
// {"a": "p/q", "b": "r/s"} with decimal-string integers; a series is
// {"order": N, "coeffs": [...]} with N+1 coefficients.

#include <nlohmann/json.hpp>

#include "qmoment/jacobi.hpp"
#include "qmoment/series.hpp"

namespace qmoment {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const Sqrt2& x) {
    return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}};
}

inline Sqrt2 sqrt2_from_json(const json& j) {
    return Sqrt2(Rational::parse(j.at("a").get<std::string>()),
                 Rational::parse(j.at("b").get<std::string>()));
}

inline json to_json(const Series& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s[k]));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series JSON: coeffs length must be order+1");
    Series s(order);
    for (int k = 0; k <= order; ++k) s.set(k, sqrt2_from_json(coeffs[static_cast<size_t>(k)]));
    return s;
}

inline json to_json(const PolynomialWithSeriesCoefficients& p) {
    json coeffs = json::array();
    for (const Series& s : p.coeffs) coeffs.push_back(to_json(s));
    return json{{"degree", p.degree}, {"coeffs", coeffs}};
}

} // namespace qmoment
