#pragma once

// Human-readable rendering. Two styles: "text" is canonical ascii with one
// coefficient as "a+b*r2"; "latex" is the x/sqrt2 fraction style used in
// the reference tables ("25/√2 - 8"), convenient for visual diffing.

#include <sstream>
#include <string>

#include "qmoment/jacobi.hpp"
#include "qmoment/series.hpp"

namespace qmoment {

inline std::string render_text(const Sqrt2& x) { return x.to_string(); }

// a + b sqrt2 printed in the reference style: integral b as "b√2",
// fractional b as "c/√2" or "c/(d√2)" with c/d = 2b.
inline std::string render_latexish(const Sqrt2& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const Rational& a = x.a();
    const Rational& b = x.b();
    if (!b.is_zero()) {
        if (b.is_integer()) {
            if (b == Rational(-1)) out += "-";
            else if (b != Rational(1)) out += b.to_string() + "*";
            out += "√2";
        } else {
            Rational c = Rational(2) * b;
            if (c.sign() < 0) out += "-";
            Rational ca = c.sign() < 0 ? -c : c;
            out += ca.num().get_str();
            out += "/";
            if (ca.den() != 1) out += "(" + ca.den().get_str() + "√2)";
            else out += "√2";
        }
    }
    if (!a.is_zero()) {
        if (out.empty()) out = a.to_string();
        else out += (a.sign() < 0 ? " - " : " + ") + (a.sign() < 0 ? (-a).to_string() : a.to_string());
    }
    return out;
}

inline std::string render_coeff(const Sqrt2& x, bool latex) {
    return latex ? render_latexish(x) : render_text(x);
}

inline std::string render_series(const Series& s, bool latex, const std::string& var = "q") {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << render_coeff(s[k], latex) << ")";
        if (k == 1) os << " " << var;
        else if (k > 1) os << " " << var << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string render_poly(const PolynomialWithSeriesCoefficients& p, bool latex) {
    std::ostringstream os;
    for (int d = 0; d <= p.degree; ++d) {
        if (d) os << "\n";
        os << "x^" << d << ": " << render_series(p.coeffs[static_cast<size_t>(d)], latex);
    }
    return os.str();
}

} // namespace qmoment
