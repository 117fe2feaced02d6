#pragma once

// Elements a + b*sqrt(2) of Q(sqrt2), the coefficient field of every series
// in this project. Representation is unique and all decisions (sign,
// comparison, decimal rendering) are made in exact integer arithmetic.

#include <ostream>
#include <string>
#include <utility>

#include "qmoment/rational.hpp"

namespace qmoment {

class Sqrt2 {
public:
    Sqrt2() = default;
    Sqrt2(long n) : a_(n) {} // NOLINT(google-explicit-constructor)
    Sqrt2(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
    Sqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Sqrt2 sqrt2() { return Sqrt2(Rational(0), Rational(1)); }
    // Convenience for values written r * sqrt2 in the sources of truth.
    static Sqrt2 root2_times(Rational r) { return Sqrt2(Rational(0), std::move(r)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // Membership in Z[1/sqrt2] = Z[sqrt2, 1/2]: both components dyadic.
    bool in_z_inv_sqrt2() const { return a_.is_dyadic() && b_.is_dyadic(); }

    Sqrt2 operator-() const { return Sqrt2(-a_, -b_); }
    Sqrt2& operator+=(const Sqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Sqrt2& operator-=(const Sqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Sqrt2& operator*=(const Sqrt2& o) {
        Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    Sqrt2& operator/=(const Sqrt2& o) { return *this *= o.inverse(); }

    friend Sqrt2 operator+(Sqrt2 x, const Sqrt2& y) { return x += y; }
    friend Sqrt2 operator-(Sqrt2 x, const Sqrt2& y) { return x -= y; }
    friend Sqrt2 operator*(Sqrt2 x, const Sqrt2& y) { return x *= y; }
    friend Sqrt2 operator/(Sqrt2 x, const Sqrt2& y) { return x /= y; }

    friend bool operator==(const Sqrt2& x, const Sqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Sqrt2& x, const Sqrt2& y) { return !(x == y); }

    // (a + b sqrt2)^{-1} = (a - b sqrt2)/(a^2 - 2 b^2); the norm vanishes only at 0.
    Sqrt2 inverse() const {
        Rational n = a_ * a_ - Rational(2) * b_ * b_;
        if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt2)");
        return Sqrt2(a_ / n, -b_ / n);
    }

    // Exact sign of a + b*sqrt2 by case analysis on component signs,
    // comparing a^2 against 2 b^2 in the mixed-sign cases.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        if (sa > 0 && sb > 0) return 1;
        if (sa < 0 && sb < 0) return -1;
        Rational lhs = a_ * a_, rhs = Rational(2) * b_ * b_;
        int cmp = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
        return sa > 0 ? cmp : -cmp; // a>0>b: sign(a^2-2b^2); a<0<b: the opposite
    }

    friend bool operator<(const Sqrt2& x, const Sqrt2& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Sqrt2& x, const Sqrt2& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Sqrt2& x, const Sqrt2& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Sqrt2& x, const Sqrt2& y) { return (x - y).sign() >= 0; }

    std::string to_decimal(unsigned digits) const;

    // Canonical ascii form, e.g. "-8+25/2*r2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (!a_.is_zero()) s += a_.to_string();
        if (!b_.is_zero()) {
            if (!s.empty() && b_.sign() > 0) s += "+";
            if (b_ == Rational(-1)) s += "-";
            else if (b_ != Rational(1)) s += b_.to_string() + "*";
            s += "r2";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Sqrt2& x) {
        return os << x.to_string();
    }

private:
    Rational a_, b_;
};

// 2^{t/2} as an exact Sqrt2 value (t may be negative or odd).
inline Sqrt2 pow2_half(long t) {
    bool odd = (t % 2) != 0;
    long fl = (t - (odd ? (t > 0 ? 1 : -1) : 0)) / 2;
    if (odd && t < 0) --fl; // floor: 2^{t/2} = 2^{fl} * sqrt2 with t = 2*fl + 1
    Rational base = fl >= 0 ? Rational(pow2(static_cast<unsigned long>(fl)))
                            : Rational(mpz_class(1), pow2(static_cast<unsigned long>(-fl)));
    Sqrt2 r(base);
    if (odd) r *= Sqrt2::sqrt2();
    return r;
}

namespace detail {

inline mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// floor(sqrt(2) * 10^m) by integer square root.
inline mpz_class sqrt2_scaled(unsigned long m) {
    mpz_class t = 2 * pow10(2 * m);
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return r;
}

} // namespace detail

// Correctly rounded decimal rendering with `digits` significant digits.
// sqrt2 enters through an integer Newton/isqrt approximation whose precision
// is grown until the guard bound is met, so the output is reproducible
// bit for bit.
inline std::string Sqrt2::to_decimal(unsigned digits) const {
    if (digits == 0) digits = 1;
    if (is_zero()) return "0." + std::string(digits, '0');

    int sg = sign();
    Sqrt2 x = sg < 0 ? -*this : *this;

    // x = (A + B sqrt2)/D0 over a common positive denominator.
    mpz_class D0 = x.a().den() * x.b().den();
    mpz_class A = x.a().num() * x.b().den();
    mpz_class B = x.b().num() * x.a().den();

    // Decimal exponent e with 10^e <= x < 10^{e+1}, decided exactly.
    auto cmp_pow10 = [&](long t) {
        Rational p = t >= 0 ? Rational(detail::pow10(static_cast<unsigned long>(t)))
                            : Rational(mpz_class(1), detail::pow10(static_cast<unsigned long>(-t)));
        return (x - Sqrt2(p)).sign();
    };
    long e = 0;
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;

    // Guard precision: the isqrt substitution perturbs the numerator by at
    // most |B|; demand |B| < D0 * 10^{e + m - digits - 2}.
    unsigned long m = digits + 2;
    if (!x.b().is_zero()) {
        for (;;) {
            long bound_exp = e + static_cast<long>(m) - static_cast<long>(digits) - 2;
            mpz_class babs = abs(B);
            bool ok;
            if (bound_exp >= 0)
                ok = babs < D0 * detail::pow10(static_cast<unsigned long>(bound_exp));
            else
                ok = babs * detail::pow10(static_cast<unsigned long>(-bound_exp)) < D0;
            if (ok) break;
            m += 8;
        }
    }

    // Mantissa = round(x * 10^{digits-1-e}) as an integer with `digits` digits.
    mpz_class N = A * detail::pow10(m) + B * detail::sqrt2_scaled(m);
    mpz_class DD = D0 * detail::pow10(m);
    long s = static_cast<long>(digits) - 1 - e;
    if (s >= 0) N *= detail::pow10(static_cast<unsigned long>(s));
    else DD *= detail::pow10(static_cast<unsigned long>(-s));
    mpz_class mant = (2 * N + DD) / (2 * DD); // round half up
    if (mant >= detail::pow10(digits)) {      // rounding pushed into the next decade
        mant /= 10;
        ++e;
    }

    std::string ds = mant.get_str();
    std::string out = sg < 0 ? "-" : "";
    if (e >= static_cast<long>(digits) || e < -4) {
        out += ds.substr(0, 1);
        if (digits > 1) out += "." + ds.substr(1);
        out += "e" + std::string(e >= 0 ? "+" : "-");
        std::string es = std::to_string(e >= 0 ? e : -e);
        if (es.size() < 2) es = "0" + es;
        out += es;
    } else if (e >= 0) {
        out += ds.substr(0, e + 1);
        if (static_cast<unsigned long>(e + 1) < ds.size()) out += "." + ds.substr(e + 1);
    } else {
        out += "0." + std::string(static_cast<unsigned long>(-e - 1), '0') + ds;
    }
    return out;
}

} // namespace qmoment
