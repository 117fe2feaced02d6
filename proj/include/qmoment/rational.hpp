#pragma once

// Arbitrary-precision rationals on top of GMP, kept in canonical lowest terms
// (gcd(|num|, den) = 1, den >= 1, zero is 0/1).

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <string>

#include "qmoment/errors.hpp"

namespace qmoment {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        r.v_.canonicalize();
        return r;
    }

    // Accepts "p", "p/q", optionally signed, base 10.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    // True iff the denominator is a power of two (canonical form assumed).
    bool is_dyadic() const {
        const mpz_class& d = v_.get_den();
        return mpz_popcount(d.get_mpz_t()) == 1;
    }

    Rational operator-() const { return from_mpq(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return from_mpq(mpq_class(1) / v_);
    }

    Rational pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rational(n, d);
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x.
inline Rational gen_binomial(const Rational& x, unsigned long k) {
    Rational r(1);
    for (unsigned long j = 0; j < k; ++j) r *= x - Rational(static_cast<long>(j));
    return r / Rational(factorial(k));
}

// Pochhammer (a)_k = a(a+1)...(a+k-1); k = -1 uses the Gamma-quotient
// extension (a)_{-1} = 1/(a-1).
inline Rational pochhammer(const Rational& a, long k) {
    if (k == -1) return (a - Rational(1)).inverse();
    Rational r(1);
    for (long j = 0; j < k; ++j) r *= a + Rational(j);
    return r;
}

} // namespace qmoment
