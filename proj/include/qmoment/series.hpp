#pragma once

// Truncated formal power series in q over Q(sqrt2). A series of order N
// stores the coefficients of q^0..q^N and never claims anything beyond N;
// binary operations truncate to the shorter operand.

#include <algorithm>
#include <functional>
#include <vector>

#include "qmoment/sqrt2.hpp"

namespace qmoment {

// Rule ell >= 0 -> f(2*ell + 1) for an arithmetic function supported on the
// odd integers (f vanishes on even arguments).
using OddCoefficientRule = std::function<Sqrt2(long)>;

class Series {
public:
    explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {}

    static Series constant(const Sqrt2& v, int order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    static Series one(int order) { return constant(Sqrt2(1), order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Sqrt2& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    void set(int k, Sqrt2 v) { c_[static_cast<size_t>(k)] = std::move(v); }

    Series truncated(int new_order) const {
        Series s(std::min(new_order, order()));
        for (int k = 0; k <= s.order(); ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return s;
    }

    // Index of the first nonzero coefficient; order()+1 if identically zero.
    int valuation() const {
        for (int k = 0; k <= order(); ++k)
            if (!c_[static_cast<size_t>(k)].is_zero()) return k;
        return order() + 1;
    }
    bool is_zero() const { return valuation() > order(); }

    friend Series operator+(const Series& x, const Series& y) {
        Series r(std::min(x.order(), y.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = x[k] + y[k];
        return r;
    }
    friend Series operator-(const Series& x, const Series& y) {
        Series r(std::min(x.order(), y.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = x[k] - y[k];
        return r;
    }
    Series operator-() const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r.c_[static_cast<size_t>(k)] = -c_[static_cast<size_t>(k)];
        return r;
    }
    friend Series operator*(const Series& x, const Series& y) {
        Series r(std::min(x.order(), y.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j + i <= r.order(); ++j) {
                if (y[j].is_zero()) continue;
                r.c_[static_cast<size_t>(i + j)] += x[i] * y[j];
            }
        }
        return r;
    }
    friend Series operator*(const Series& x, const Sqrt2& c) {
        Series r(x.order());
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = x[k] * c;
        return r;
    }
    friend Series operator*(const Sqrt2& c, const Series& x) { return x * c; }

    friend bool operator==(const Series& x, const Series& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Series& x, const Series& y) { return !(x == y); }

    // Multiplicative inverse; requires a unit (nonzero constant term).
    Series invert() const {
        if (c_[0].is_zero()) throw NonUnitSeries("series with zero constant term has no inverse");
        Series r(order());
        Sqrt2 c0inv = c_[0].inverse();
        r.c_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            Sqrt2 acc;
            for (int j = 1; j <= n; ++j) {
                if (c_[static_cast<size_t>(j)].is_zero()) continue;
                acc += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(n - j)];
            }
            r.c_[static_cast<size_t>(n)] = -(acc * c0inv);
        }
        return r;
    }

    // q * d/dq, coefficientwise k * c_k.
    Series q_derivative() const {
        Series r(order());
        for (int k = 1; k <= order(); ++k)
            r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * Sqrt2(Rational(k));
        return r;
    }

    // Coefficients of q^1..q^count of -q x'/x; requires constant term 1.
    std::vector<Sqrt2> ghost_components(int count) const {
        if (c_[0] != Sqrt2(1)) throw NonUnitSeries("ghost components need constant term 1");
        Series g = -q_derivative() * invert();
        std::vector<Sqrt2> out;
        out.reserve(static_cast<size_t>(count));
        for (int k = 1; k <= count; ++k) out.push_back(g[k]);
        return out;
    }

    bool membership_scan() const {
        for (int k = 0; k <= order(); ++k)
            if (!c_[static_cast<size_t>(k)].in_z_inv_sqrt2()) return false;
        return true;
    }

private:
    std::vector<Sqrt2> c_;
};

// Lambert expansion: coefficient of q^m is sum_{d | m, d odd} f(d),
// by direct divisor enumeration. Coefficient of q^0 is 0.
inline Series lambert_expand(const OddCoefficientRule& f, int order) {
    Series r(order);
    for (int m = 1; m <= order; ++m) {
        Sqrt2 acc;
        for (int d = 1; d <= m; d += 2)
            if (m % d == 0) acc += f((d - 1) / 2);
        r.set(m, acc);
    }
    return r;
}

} // namespace qmoment
