#pragma once

// Moment data for the one-prime deformation: the exact even moments of the
// base measure at q=0, the Lambert weights alpha_l, and the deformed moment
// series c(2k, q) together with their evaluation at rational q = 1/p.

#include <string>
#include <vector>

#include "qmoment/series.hpp"

namespace qmoment {

// alpha_l = (-4)^{-l} * C(2l, l), the Taylor coefficients of 1/sqrt(1+x^2).
inline Rational alpha(unsigned long l) {
    Rational a(binomial(2 * l, l), pow2(2 * l));
    return (l % 2 == 0) ? a : -a;
}

namespace detail {

// Rational power series in x, dense, fixed length; enough for the base
// moments which come from an even series.
using RatSeries = std::vector<Rational>;

inline RatSeries rat_mul(const RatSeries& x, const RatSeries& y, size_t n) {
    RatSeries r(n + 1);
    for (size_t i = 0; i <= n && i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; i + j <= n && j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            r[i + j] += x[i] * y[j];
        }
    }
    return r;
}

// u^{-1/2} for a rational series with u(0) = 1, by Newton iteration
// y <- y (3 - u y^2)/2; the iterate doubles its agreement each step.
inline RatSeries inverse_sqrt(const RatSeries& u, size_t n) {
    RatSeries y(n + 1);
    y[0] = Rational(1);
    size_t correct = 1;
    while (correct <= n) {
        RatSeries uy2 = rat_mul(u, rat_mul(y, y, n), n);
        RatSeries t(n + 1);
        t[0] = Rational(3) - uy2[0];
        for (size_t k = 1; k <= n; ++k) t[k] = -uy2[k];
        y = rat_mul(y, t, n);
        for (auto& c : y) c *= Rational(1, 2);
        correct *= 2;
    }
    return y;
}

} // namespace detail

// Normalized even base moments: entry k is sqrt2 * c0(2k), a rational.
// Obtained from the Taylor expansion of cosh(x)^{-1/2}.
inline std::vector<Rational> normalized_archimedean_moments(unsigned max_k) {
    size_t n = 2 * static_cast<size_t>(max_k);
    detail::RatSeries cosh(n + 1);
    for (size_t j = 0; j <= n; j += 2) cosh[j] = Rational(mpz_class(1), factorial(j));
    detail::RatSeries v = detail::inverse_sqrt(cosh, n);
    std::vector<Rational> out;
    out.reserve(max_k + 1);
    for (unsigned k = 0; k <= max_k; ++k) {
        Rational c = v[2 * static_cast<size_t>(k)] * Rational(factorial(2 * k));
        out.push_back(k % 2 == 0 ? c : -c);
    }
    return out;
}

// Un-normalized base moments c0(2k) = (normalized)/sqrt2.
inline std::vector<Sqrt2> archimedean_moments(unsigned max_k) {
    std::vector<Rational> norm = normalized_archimedean_moments(max_k);
    std::vector<Sqrt2> out;
    out.reserve(norm.size());
    for (const Rational& r : norm) out.emplace_back(Rational(0), r * Rational(1, 2));
    return out;
}

// f_k(2l+1) = 2 (1/2 + 2l)^{2k} alpha_l, the Lambert weight rule of the
// deformed moment of degree 2k.
inline OddCoefficientRule moment_weight_rule(unsigned k) {
    return [k](long l) {
        Rational half_plus = Rational(1 + 4 * l, 2);
        return Sqrt2(Rational(2) * half_plus.pow(2 * k) * alpha(static_cast<unsigned long>(l)));
    };
}

// c(2k, q) = c0(2k) + (-1)^k L_{f_k}(q), truncated at `order`.
inline Series semilocal_moment_series(unsigned k, int order) {
    Series lam = lambert_expand(moment_weight_rule(k), order);
    if (k % 2 == 1) lam = -lam;
    std::vector<Sqrt2> c0 = archimedean_moments(k);
    return lam + Series::constant(c0[k], order);
}

struct MomentTable {
    unsigned max_k = 0;
    int order = 0;
    std::vector<Series> entries;     // k -> c(2k, q)
    std::vector<Sqrt2> archimedean;  // k -> c0(2k)

    static MomentTable build(unsigned max_k, int order) {
        MomentTable t;
        t.max_k = max_k;
        t.order = order;
        t.archimedean = archimedean_moments(max_k);
        std::vector<Rational> norm = normalized_archimedean_moments(max_k);
        t.entries.reserve(max_k + 1);
        for (unsigned k = 0; k <= max_k; ++k) {
            Series lam = lambert_expand(moment_weight_rule(k), order);
            if (k % 2 == 1) lam = -lam;
            t.entries.push_back(lam + Series::constant(t.archimedean[k], order));
        }
        return t;
    }
};

// Exact value of c(2k, 1/p) using the Lambert weights f_k(2l+1) for
// l = 0..lambert_terms; each Lambert summand q^n/(1-q^n) at q = 1/p is
// 1/(p^n - 1). The truncation index is inclusive so that `40` matches the
// published reference values.
inline Sqrt2 moment_at_inverse_prime(unsigned k, unsigned long p, unsigned lambert_terms) {
    Rational lam;
    for (unsigned long l = 0; l <= lambert_terms; ++l) {
        mpz_class pn;
        mpz_ui_pow_ui(pn.get_mpz_t(), p, 2 * l + 1);
        Rational half_plus = Rational(static_cast<long>(1 + 4 * l), 2);
        lam += Rational(2) * half_plus.pow(2 * k) * alpha(l) / Rational(mpz_class(pn - 1));
    }
    if (k % 2 == 1) lam = -lam;
    std::vector<Sqrt2> c0 = archimedean_moments(k);
    return c0[k] + Sqrt2(lam);
}

// Ratios c(2k, 1/p)/c(0, 1/p), k = 1..max_k, rendered at precision_digits.
inline std::vector<std::string> numeric_ratios(unsigned long p, unsigned max_k,
                                               unsigned lambert_terms,
                                               unsigned precision_digits) {
    Sqrt2 c0 = moment_at_inverse_prime(0, p, lambert_terms);
    std::vector<std::string> out;
    out.reserve(max_k);
    for (unsigned k = 1; k <= max_k; ++k)
        out.push_back((moment_at_inverse_prime(k, p, lambert_terms) / c0).to_decimal(precision_digits));
    return out;
}

// Same ratios as exact field elements (used by the convergence checks).
inline std::vector<Sqrt2> exact_ratios(unsigned long p, unsigned max_k, unsigned lambert_terms) {
    Sqrt2 c0 = moment_at_inverse_prime(0, p, lambert_terms);
    std::vector<Sqrt2> out;
    out.reserve(max_k);
    for (unsigned k = 1; k <= max_k; ++k)
        out.push_back(moment_at_inverse_prime(k, p, lambert_terms) / c0);
    return out;
}

} // namespace qmoment
