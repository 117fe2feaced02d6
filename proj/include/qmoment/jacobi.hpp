#pragma once

// Jacobi data of the deformed measure: the off-diagonal squares a(n)^2(q)
// from two independent determinant routes, the diagonal entries -i d_n(q),
// and the monic orthogonal polynomials with q-series coefficients.

#include <vector>

#include "qmoment/aitken.hpp"
#include "qmoment/hankel.hpp"

namespace qmoment {

// a(n)^2(q) = (n + 1/2)(n + 1) Delta_{n-1} Delta_{n+1} / Delta_n^2, with
// constant term (n + 1/2)(n + 1).
inline Series a_squared_series(int n, const MomentTable& moments) {
    Rational c = Rational(2 * n + 1, 2) * Rational(n + 1);
    Series num = delta_series(n - 1, moments) * delta_series(n + 1, moments);
    Series den = delta_series(n, moments);
    return num * (den * den).invert() * Sqrt2(c);
}

// Same series from the parity-block determinants C_n alone:
// a(n)^2 = (C_{n-2}/C_n)(C_{n+1}/C_{n-1}); the two pipelines must agree.
inline Series a_squared_via_parity(int n, const MomentTable& moments) {
    Series cm2 = parity_block_det(n - 2, moments);
    Series cm1 = parity_block_det(n - 1, moments);
    Series c0 = parity_block_det(n, moments);
    Series cp1 = parity_block_det(n + 1, moments);
    return cm2 * cp1 * (c0 * cm1).invert();
}

// -i d_n = -2n - 1/2 + a(n)^2 - a(n-1)^2; the constant terms cancel exactly.
inline Series d_entry_series(int n, const MomentTable& moments) {
    Series s = a_squared_series(n, moments) - a_squared_series(n - 1, moments);
    Series shift = Series::constant(Sqrt2(Rational(-(4 * n + 1), 2)), s.order());
    return s + shift;
}

struct JacobiData {
    int n = 0;
    Series a_squared;
    Series d_entry;

    static JacobiData build(int n, const MomentTable& moments) {
        return {n, a_squared_series(n, moments), d_entry_series(n, moments)};
    }
};

struct PolynomialWithSeriesCoefficients {
    int degree = 0;
    std::vector<Series> coeffs; // coeffs[k] multiplies x^k; leading one is the constant series 1
};

// Monic family by the three-term recurrence P_0 = 1, P_1 = x,
// P_{k+1} = x P_k - a(k-1)^2(q) P_{k-1}. The characteristic polynomial of
// the k x k truncation of the tridiagonal matrix with off-diagonals a(j)
// only sees the squares, so no series square roots appear.
inline std::vector<PolynomialWithSeriesCoefficients> monic_orthogonal_polys(int n_max,
                                                                            const MomentTable& moments) {
    int order = moments.order;
    std::vector<PolynomialWithSeriesCoefficients> fam;
    fam.reserve(static_cast<size_t>(n_max) + 1);
    fam.push_back({0, {Series::one(order)}});
    if (n_max >= 1) fam.push_back({1, {Series(order), Series::one(order)}});
    for (int k = 1; k < n_max; ++k) {
        Series a2 = a_squared_series(k - 1, moments);
        PolynomialWithSeriesCoefficients next;
        next.degree = k + 1;
        next.coeffs.assign(static_cast<size_t>(k) + 2, Series(order));
        for (int d = 0; d <= k; ++d) next.coeffs[static_cast<size_t>(d + 1)] = fam.back().coeffs[static_cast<size_t>(d)];
        const auto& prev2 = fam[static_cast<size_t>(k - 1)].coeffs;
        for (int d = 0; d < k; ++d)
            next.coeffs[static_cast<size_t>(d)] = next.coeffs[static_cast<size_t>(d)] - a2 * prev2[static_cast<size_t>(d)];
        fam.push_back(std::move(next));
    }
    return fam;
}

// At q=0: the characteristic polynomial of the compression of
// multiplication by x (computed through the orthonormal basis matrix, root
// tags cancelling) must reproduce the monic recurrence with
// a(k)^2(0) = (k + 1/2)(k + 1).
inline bool compression_charpoly_check(int n, const std::vector<Rational>& normalized_moments) {
    std::vector<Rational> chi = compression_charpoly(n, normalized_moments);
    std::vector<Rational> prev{Rational(1)};
    std::vector<Rational> cur{Rational(0), Rational(1)};
    for (int k = 1; k <= n; ++k) {
        Rational a2 = Rational(2 * k - 1, 2) * Rational(k); // a(k-1)^2 at q=0
        std::vector<Rational> next(cur.size() + 1);
        for (size_t d = 0; d < cur.size(); ++d) next[d + 1] += cur[d];
        for (size_t d = 0; d < prev.size(); ++d) next[d] -= a2 * prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return chi == cur;
}

inline bool compression_charpoly_check(int n) {
    return compression_charpoly_check(n, normalized_archimedean_moments(static_cast<unsigned>(n) + 1));
}

} // namespace qmoment
