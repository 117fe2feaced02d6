#pragma once

// Hankel matrices of the deformed moments, their parity blocks, exact
// determinants in the truncated-series ring, and the unit normalizations
// Delta_n(q) = D_n(q)/D_n(0).

#include <map>
#include <string>
#include <vector>

#include "qmoment/moments.hpp"

namespace qmoment {

struct SeriesMatrix {
    int dim = 0;
    std::vector<Series> e; // row-major, dim*dim, uniform order

    explicit SeriesMatrix(int d, int order)
        : dim(d), e(static_cast<size_t>(d) * d, Series(order)), ord_(order) {}
    Series& at(int i, int j) { return e[static_cast<size_t>(i) * dim + j]; }
    const Series& at(int i, int j) const { return e[static_cast<size_t>(i) * dim + j]; }
    int order() const { return ord_; }

private:
    int ord_ = 0;
};

struct ParitySplit {
    SeriesMatrix even_part;
    SeriesMatrix odd_part;
};

// (n+1) x (n+1) matrix with entry (i,j) = c(i+j, q); odd moments vanish.
inline SeriesMatrix build_hankel(int n, const MomentTable& moments) {
    if (moments.max_k < static_cast<unsigned>(n))
        throw InsufficientMoments("build_hankel(" + std::to_string(n) + ") needs max_k >= " +
                                  std::to_string(n) + ", table has " + std::to_string(moments.max_k));
    SeriesMatrix m(n + 1, moments.order);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if ((i + j) % 2 == 0) m.at(i, j) = moments.entries[static_cast<size_t>((i + j) / 2)];
    return m;
}

// Restrictions to the even-index and odd-index coordinate subspaces. The
// source matrix must vanish at odd i+j; det(m) = det(even) * det(odd).
inline ParitySplit parity_split(const SeriesMatrix& m) {
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if ((i + j) % 2 == 1 && !m.at(i, j).is_zero())
                throw StructureError("parity_split: nonzero entry at odd i+j (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
    int ne = (m.dim + 1) / 2, no = m.dim / 2;
    ParitySplit s{SeriesMatrix(ne, m.order()), SeriesMatrix(no, m.order())};
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) s.even_part.at(i, j) = m.at(2 * i, 2 * j);
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j) s.odd_part.at(i, j) = m.at(2 * i + 1, 2 * j + 1);
    return s;
}

namespace detail {

// Exact division num/den in the truncated ring. A unit denominator divides
// directly; otherwise the known power of q is factored out first, which
// shortens the result accordingly (callers here always divide exactly).
inline Series exact_div(const Series& num, const Series& den) {
    int v = den.valuation();
    if (v == 0) return num * den.invert();
    if (num.valuation() < v) throw NonUnitSeries("exact_div: denominator valuation exceeds numerator");
    int n_ord = std::min(num.order(), den.order()) - v;
    Series ns(n_ord), ds(n_ord);
    for (int k = 0; k <= n_ord; ++k) {
        ns.set(k, num[k + v]);
        ds.set(k, den[k + v]);
    }
    return ns * ds.invert();
}

// Laplace expansion along the first remaining row with memoization on the
// column subset; exponential but exact with no divisions at all. Serves as
// the fallback for degenerate pivots and as an independent oracle.
inline Series det_cofactor_impl(const SeriesMatrix& m, int row, unsigned cols,
                                std::map<unsigned, Series>& memo) {
    if (cols == 0) return Series::one(m.order());
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Series acc(m.order());
    int parity = 0;
    for (int j = 0; j < m.dim; ++j) {
        if (!(cols & (1u << j))) continue;
        if (!m.at(row, j).is_zero()) {
            Series minor = det_cofactor_impl(m, row + 1, cols & ~(1u << j), memo);
            Series term = m.at(row, j) * minor;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
        }
        ++parity;
    }
    memo.emplace(cols, acc);
    return acc;
}

} // namespace detail

inline Series det_cofactor(const SeriesMatrix& m) {
    if (m.dim == 0) return Series::one(m.order());
    std::map<unsigned, Series> memo;
    return detail::det_cofactor_impl(m, 0, (1u << m.dim) - 1, memo);
}

// Fraction-free Bareiss elimination over the series ring. Pivots are minors
// of the input, units whenever the constant-term matrix has nonsingular
// leading blocks (true for the moment matrices handled here); a zero-constant
// pivot triggers a row swap and, failing that, the cofactor fallback.
inline Series det_series(const SeriesMatrix& m) {
    if (m.dim == 0) return Series::one(m.order());
    SeriesMatrix a = m;
    Series prev = Series::one(m.order());
    int sign = 1;
    for (int k = 0; k + 1 < a.dim; ++k) {
        if (a.at(k, k)[0].is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < a.dim; ++r)
                if (!a.at(r, k)[0].is_zero()) { swap = r; break; }
            if (swap < 0) return sign == 1 ? det_cofactor(a) : -det_cofactor(a);
            for (int j = 0; j < a.dim; ++j) std::swap(a.at(k, j), a.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < a.dim; ++i)
            for (int j = k + 1; j < a.dim; ++j)
                a.at(i, j) = detail::exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    Series d = a.at(a.dim - 1, a.dim - 1);
    return sign == 1 ? d : -d;
}

// D_n(0) = 2^{-n^2 - 3n/2 - 1/2} * prod_{k=1..n} (2k)!.
inline Sqrt2 d_n_zero_closed(int n) {
    Rational psi(1);
    for (int k = 1; k <= n; ++k) psi *= Rational(factorial(2 * static_cast<unsigned long>(k)));
    long twice_exp = -(2L * n * n + 3L * n + 1);
    return Sqrt2(psi) * pow2_half(twice_exp);
}

// Constant terms of the parity-block determinants: products over the rows
// actually present in each block (2k <= n, resp. 2k+1 <= n).
inline std::pair<Sqrt2, Sqrt2> d_n_zero_parity(int n) {
    Sqrt2 dp(1), dm(1);
    for (int k = 0; 2 * k <= n; ++k)
        dp *= pow2_half(-8L * k - 1) * Sqrt2(Rational(factorial(4 * static_cast<unsigned long>(k))));
    for (int k = 0; 2 * k + 1 <= n; ++k)
        dm *= pow2_half(-8L * k - 5) * Sqrt2(Rational(factorial(4 * static_cast<unsigned long>(k) + 2)));
    return {dp, dm};
}

// Delta_n(q) = D_n(q)/D_n(0), a unit series with constant term 1.
// Delta_{-1} is the empty determinant 1.
inline Series delta_series(int n, const MomentTable& moments) {
    if (n < 0) return Series::one(moments.order);
    Series d = det_series(build_hankel(n, moments));
    return d * d[0].inverse();
}

// Unit series of one parity block of the Hankel matrix.
inline Series parity_delta_series(int n, bool odd, const MomentTable& moments) {
    if (n < 0) return Series::one(moments.order);
    ParitySplit s = parity_split(build_hankel(n, moments));
    Series d = det_series(odd ? s.odd_part : s.even_part);
    return d * d[0].inverse();
}

// Raw parity-block determinant series C_n (even block for n even, odd block
// for n odd); C_{-1} = C_{-2} = 1 by the empty-matrix convention.
inline Series parity_block_det(int n, const MomentTable& moments) {
    if (n < 0) return Series::one(moments.order);
    ParitySplit s = parity_split(build_hankel(n, moments));
    return det_series(n % 2 == 0 ? s.even_part : s.odd_part);
}

} // namespace qmoment
