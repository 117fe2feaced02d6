#pragma once

// Order-by-order extraction of the eigenvalue q-series of the parity blocks
// from their wedge-power traces. The k-th eigenvalue of a (n+1)-dimensional
// block has q-adic valuation 2k+1; under that ansatz the coefficients are
// determined by a triangular schedule: powers j are processed in increasing
// order and, within a power, the eigenvalue index k in decreasing order,
// each unknown lambda(k,j) read off the trace of the (k+1)-st wedge power at
// exponent k^2 + j, where its cofactor lambda(0,1)...lambda(k-1,2k-1) has
// the minimal valuation k^2.

#include <string>
#include <vector>

#include "qmoment/rankone.hpp"

namespace qmoment {

struct EigenProvenance {
    int k = 0;        // eigenvalue index
    int j = 0;        // power of q fixed
    int trace_m = 0;  // which wedge trace supplied the equation
    int exponent = 0; // exponent of q in that trace
};

struct EigenSeriesFamily {
    int n = -1;                     // family index; block dimension is n+1 (n = -1: empty block)
    Parity parity = Parity::even;
    std::vector<Series> series;     // series[k] = lambda(k), valuation >= 2k+1
    std::vector<EigenProvenance> provenance;
};

// Hankel index whose parity block realizes the family: the smallest n with
// (n+1)-dimensional block of the given parity.
inline int family_hankel_index(int n, Parity parity) {
    return parity == Parity::even ? 2 * n : 2 * n + 1;
}

namespace detail {

// Coefficient of x^m q^X in prod_l (1 + x lambda_l(q)), using the currently
// known lambda coefficients.
inline Sqrt2 esym_coeff(const std::vector<Series>& lam, int m, int X) {
    std::vector<std::vector<Sqrt2>> P(static_cast<size_t>(m) + 1,
                                      std::vector<Sqrt2>(static_cast<size_t>(X) + 1));
    P[0][0] = Sqrt2(1);
    for (size_t l = 0; l < lam.size(); ++l) {
        for (int d = m; d >= 1; --d) {
            for (int i = 0; i <= X; ++i) {
                if (P[static_cast<size_t>(d - 1)][static_cast<size_t>(i)].is_zero()) continue;
                int lo = 2 * static_cast<int>(l) + 1;
                for (int j = lo; i + j <= X && j <= lam[l].order(); ++j) {
                    if (lam[l][j].is_zero()) continue;
                    P[static_cast<size_t>(d)][static_cast<size_t>(i + j)] +=
                        P[static_cast<size_t>(d - 1)][static_cast<size_t>(i)] * lam[l][j];
                }
            }
        }
    }
    return P[static_cast<size_t>(m)][static_cast<size_t>(X)];
}

} // namespace detail

// Solve the triangular schedule on a given family of wedge traces
// (traces[m-1] must hold Tr(wedge^m) to order n^2 + order at least). After
// the schedule runs, every wedge trace is recomputed from the extracted
// series and compared, so a schedule bug cannot produce silently wrong
// output.
inline EigenSeriesFamily extract_from_traces(const std::vector<Series>& traces, int n,
                                             Parity parity, int order) {
    EigenSeriesFamily fam;
    fam.n = n;
    fam.parity = parity;
    if (n < 0) return fam;
    if (static_cast<int>(traces.size()) < n + 1)
        throw std::invalid_argument("extract_from_traces: need traces of wedge powers 1.." +
                                    std::to_string(n + 1));
    for (int k = 0; k <= std::min(n, order >= 1 ? (order - 1) / 2 : 0); ++k)
        if (traces[static_cast<size_t>(k)].order() < k * k + order)
            throw std::invalid_argument("extract_from_traces: wedge trace " + std::to_string(k + 1) +
                                        " needs order >= " + std::to_string(k * k + order));
    fam.series.assign(static_cast<size_t>(n) + 1, Series(order));
    for (int J = 1; J <= order; ++J) {
        int k_hi = std::min(n, (J - 1) / 2);
        for (int k = k_hi; k >= 0; --k) {
            int X = k * k + J;
            Sqrt2 cofactor(1);
            for (int l = 0; l < k; ++l) {
                if (fam.series[static_cast<size_t>(l)][2 * l + 1].is_zero())
                    throw ExtractionError("vanishing cofactor: lambda(" + std::to_string(l) +
                                          ") has zero leading coefficient");
                cofactor *= fam.series[static_cast<size_t>(l)][2 * l + 1];
            }
            Sqrt2 rest = detail::esym_coeff(fam.series, k + 1, X); // with lambda(k,J) still 0
            fam.series[static_cast<size_t>(k)].set(
                J, (traces[static_cast<size_t>(k)][X] - rest) / cofactor);
            fam.provenance.push_back({k, J, k + 1, X});
        }
    }

    // post-hoc verification: multiply the factors back
    for (int m = 1; m <= n + 1; ++m)
        for (int X = 0; X <= order; ++X)
            if (detail::esym_coeff(fam.series, m, X) != traces[static_cast<size_t>(m - 1)][X])
                throw ExtractionError("inconsistent trace coefficient at wedge " + std::to_string(m) +
                                      ", exponent " + std::to_string(X));
    return fam;
}

// Extract the eigenvalue family of the parity block with n+1 eigenvalues, to
// the requested series order. The wedge traces are computed once, up front,
// to the maximal scheduled exponent n^2 + order.
inline EigenSeriesFamily extract_eigen_series(int n, Parity parity, int order) {
    if (n < 0) {
        EigenSeriesFamily fam;
        fam.n = n;
        fam.parity = parity;
        return fam;
    }
    int n_h = family_hankel_index(n, parity);
    int trace_order = n * n + order;
    std::vector<Series> traces; // traces[m-1] = Tr(wedge^m), m = 1..n+1
    traces.reserve(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n + 1; ++m)
        traces.push_back(wedge_trace_series(n_h, parity, m, trace_order));
    return extract_from_traces(traces, n, parity, order);
}

// prod_k (1 + lambda(k)) over both families; equals Delta_n of the Hankel
// index n with block dimensions a+1 = dim(even), b+1 = dim(odd).
inline Series reconstruct_delta(const EigenSeriesFamily& fam_even, const EigenSeriesFamily& fam_odd) {
    int order = -1;
    for (const auto* f : {&fam_even, &fam_odd})
        for (const Series& s : f->series) order = order < 0 ? s.order() : std::min(order, s.order());
    if (order < 0) order = 0;
    Series prod = Series::one(order);
    for (const auto* f : {&fam_even, &fam_odd})
        for (const Series& s : f->series) prod = prod * (Series::one(order) + s);
    return prod;
}

// Convenience: both families of the Hankel index n, multiplied out.
inline Series delta_via_eigen(int n, int order) {
    int a = static_cast<int>(parity_block_indices(n, Parity::even).size()) - 1;
    int b = static_cast<int>(parity_block_indices(n, Parity::odd).size()) - 1;
    EigenSeriesFamily fe = extract_eigen_series(a, Parity::even, order);
    EigenSeriesFamily fo = extract_eigen_series(b, Parity::odd, order);
    return reconstruct_delta(fe, fo);
}

// Every coefficient of every eigenvalue series is a rational multiple of
// sqrt2 (zero rational component).
inline bool sqrt2_rationality_check(const EigenSeriesFamily& fam) {
    for (const Series& s : fam.series)
        for (int k = 0; k <= s.order(); ++k)
            if (!s[k].a().is_zero()) return false;
    return true;
}

} // namespace qmoment
