#pragma once

// Rank-one structure of the deformation matrices: the symmetric polynomials
// p_l(m), the integers sigma(l,m), Gram matrices of the rank-one vectors,
// wedge-power trace series, their leading coefficients, and the determinant
// reconstruction that must agree with the Hankel pipeline.
//
// Single matrix entries would involve sqrt(sigma(l,i) sigma(l,j)), which is
// not in Q(sqrt2); everything computed here is a product of pairs and stays
// rational or in Q(sqrt2), so no entry is ever materialized.

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmoment/hankel.hpp"

namespace qmoment {

enum class Parity { even = 0, odd = 1 };

// p_l(m) = sum_{k<=l} 8^k C(m,k) C(l,k) / C(2k,k); symmetric in (l, m).
inline Rational p_poly(unsigned long l, unsigned long m) {
    Rational acc;
    for (unsigned long k = 0; k <= l; ++k)
        acc += Rational(pow2(3 * k) * binomial(m, k) * binomial(l, k), binomial(2 * k, k));
    return acc;
}

// sigma(l,m) = C(2l,l) C(2m,m) p_l(m)^2, always a nonnegative integer.
inline Rational sigma_lm(unsigned long l, unsigned long m) {
    return Rational(binomial(2 * l, l) * binomial(2 * m, m)) * p_poly(l, m) * p_poly(l, m);
}

struct IntegralityReport {
    bool ok = true;
    std::string counterexample;

    void fail(const std::string& what) {
        if (ok) counterexample = what;
        ok = false;
    }
};

// The divisibility facts behind the ring membership of the series coefficients:
//  (i)  C(2k,k) | C(2a,a) C(a,k) for k <= a, with the half-integer identity
//       C(a,k) C(2a,a)/C(2k,k) = 2^{2(a-k)} C(a-1/2, a-k);
//  (ii) C(2l,l) p_l(m) is an integer;
//  (iii) sigma(l,m) is an integer, with its double-sum expansion;
// plus the Catalan evaluation 2^{2k-1} C(1/2,k) = (-1)^{k-1} Cat(k-1).
inline IntegralityReport catalan_integrality_suite(unsigned bound) {
    IntegralityReport rep;
    auto note = [](auto... parts) {
        std::ostringstream os;
        (os << ... << parts);
        return os.str();
    };
    for (unsigned long a = 0; a <= bound && rep.ok; ++a)
        for (unsigned long k = 0; k <= a && rep.ok; ++k) {
            mpz_class num = binomial(2 * a, a) * binomial(a, k);
            if (num % binomial(2 * k, k) != 0)
                rep.fail(note("C(2k,k) does not divide C(2a,a)C(a,k) at a=", a, " k=", k));
            Rational lhs = Rational(num, binomial(2 * k, k));
            unsigned long u = a - k;
            Rational rhs = Rational(pow2(2 * u)) * gen_binomial(Rational(2 * static_cast<long>(a) - 1, 2), u);
            if (lhs != rhs) rep.fail(note("half-integer identity fails at a=", a, " k=", k));
        }
    for (unsigned long k = 1; k <= 20 && rep.ok; ++k) {
        Rational lhs = Rational(pow2(2 * k - 1)) * gen_binomial(Rational(1, 2), k);
        Rational cat = Rational(binomial(2 * (k - 1), k - 1), mpz_class(k));
        if (lhs != (k % 2 == 1 ? cat : -cat))
            rep.fail(note("Catalan evaluation fails at k=", k));
    }
    for (unsigned long l = 0; l <= bound && rep.ok; ++l)
        for (unsigned long m = 0; m <= bound && rep.ok; ++m) {
            Rational pl = p_poly(l, m);
            if (!(Rational(binomial(2 * l, l)) * pl).is_integer())
                rep.fail(note("C(2l,l) p_l(m) not integral at l=", l, " m=", m));
            Rational sg = Rational(binomial(2 * m, m) * binomial(2 * l, l)) * pl * pl;
            if (!sg.is_integer() || sg.sign() < 0)
                rep.fail(note("sigma(l,m) not a nonnegative integer at l=", l, " m=", m));
            // double-sum expansion of sigma(a,b)
            Rational ds;
            for (unsigned long kk = 0; kk <= l; ++kk)
                for (unsigned long kp = 0; kp <= m; ++kp)
                    ds += Rational(pow2(kk + kp + 2 * l + 2 * m)) *
                          gen_binomial(Rational(2 * static_cast<long>(l) - 1, 2), l - kk) *
                          gen_binomial(Rational(2 * static_cast<long>(m) - 1, 2), m - kp) *
                          Rational(binomial(m, kk) * binomial(l, kp));
            if (ds != sg) rep.fail(note("sigma double-sum identity fails at l=", l, " m=", m));
        }
    return rep;
}

// Coordinate-index set of one parity block of the (n+1)-dimensional grid.
inline std::vector<int> parity_block_indices(int n, Parity parity) {
    std::vector<int> ms;
    for (int m = (parity == Parity::even ? 0 : 1); m <= n; m += 2) ms.push_back(m);
    return ms;
}

struct RankOneSystem {
    int n = 0;
    Parity parity = Parity::even;
    std::vector<int> block;               // coordinate indices m of the block
    int l_max = 0;
    std::vector<Rational> gram;           // (l_max+1)^2, row-major
    std::vector<std::pair<int, Rational>> weights; // l -> (sign, |2 alpha_l|); value is sign*mag*sqrt2

    const Rational& g(int l, int lp) const {
        return gram[static_cast<size_t>(l) * (l_max + 1) + lp];
    }
};

// Gram matrix G(l,l') = sum_m 4^{-m} C(2m,m) p_l(m) p_{l'}(m) over the block
// coordinates, plus the signed Lambert weights (+-) 2 sqrt2 alpha_l.
inline RankOneSystem gram_matrix(int n, Parity parity, int l_max) {
    RankOneSystem sys;
    sys.n = n;
    sys.parity = parity;
    sys.block = parity_block_indices(n, parity);
    sys.l_max = l_max;
    sys.gram.assign(static_cast<size_t>(l_max + 1) * (l_max + 1), Rational(0));
    std::vector<std::vector<Rational>> pv(static_cast<size_t>(l_max) + 1);
    for (int l = 0; l <= l_max; ++l)
        for (int m : sys.block) pv[static_cast<size_t>(l)].push_back(p_poly(l, m));
    for (int l = 0; l <= l_max; ++l)
        for (int lp = l; lp <= l_max; ++lp) {
            Rational acc;
            for (size_t i = 0; i < sys.block.size(); ++i) {
                unsigned long m = static_cast<unsigned long>(sys.block[i]);
                acc += Rational(binomial(2 * m, m), pow2(2 * m)) *
                       pv[static_cast<size_t>(l)][i] * pv[static_cast<size_t>(lp)][i];
            }
            sys.gram[static_cast<size_t>(l) * (l_max + 1) + lp] = acc;
            sys.gram[static_cast<size_t>(lp) * (l_max + 1) + l] = acc;
        }
    for (int l = 0; l <= l_max; ++l) {
        Rational w = Rational(2) * alpha(static_cast<unsigned long>(l));
        int sg = (parity == Parity::even ? 1 : -1) * w.sign();
        if (w.sign() < 0) w = -w;
        sys.weights.emplace_back(sg, w);
    }
    return sys;
}

namespace detail {

// Exact determinant of a principal submatrix of the Gram matrix, by plain
// Gaussian elimination over Q.
inline Rational gram_minor_det(const RankOneSystem& sys, const std::vector<int>& idx) {
    size_t k = idx.size();
    if (k == 0) return Rational(1);
    std::vector<Rational> a(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a[i * k + j] = sys.g(idx[i], idx[j]);
    Rational det(1);
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && a[piv * k + c].is_zero()) ++piv;
        if (piv == k) return Rational(0);
        if (piv != c) {
            for (size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[c * k + j]);
            det = -det;
        }
        det *= a[c * k + c];
        Rational inv = a[c * k + c].inverse();
        for (size_t r = c + 1; r < k; ++r) {
            if (a[r * k + c].is_zero()) continue;
            Rational f = a[r * k + c] * inv;
            for (size_t j = c; j < k; ++j) a[r * k + j] -= f * a[c * k + j];
        }
    }
    return det;
}

// q^{2l+1}/(1 - q^{2l+1}) truncated.
inline Series lambert_factor(int l, int order) {
    Series s(order);
    for (int j = 2 * l + 1; j <= order; j += 2 * l + 1) s.set(j, Sqrt2(1));
    return s;
}

// (+-2 sqrt2 alpha_{l_1}) ... (+-2 sqrt2 alpha_{l_m}) for a subset.
inline Sqrt2 subset_weight(Parity parity, const std::vector<int>& idx) {
    Rational w(1);
    for (int l : idx) w *= Rational(2) * alpha(static_cast<unsigned long>(l));
    Sqrt2 v(w);
    for (size_t i = 0; i < idx.size(); ++i) v *= Sqrt2::sqrt2();
    if (parity == Parity::odd && idx.size() % 2 == 1) v = -v;
    return v;
}

template <typename Fn>
inline void for_each_subset(int l_max, int m, int order, Fn&& fn) {
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int start, int used_val) {
        if (static_cast<int>(idx.size()) == m) {
            fn(idx);
            return;
        }
        int remaining = m - static_cast<int>(idx.size());
        for (int l = start; l <= l_max; ++l) {
            // the cheapest completion uses l, l+1, ..., l+remaining-1
            int min_tail = remaining * (2 * l + 1) + 2 * (remaining - 1) * remaining / 2;
            if (used_val + min_tail > order) break;
            idx.push_back(l);
            rec(l + 1, used_val + 2 * l + 1);
            idx.pop_back();
        }
    };
    rec(0, 0);
}

} // namespace detail

// Tr of the m-th wedge power of the parity block, expanded to `order`:
// a sum over l-subsets of (product of weights) x (product of Lambert
// factors) x (Gram minor). Only l with 2l+1 <= order can contribute.
inline Series wedge_trace_series(int n, Parity parity, int m, int order) {
    int l_max = order >= 1 ? (order - 1) / 2 : 0;
    RankOneSystem sys = gram_matrix(n, parity, l_max);
    Series acc(order);
    detail::for_each_subset(l_max, m, order, [&](const std::vector<int>& idx) {
        Rational gd = detail::gram_minor_det(sys, idx);
        if (gd.is_zero()) return;
        Series prod = Series::one(order);
        for (int l : idx) prod = prod * detail::lambert_factor(l, order);
        acc = acc + prod * (detail::subset_weight(parity, idx) * Sqrt2(gd));
    });
    return acc;
}

// Closed form of the q^{m^2} coefficient of the m-th wedge trace:
// (+-2 sqrt2)^m alpha_0...alpha_{m-1} det(Gram restricted to l < m).
inline Sqrt2 leading_coeff(int n, Parity parity, int m) {
    RankOneSystem sys = gram_matrix(n, parity, m - 1);
    std::vector<int> idx(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) idx[static_cast<size_t>(l)] = l;
    return detail::subset_weight(parity, idx) * Sqrt2(detail::gram_minor_det(sys, idx));
}

// 1 + sum_m Tr(wedge^m) of one parity block: the block determinant as a
// unit series, from the rank-one route alone.
inline Series parity_det_via_rankone(int n, Parity parity, int order) {
    int dim = static_cast<int>(parity_block_indices(n, parity).size());
    Series s = Series::one(order);
    for (int m = 1; m <= dim; ++m) s = s + wedge_trace_series(n, parity, m, order);
    return s;
}

// Delta_n(q) reconstructed as the product of the two parity-block unit
// series; must equal the Hankel pipeline exactly.
inline Series det_via_rankone(int n, int order) {
    return parity_det_via_rankone(n, Parity::even, order) *
           parity_det_via_rankone(n, Parity::odd, order);
}

// ---- q=0 first-derivative fixtures -------------------------------------

struct NumberMatrix {
    int dim = 0;
    std::vector<Sqrt2> e;

    explicit NumberMatrix(int d) : dim(d), e(static_cast<size_t>(d) * d) {}
    Sqrt2& at(int i, int j) { return e[static_cast<size_t>(i) * dim + j]; }
    const Sqrt2& at(int i, int j) const { return e[static_cast<size_t>(i) * dim + j]; }

    Sqrt2 trace() const {
        Sqrt2 t;
        for (int i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }

    NumberMatrix inverse() const {
        NumberMatrix aug(dim);
        std::vector<Sqrt2> a = e;
        for (int i = 0; i < dim; ++i) aug.at(i, i) = Sqrt2(1);
        for (int c = 0; c < dim; ++c) {
            int piv = c;
            while (piv < dim && a[static_cast<size_t>(piv) * dim + c].is_zero()) ++piv;
            if (piv == dim) throw DivisionByZero("singular matrix");
            if (piv != c)
                for (int j = 0; j < dim; ++j) {
                    std::swap(a[static_cast<size_t>(piv) * dim + j], a[static_cast<size_t>(c) * dim + j]);
                    std::swap(aug.at(piv, j), aug.at(c, j));
                }
            Sqrt2 inv = a[static_cast<size_t>(c) * dim + c].inverse();
            for (int j = 0; j < dim; ++j) {
                a[static_cast<size_t>(c) * dim + j] *= inv;
                aug.at(c, j) *= inv;
            }
            for (int r = 0; r < dim; ++r) {
                if (r == c || a[static_cast<size_t>(r) * dim + c].is_zero()) continue;
                Sqrt2 f = a[static_cast<size_t>(r) * dim + c];
                for (int j = 0; j < dim; ++j) {
                    a[static_cast<size_t>(r) * dim + j] -= f * a[static_cast<size_t>(c) * dim + j];
                    aug.at(r, j) -= f * aug.at(c, j);
                }
            }
        }
        return aug;
    }

    friend NumberMatrix operator*(const NumberMatrix& x, const NumberMatrix& y) {
        NumberMatrix r(x.dim);
        for (int i = 0; i < x.dim; ++i)
            for (int k = 0; k < x.dim; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < x.dim; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
};

// Hankel matrix of the base moments at q=0.
inline NumberMatrix hankel_at_zero(int n) {
    std::vector<Sqrt2> c0 = archimedean_moments(static_cast<unsigned>(n));
    NumberMatrix m(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if ((i + j) % 2 == 0) m.at(i, j) = c0[static_cast<size_t>((i + j) / 2)];
    return m;
}

// First q-derivative of the Hankel matrix at q=0: signed powers of two,
// entry (i,j) = (-1)^k 2^{1-2k} at i+j = 2k.
inline NumberMatrix hankel_q_derivative_at_zero(int n) {
    NumberMatrix m(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if ((i + j) % 2 == 0) {
                int k = (i + j) / 2;
                Rational v = Rational(2) * Rational(mpz_class(1), pow2(2 * static_cast<unsigned long>(k)));
                m.at(i, j) = Sqrt2(k % 2 == 0 ? v : -v);
            }
    return m;
}

// L_n = D_n(0)^{-1} (d/dq D_n)(0); its trace is the q-coefficient of Delta_n.
inline NumberMatrix first_order_matrix(int n) {
    return hankel_at_zero(n).inverse() * hankel_q_derivative_at_zero(n);
}

} // namespace qmoment
