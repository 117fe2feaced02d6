#pragma once

// Exact machinery for the q=0 orthonormal-basis identities: the inverse of
// the base Hankel matrix factors through the upper-triangular matrix of
// orthonormal-polynomial coefficients (Aitken's Hankel-inverse identity),
// and the compression of multiplication-by-x reproduces the monic
// recurrence.
//
// Basis-polynomial coefficients involve i (odd-degree polynomials are purely
// imaginary) and a factor sqrt((2m)!). The former is handled with Gaussian
// rationals, the latter as a (rational multiplier, squarefree kernel) tag
// that must cancel in every comparison; a surviving kernel is an error.

#include <utility>
#include <vector>

#include "qmoment/moments.hpp"

namespace qmoment {

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator*(const GaussianRational& x, const Rational& r) {
        return {x.re * r, x.im * r};
    }
    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
};

namespace detail {

// (multiplier, squarefree kernel) with (2m)! = multiplier^2 * kernel, via
// the prime factorization of the factorial.
inline std::pair<mpz_class, mpz_class> factorial_sqrt_split(unsigned long two_m) {
    mpz_class mult(1), kernel(1);
    for (unsigned long p = 2; p <= two_m; ++p) {
        bool prime = true;
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        unsigned long e = 0;
        for (unsigned long q = p; q <= two_m; q *= p) {
            e += two_m / q;
            if (q > two_m / p) break;
        }
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
        mult *= pe;
        if (e % 2 == 1) kernel *= static_cast<unsigned long>(p);
    }
    return {mult, kernel};
}

} // namespace detail

// A value c * sqrt(kernel) with squarefree positive kernel. Addition is only
// defined within one kernel class; comparisons against rationals require the
// kernel to have cancelled.
struct TaggedRoot {
    GaussianRational c;
    mpz_class kernel = 1;

    static TaggedRoot sqrt_factorial(unsigned long two_m) {
        auto [mult, kern] = detail::factorial_sqrt_split(two_m);
        return {GaussianRational(Rational(mult), Rational(0)), kern};
    }

    bool is_zero() const { return c.is_zero(); }

    friend TaggedRoot operator*(const TaggedRoot& x, const TaggedRoot& y) {
        mpz_class g = gcd(x.kernel, y.kernel);
        TaggedRoot r;
        r.c = x.c * y.c * Rational(g);
        r.kernel = (x.kernel / g) * (y.kernel / g); // coprime squarefrees stay squarefree
        return r;
    }

    TaggedRoot& operator+=(const TaggedRoot& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (kernel != o.kernel)
            throw SurvivingRootTag("adding values with distinct root kernels");
        c += o.c;
        return *this;
    }

    // The rational value, insisting that no root survives.
    Rational rational_value() const {
        if (is_zero()) return Rational(0);
        if (kernel != 1) throw SurvivingRootTag("kernel survived where a rational was required");
        if (!c.im.is_zero()) throw SurvivingRootTag("imaginary part survived");
        return c.re;
    }
};

// Coefficients (in x) of the degree-m orthonormal basis polynomial, without
// its sqrt((2m)!) prefactor:
//   S_m(x) = sum_{k<=m} (-1)^k 2^{3k-m} prod_{j<k}(j - ix/2 + 1/4) / ((2k)! (m-k)!)
// Coefficients vanish for odd m-k, are real for even m, purely imaginary for
// odd m.
inline std::vector<GaussianRational> basis_poly_coeffs(int m) {
    std::vector<GaussianRational> total(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<GaussianRational> poly{GaussianRational(Rational(1), Rational(0))};
        for (int j = 0; j < k; ++j) {
            std::vector<GaussianRational> next(poly.size() + 1);
            GaussianRational constant(Rational(4 * j + 1, 4), Rational(0));
            GaussianRational slope(Rational(0), Rational(-1, 2));
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d] * constant;
                next[d + 1] += poly[d] * slope;
            }
            poly = std::move(next);
        }
        long e = 3L * k - m;
        Rational p2 = e >= 0 ? Rational(pow2(static_cast<unsigned long>(e)))
                             : Rational(mpz_class(1), pow2(static_cast<unsigned long>(-e)));
        Rational scale = p2 / Rational(mpz_class(factorial(2 * static_cast<unsigned long>(k)) *
                                       factorial(static_cast<unsigned long>(m - k))));
        if (k % 2 == 1) scale = -scale;
        for (size_t d = 0; d < poly.size(); ++d) total[d] += poly[d] * scale;
    }
    return total;
}

namespace detail {

// Entry (m, m') of B^* M B where M is a rational symmetric matrix and B has
// columns tagged by sqrt((2m)!): every summand shares one kernel.
inline TaggedRoot basis_conjugated_entry(const std::vector<std::vector<GaussianRational>>& bcols,
                                         const std::vector<std::vector<Rational>>& M, int m, int mp) {
    int n = static_cast<int>(M.size()) - 1;
    GaussianRational acc;
    for (int j = 0; j <= n; ++j) {
        if (j >= static_cast<int>(bcols[static_cast<size_t>(m)].size())) continue;
        const GaussianRational& bj = bcols[static_cast<size_t>(m)][static_cast<size_t>(j)];
        if (bj.is_zero()) continue;
        for (int k = 0; k <= n; ++k) {
            if (M[static_cast<size_t>(j)][static_cast<size_t>(k)].is_zero()) continue;
            if (k >= static_cast<int>(bcols[static_cast<size_t>(mp)].size())) continue;
            const GaussianRational& bk = bcols[static_cast<size_t>(mp)][static_cast<size_t>(k)];
            if (bk.is_zero()) continue;
            acc += bj.conj() * bk * M[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
    }
    TaggedRoot tag = TaggedRoot::sqrt_factorial(2 * static_cast<unsigned long>(m)) *
                     TaggedRoot::sqrt_factorial(2 * static_cast<unsigned long>(mp));
    TaggedRoot r;
    r.c = acc * tag.c;
    r.kernel = tag.kernel;
    if (r.c.is_zero()) r.kernel = 1;
    return r;
}

inline std::vector<std::vector<GaussianRational>> basis_columns(int n) {
    std::vector<std::vector<GaussianRational>> cols;
    cols.reserve(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) cols.push_back(basis_poly_coeffs(m));
    return cols;
}

} // namespace detail

// B^* (sqrt2 D(n)(0)) B = Id, all root tags cancelling. The sqrt2 factor
// normalizes the base moments.
inline bool aitken_identity_check(int n) {
    std::vector<Rational> norm = normalized_archimedean_moments(static_cast<unsigned>(n));
    std::vector<std::vector<Rational>> M(static_cast<size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<size_t>(n) + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if ((i + j) % 2 == 0) M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                norm[static_cast<size_t>((i + j) / 2)];
    auto bcols = detail::basis_columns(n);
    for (int m = 0; m <= n; ++m)
        for (int mp = 0; mp <= n; ++mp) {
            TaggedRoot t = detail::basis_conjugated_entry(bcols, M, m, mp);
            if (m != mp) {
                if (!t.is_zero()) return false;
            } else if (t.rational_value() != Rational(1)) {
                return false;
            }
        }
    return true;
}

// Characteristic polynomial (monic, coefficients by increasing degree) of
// the compression B^* D'(n) B of multiplication by x, built from the
// normalized shifted moments c(i+j+1). The compression must come out
// tridiagonal with zero diagonal; its recurrence then gives the polynomial
// with rational off-diagonal squares.
inline std::vector<Rational> compression_charpoly(int n, const std::vector<Rational>& normalized_moments) {
    std::vector<std::vector<Rational>> M(static_cast<size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<size_t>(n) + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if ((i + j + 1) % 2 == 0)
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    normalized_moments[static_cast<size_t>((i + j + 1) / 2)];
    auto bcols = detail::basis_columns(n);
    std::vector<std::vector<TaggedRoot>> J(static_cast<size_t>(n) + 1,
                                           std::vector<TaggedRoot>(static_cast<size_t>(n) + 1));
    for (int m = 0; m <= n; ++m)
        for (int mp = 0; mp <= n; ++mp) {
            J[static_cast<size_t>(m)][static_cast<size_t>(mp)] =
                detail::basis_conjugated_entry(bcols, M, m, mp);
            if (std::abs(m - mp) != 1 && !J[static_cast<size_t>(m)][static_cast<size_t>(mp)].is_zero())
                throw StructureError("compression is not tridiagonal with zero diagonal");
        }
    // chi_{k+1}(x) = x chi_k(x) - beta_k chi_{k-1}(x), beta_k = J(k,k+1) J(k+1,k)
    std::vector<Rational> prev{Rational(1)};
    std::vector<Rational> cur{Rational(0), Rational(1)};
    for (int k = 0; k < n; ++k) {
        TaggedRoot prod = J[static_cast<size_t>(k)][static_cast<size_t>(k + 1)] *
                          J[static_cast<size_t>(k + 1)][static_cast<size_t>(k)];
        Rational beta = prod.rational_value();
        std::vector<Rational> next(cur.size() + 1);
        for (size_t d = 0; d < cur.size(); ++d) next[d + 1] += cur[d];
        for (size_t d = 0; d < prev.size(); ++d) next[d] -= beta * prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace qmoment
