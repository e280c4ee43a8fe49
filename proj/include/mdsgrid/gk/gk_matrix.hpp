#pragma once

#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/gk/polynomial.hpp"
#include "mdsgrid/linalg/fraction_free.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"

namespace mdsgrid {

// Normalized configuration for parameters (n, alpha, beta):
//   P_i = (0, beta + i)              0 <= i < n
//   Q   = (alpha + i, j)             0 <= i < n, 0 <= j <= n - 1 - i
//   L   = (-1, beta + n + 1)
//   G_j(x, y) = binom(x - alpha, j) * binom(y, n - j)   0 <= j <= n
// Every G_j vanishes on all Q points.

inline void require_gk_parameters(const Integer& n, const Integer& alpha, const Integer& beta) {
    if (n < 1) throw DomainError("gk-parameter", "n must be >= 1, got " + n.get_str());
    if (alpha < 1) throw DomainError("gk-parameter", "alpha must be >= 1, got " + alpha.get_str());
    if (beta < 0) throw DomainError("gk-parameter", "beta must be >= 0, got " + beta.get_str());
    if (n > 4096) throw DomainError("gk-parameter", "n too large for a dense matrix");
}

/// G_j evaluated at an integer point.
inline Integer gk_basis_value(long n, long j, const Integer& alpha, const Integer& x, const Integer& y) {
    return binom(Integer(x - alpha), j) * binom(y, n - j);
}

/// (n+1) x (n+1) matrix with rows P_0..P_{n-1}, L and columns G_0..G_n.
inline IntMatrix build_gk_matrix(const Integer& n_, const Integer& alpha, const Integer& beta) {
    require_gk_parameters(n_, alpha, beta);
    const long n = n_.get_si();
    IntMatrix m(n + 1, n + 1);
    for (long j = 0; j <= n; ++j) {
        Integer top = binom(Integer(-alpha), j);
        Integer left = binom(Integer(-1 - alpha), j);
        for (long i = 0; i < n; ++i) m(i, j) = top * binom(Integer(beta + i), n - j);
        m(n, j) = left * binom(Integer(beta + n + 1), n - j);
    }
    return m;
}

/// First n rows of the GK matrix (the P rows only).
inline IntMatrix build_gk_matrix_prime(const Integer& n, const Integer& alpha, const Integer& beta) {
    IntMatrix m = build_gk_matrix(n, alpha, beta);
    return m.first_rows(m.rows() - 1);
}

/// The curve through all P and Q also passes through L iff n*beta = (n+1)*alpha.
inline bool gk_det_predicate(const Integer& n, const Integer& alpha, const Integer& beta) {
    require_gk_parameters(n, alpha, beta);
    return n * beta == (n + 1) * alpha;
}

/// Forward-differences the P rows: pass k (k = 1..n-1) replaces row i by
/// row i - row (i-1) for i = n-1 down to k. The result is upper-left
/// triangular with entry binom(-alpha, j) * binom(beta, n-i-j), zero for i+j > n.
inline IntMatrix gk_row_difference_replay(const IntMatrix& m_prime) {
    IntMatrix r = m_prime;
    const std::size_t n = r.rows();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= r(i - 1, j);
            if (i == k) break;
        }
    }
    return r;
}

/// Closed form of the replayed matrix.
inline IntMatrix gk_upper_diagonal_form(const Integer& n_, const Integer& alpha, const Integer& beta) {
    require_gk_parameters(n_, alpha, beta);
    const long n = n_.get_si();
    IntMatrix out(n, n + 1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= n; ++j) out(i, j) = i + j <= n ? Integer(binom(Integer(-alpha), j) * binom(beta, n - i - j)) : Integer(0);
    return out;
}

/// Coefficients c_0..c_n over the G-basis of the unique degree <= n curve through
/// all P and Q, scaled so the first nonzero coordinate is 1.
inline std::vector<Rational> gk_interpolation_curve(const Integer& n, const Integer& alpha, const Integer& beta) {
    IntMatrix mp = build_gk_matrix_prime(n, alpha, beta);
    auto kernel = nullspace(mp);
    if (kernel.size() != 1) {
        throw InvariantViolation("gk-rank", "rank of the P-row matrix is " + std::to_string(mp.cols() - kernel.size()) +
                                                ", expected n = " + n.get_str());
    }
    const auto& k = kernel.front();
    std::size_t lead = 0;
    while (k[lead] == 0) ++lead;
    std::vector<Rational> c(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) c[i] = make_rational(k[i], k[lead]);
    return c;
}

/// G_j in monomial form.
inline BivariatePolynomial gk_basis_polynomial(long n, long j, const Integer& alpha) {
    auto x_shift = BivariatePolynomial::linear(1, 0, Rational(-alpha));
    auto y = BivariatePolynomial::linear(0, 1, 0);
    return binomial_polynomial(x_shift, j) * binomial_polynomial(y, n - j);
}

/// sum_j c_j G_j in monomial form.
inline BivariatePolynomial gk_curve_polynomial(const std::vector<Rational>& c, const Integer& alpha) {
    const long n = static_cast<long>(c.size()) - 1;
    BivariatePolynomial f;
    for (long j = 0; j <= n; ++j)
        if (c[j] != 0) f += gk_basis_polynomial(n, j, alpha) * c[j];
    return f;
}

}  // namespace mdsgrid
