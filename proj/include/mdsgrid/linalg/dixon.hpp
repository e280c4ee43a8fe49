#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"
#include "mdsgrid/linalg/mod_elimination.hpp"

namespace mdsgrid {

/// n/d with |n|, |d| <= sqrt(modulus / 2) and n = d * x (mod modulus), if any.
inline std::optional<Rational> rational_reconstruct(const Integer& x, const Integer& modulus) {
    Integer bound = isqrt(Integer(modulus / 2));
    Integer r0 = modulus, r1 = x % modulus;
    if (r1 < 0) r1 += modulus;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
    return make_rational(r1, t1);
}

namespace detail {

// sum_{t < digits.size()} digits[t] * p^t, by balanced splitting.
// pw[l] = p^(2^l).
inline Integer combine_digits(const std::vector<u64>& digits, std::size_t lo, std::size_t level,
                              const std::vector<Integer>& pw) {
    if (lo >= digits.size()) return 0;
    if (level == 0) {
        Integer v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &digits[lo]);
        return v;
    }
    const std::size_t half = std::size_t{1} << (level - 1);
    Integer low = combine_digits(digits, lo, level - 1, pw);
    if (lo + half >= digits.size()) return low;
    Integer high = combine_digits(digits, lo + half, level - 1, pw);
    return low + pw[level - 1] * high;
}

inline std::size_t bit_length(const Integer& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

// Bits of an upper bound on |det| of a and of every matrix obtained from a by
// replacing one column with b (Hadamard, min of row and column forms).
inline std::size_t hadamard_bits(const IntMatrix& a, const std::vector<Integer>& b) {
    const std::size_t n = a.rows();
    std::size_t row_bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = b[i] * b[i];
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * a(i, j);
        row_bits += (bit_length(s) + 1) / 2;
    }
    std::size_t col_bits = 0;
    Integer bs = 0;
    for (const auto& x : b) bs += x * x;
    col_bits += (bit_length(bs) + 1) / 2;
    for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a(i, j) * a(i, j);
        col_bits += (bit_length(s) + 1) / 2;
    }
    return std::min(row_bits, col_bits);
}

}  // namespace detail

/// Solves a x = b over Q for square a by p-adic lifting (Dixon).
/// Returns nullopt when a is singular mod p. The result is checked by exact
/// multiplication; a failure after the Hadamard-bound number of digits throws.
inline std::optional<std::vector<Rational>> dixon_solve(const IntMatrix& a, const std::vector<Integer>& b, u64 p) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DomainError("not-square", "dixon_solve needs a square matrix");
    if (b.size() != n) throw DomainError("shape-mismatch", "dixon_solve: rhs length mismatch");
    if (n == 0) return std::vector<Rational>{};
    auto inv = mod_inverse(a, p);
    if (!inv) return std::nullopt;

    std::vector<u64> inv_quot(n * n);
    for (std::size_t i = 0; i < n * n; ++i) inv_quot[i] = ShoupMultiplier((*inv)[i], p).w_quot;

    // p^k > 2 * H^2 suffices for reconstruction of numerators and denominators.
    const std::size_t needed_bits = 2 * detail::hadamard_bits(a, b) + 2;
    const std::size_t digit_bits = detail::bit_length(Integer(static_cast<unsigned long>(p))) - 1;
    const std::size_t max_digits = needed_bits / digit_bits + 1;

    std::vector<std::vector<u64>> digits(n);  // digits[j][t]: t-th p-adic digit of x_j
    std::vector<Integer> residual = b;
    std::vector<u64> rmod(n), x(n);
    std::vector<Integer> pw{Integer(static_cast<unsigned long>(p))};
    std::size_t next_check = 16;
    for (std::size_t k = 1; k <= max_digits; ++k) {
        for (std::size_t i = 0; i < n; ++i) rmod[i] = mpz_fdiv_ui(residual[i].get_mpz_t(), p);
        for (std::size_t i = 0; i < n; ++i) {
            const u64* w = inv->data() + i * n;
            const u64* wq = inv_quot.data() + i * n;
            u64 acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                u64 q = static_cast<u64>((static_cast<u128>(wq[j]) * rmod[j]) >> 64);
                u64 prod = detail::canon(w[j] * rmod[j] - q * p, p);
                acc = add_mod(acc, prod, p);
            }
            x[i] = acc;
            digits[i].push_back(acc);
        }
        for (std::size_t i = 0; i < n; ++i) {
            mpz_ptr r = residual[i].get_mpz_t();
            for (std::size_t j = 0; j < n; ++j) {
                if (x[j] != 0) mpz_submul_ui(r, a(i, j).get_mpz_t(), x[j]);
            }
            mpz_divexact_ui(r, r, p);
        }
        if (k != next_check && k != max_digits) continue;
        next_check *= 2;

        std::size_t levels = 0;
        while ((std::size_t{1} << levels) < k) ++levels;
        while (pw.size() < levels) pw.push_back(pw.back() * pw.back());
        Integer modulus;
        mpz_ui_pow_ui(modulus.get_mpz_t(), p, k);
        Integer bound = isqrt(Integer(modulus / 2));
        Integer den = 1;
        std::vector<Rational> sol(n);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            Integer xj = detail::combine_digits(digits[j], 0, levels, pw);
            Integer y = (den * xj) % modulus;
            if (y > modulus / 2) y -= modulus;
            if (abs(y) <= bound) {
                sol[j] = make_rational(y, den);
                continue;
            }
            auto rr = rational_reconstruct(y, modulus);
            if (!rr) {
                ok = false;
                break;
            }
            den *= rr->get_den();
            sol[j] = make_rational(rr->get_num(), den);
        }
        if (!ok) continue;
        // a * (den * sol) == den * b, in integers
        std::vector<Integer> scaled(n);
        for (std::size_t j = 0; j < n; ++j) scaled[j] = divexact(Integer(den * sol[j].get_num()), sol[j].get_den());
        bool verified = true;
        for (std::size_t i = 0; i < n && verified; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < n; ++j) mpz_addmul(acc.get_mpz_t(), a(i, j).get_mpz_t(), scaled[j].get_mpz_t());
            verified = acc == den * b[i];
        }
        if (verified) return sol;
    }
    throw InvariantViolation("dixon-failed", "p-adic lifting did not reach a verified solution within the Hadamard bound");
}

}  // namespace mdsgrid
