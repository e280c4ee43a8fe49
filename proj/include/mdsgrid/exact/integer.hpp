#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "mdsgrid/errors.hpp"

namespace mdsgrid {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero-denominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Exact quotient; the caller guarantees `den` divides `num`.
inline Integer divexact(const Integer& num, const Integer& den) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// "n" when the denominator is 1, "n/d" otherwise.
inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ValidationError("bad-integer", "empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ValidationError("bad-integer", "bad integer literal '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw ValidationError("bad-integer", "bad integer literal '" + s + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

/// Parses "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ValidationError("bad-rational", "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

/// Narrowing with a range check, for loop bounds and machine-word kernels.
inline std::int64_t to_int64(const Integer& x) {
    if (!x.fits_slong_p()) throw DomainError("out-of-range", "integer " + x.get_str() + " exceeds 64 bits");
    return x.get_si();
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, n of any sign.
/// Each step multiplies by (n - t) and divides exactly by (t + 1): after t
/// steps the accumulator is binom(n, t), and binom(n, t)(n - t) = binom(n, t+1)(t + 1).
inline Integer binom(const Integer& n, const Integer& k) {
    if (k < 0) throw DomainError("negative-k", "binom: k must be nonnegative, got " + k.get_str());
    Integer result = 1;
    for (Integer t = 0; t < k; ++t) {
        result *= n - t;
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), Integer(t + 1).get_mpz_t());
    }
    return result;
}

inline Integer binom(const Integer& n, long k) { return binom(n, Integer(k)); }

/// Falling factorial n(n-1)...(n-k+1); empty product for k = 0.
inline Integer falling_factorial(const Integer& n, long k) {
    if (k < 0) throw DomainError("negative-k", "falling_factorial: k must be nonnegative");
    Integer result = 1;
    for (long t = 0; t < k; ++t) result *= n - t;
    return result;
}

/// Integer power with 0^0 = 1.
inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Largest t with t*t <= n.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("negative-sqrt", "isqrt of negative integer " + n.get_str());
    Integer t;
    mpz_sqrt(t.get_mpz_t(), n.get_mpz_t());
    return t;
}

/// Smallest m with w * m^2 > d^2 where w = abc; dH - mE is then a negative class.
inline Integer m_min_for_product(const Integer& abc, const Integer& d) {
    if (abc < 1 || d < 1) throw DomainError("non-positive", "m_min requires positive arguments");
    Integer q;
    Integer d2 = d * d;
    mpz_fdiv_q(q.get_mpz_t(), d2.get_mpz_t(), abc.get_mpz_t());
    return isqrt(q) + 1;
}

inline Integer m_min(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    if (a < 1 || b < 1 || c < 1 || d < 1) {
        throw DomainError("non-positive", "m_min requires a, b, c, d >= 1");
    }
    return m_min_for_product(a * b * c, d);
}

}  // namespace mdsgrid
