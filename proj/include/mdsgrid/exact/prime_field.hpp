#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"

namespace mdsgrid {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 add_mod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow_mod(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Arithmetic in Z/pZ for a word-sized prime p < 2^63. Values are residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(u64 modulus) : p_(modulus) {
        if (modulus >= (u64{1} << 63) || !is_prime_u64(modulus)) {
            throw DomainError("not-prime", "modulus " + std::to_string(modulus) + " is not a prime below 2^63");
        }
    }

    u64 modulus() const noexcept { return p_; }

    u64 reduce(const Integer& x) const {
        return mpz_fdiv_ui(x.get_mpz_t(), p_);
    }
    u64 reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
    u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p_); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
    u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }

    u64 inv(u64 a) const {
        if (a % p_ == 0) throw DomainError("zero-inverse", "inverse of zero in prime field");
        return pow_mod(a, p_ - 2, p_);
    }

private:
    u64 p_;
};

/// Multiplication by a fixed residue w using a precomputed quotient
/// w' = floor(w * 2^64 / p). For any 64-bit x the product w*x mod p lands
/// in [0, 2p), which is enough headroom for lazily reduced rows when p < 2^62.
struct ShoupMultiplier {
    u64 w = 0;
    u64 w_quot = 0;

    ShoupMultiplier() = default;
    ShoupMultiplier(u64 value, u64 p) : w(value), w_quot(static_cast<u64>((static_cast<u128>(value) << 64) / p)) {}

    u64 mul_lazy(u64 x, u64 p) const {
        u64 q = static_cast<u64>((static_cast<u128>(w_quot) * x) >> 64);
        return w * x - q * p;
    }
};

/// The ten largest primes below 2^62, in decreasing order. Certificates name
/// the prime they used, so this list is part of the output contract.
inline constexpr std::array<u64, 10> kDefaultPrimes = {
    4611686018427387847ull, 4611686018427387817ull, 4611686018427387787ull, 4611686018427387761ull,
    4611686018427387751ull, 4611686018427387737ull, 4611686018427387733ull, 4611686018427387709ull,
    4611686018427387701ull, 4611686018427387631ull,
};

/// Primes admissible for modular rank certificates, consumed in order.
struct PrimeConfig {
    std::vector<u64> primes;
    bool allow_unlisted = false;

    static PrimeConfig defaults() {
        PrimeConfig c;
        c.primes.assign(kDefaultPrimes.begin(), kDefaultPrimes.end());
        return c;
    }

    /// Fixed list followed by `extra` primes in [2^61, 2^62) drawn from a seeded generator.
    static PrimeConfig with_seed(u64 seed, std::size_t extra = 4) {
        PrimeConfig c = defaults();
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<u64> dist(u64{1} << 61, (u64{1} << 62) - 1);
        while (extra > 0) {
            u64 candidate = dist(gen) | 1u;
            if (!is_prime_u64(candidate)) continue;
            if (std::find(c.primes.begin(), c.primes.end(), candidate) != c.primes.end()) continue;
            c.primes.push_back(candidate);
            --extra;
        }
        return c;
    }

    bool contains(u64 p) const { return std::find(primes.begin(), primes.end(), p) != primes.end(); }

    void require_admissible(u64 p) const {
        if (!allow_unlisted && !contains(p)) {
            throw ConfigurationError("prime-not-configured",
                                     "prime " + std::to_string(p) + " is not in the configured prime list");
        }
    }
};

}  // namespace mdsgrid
