#include <random>

#include <gtest/gtest.h>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "oracles.hpp"

using namespace mdsgrid;

TEST(Binom, Examples) {
    EXPECT_EQ(binom(Integer(5), 2), 10);
    EXPECT_EQ(binom(Integer(-3), 2), 6);
    EXPECT_EQ(binom(Integer(-1), 1), -1);
    EXPECT_EQ(binom(Integer(7), 0), 1);
    EXPECT_EQ(binom(Integer(3), 5), 0);
}

TEST(Binom, NegativeKRejected) {
    try {
        binom(Integer(4), Integer(-1));
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), "negative-k");
    }
}

TEST(Binom, PascalRule) {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> n(-50, 50), k(1, 20);
    for (int i = 0; i < 500; ++i) {
        Integer nn = n(gen);
        long kk = k(gen);
        EXPECT_EQ(binom(nn, kk), binom(Integer(nn - 1), kk) + binom(Integer(nn - 1), kk - 1)) << nn << " " << kk;
    }
}

TEST(Binom, AgreesWithRationalDefinition) {
    for (long n = -20; n <= 20; ++n)
        for (long k = 0; k <= 12; ++k) EXPECT_EQ(binom(Integer(n), k), oracle::binom(n, k));
}

TEST(Binom, VandermondeStyleIdentity) {
    std::mt19937_64 gen(12);
    std::uniform_int_distribution<long> nd(1, 10), bd(0, 30);
    for (int rep = 0; rep < 200; ++rep) {
        long n = nd(gen), beta = bd(gen);
        for (long j = 0; j <= n; ++j) {
            Integer lhs = 0;
            for (long i = 0; i <= n - j; ++i) lhs += binom(Integer(beta), n - i - j) * binom(Integer(n + 1), i);
            EXPECT_EQ(lhs, binom(Integer(beta + n + 1), n - j));
        }
    }
}

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(Integer(1170)), 34);
    EXPECT_EQ(isqrt(Integer(0)), 0);
    EXPECT_EQ(isqrt(Integer(1225)), 35);
    EXPECT_THROW(isqrt(Integer(-1)), DomainError);
}

TEST(Isqrt, RoundTripLargeValues) {
    std::mt19937_64 gen(13);
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(13);
    Integer limit("1000000000000000000000000000000");
    for (int i = 0; i < 300; ++i) {
        Integer t = rnd.get_z_range(limit) + 1;
        EXPECT_EQ(isqrt(Integer(t * t)), t);
        EXPECT_EQ(isqrt(Integer(t * t - 1)), t - 1);
    }
}

TEST(MMin, Examples) {
    EXPECT_EQ(m_min(9, 10, 13, 1170), 35);
    EXPECT_EQ(m_min(9, 10, 13, 2340), 69);
    EXPECT_EQ(m_min(1, 1, 1, 7), 8);
    EXPECT_THROW(m_min(0, 1, 1, 1), DomainError);
    EXPECT_THROW(m_min(1, 1, 1, 0), DomainError);
}

TEST(MMin, BracketsTheThreshold) {
    std::mt19937_64 gen(14);
    std::uniform_int_distribution<long> w(1, 60), d(1, 5000);
    for (int i = 0; i < 2000; ++i) {
        Integer a = w(gen), b = w(gen), c = w(gen), dd = d(gen);
        Integer m = m_min(a, b, c, dd);
        Integer abc = a * b * c;
        EXPECT_LE(abc * (m - 1) * (m - 1), dd * dd);
        EXPECT_GT(abc * m * m, dd * dd);
    }
}

TEST(Rational, CanonicalForm) {
    Rational r = make_rational(Integer(6), Integer(-4));
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(floor(r), -2);
    EXPECT_EQ(ceil(r), -1);
    EXPECT_EQ(parse_rational("10/-4"), make_rational(Integer(-5), Integer(2)));
    EXPECT_THROW(parse_rational("1/0"), ValidationError);
    EXPECT_THROW(parse_integer("12a"), ValidationError);
}

TEST(PrimeField, DefaultPrimesArePrimeAndBelow2To62) {
    for (auto p : kDefaultPrimes) {
        EXPECT_TRUE(is_prime_u64(p));
        EXPECT_LT(p, u64{1} << 62);
    }
    EXPECT_TRUE(std::is_sorted(kDefaultPrimes.rbegin(), kDefaultPrimes.rend()));
}

TEST(PrimeField, AgreesWithIntegerArithmetic) {
    std::mt19937_64 gen(15);
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(15);
    for (auto p : kDefaultPrimes) {
        PrimeField f(p);
        Integer P(std::to_string(p));
        for (int i = 0; i < 200; ++i) {
            Integer a = rnd.get_z_bits(200) - rnd.get_z_bits(200);
            Integer b = rnd.get_z_bits(90) - rnd.get_z_bits(90);
            auto mod = [&](const Integer& x) {
                Integer r;
                mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
                return r;
            };
            u64 ra = f.reduce(a), rb = f.reduce(b);
            EXPECT_EQ(Integer(std::to_string(f.add(ra, rb))), mod(a + b));
            EXPECT_EQ(Integer(std::to_string(f.sub(ra, rb))), mod(a - b));
            EXPECT_EQ(Integer(std::to_string(f.mul(ra, rb))), mod(a * b));
            if (rb != 0) EXPECT_EQ(f.mul(f.inv(rb), rb), 1u);
            u64 e = gen() % 1000;
            Integer pe;
            mpz_powm_ui(pe.get_mpz_t(), mod(a).get_mpz_t(), e, P.get_mpz_t());
            EXPECT_EQ(Integer(std::to_string(f.pow(ra, e))), pe);
        }
    }
}

TEST(PrimeField, ShoupLazyMultiplyMatchesPlain) {
    std::mt19937_64 gen(16);
    for (auto p : kDefaultPrimes) {
        for (int i = 0; i < 1000; ++i) {
            u64 w = gen() % p, x = gen() % p;
            ShoupMultiplier s(w, p);
            u64 lazy = s.mul_lazy(x, p);
            EXPECT_LT(lazy, 2 * p);
            EXPECT_EQ(lazy % p, mul_mod(w, x, p));
        }
    }
}

TEST(PrimeConfig, SeedAppendsDeterministicPrimes) {
    auto a = PrimeConfig::with_seed(7), b = PrimeConfig::with_seed(7), c = PrimeConfig::with_seed(8);
    EXPECT_EQ(a.primes, b.primes);
    EXPECT_NE(a.primes, c.primes);
    ASSERT_EQ(a.primes.size(), 14u);
    EXPECT_TRUE(std::equal(kDefaultPrimes.begin(), kDefaultPrimes.end(), a.primes.begin()));
    for (auto p : a.primes) EXPECT_TRUE(is_prime_u64(p));
}

TEST(PrimeConfig, UnlistedPrimeRejectedUnlessAllowed) {
    PrimeConfig c = PrimeConfig::defaults();
    try {
        c.require_admissible(1000003);
        FAIL();
    } catch (const ConfigurationError& e) {
        EXPECT_EQ(e.code(), "prime-not-configured");
    }
    c.allow_unlisted = true;
    EXPECT_NO_THROW(c.require_admissible(1000003));
}
