#include <random>

#include <gtest/gtest.h>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/lattice/affine_map.hpp"
#include "mdsgrid/lattice/gk_normalize.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"
#include "oracles.hpp"

using namespace mdsgrid;

namespace {

Triangle q13() { return parse_triangle("0,0;10,40;36,27"); }

std::vector<std::pair<long, long>> as_pairs(const SupportSet& s) {
    std::vector<std::pair<long, long>> out;
    for (const auto& p : s.points()) out.emplace_back(p.x.get_si(), p.y.get_si());
    return out;
}

std::vector<std::pair<long, long>> brute(const Triangle& t, long q) {
    auto v = [&](int i) { return oracle::P{t[i].x * q, t[i].y * q}; };
    return oracle::brute_points(v(0), v(1), v(2));
}

template <typename F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Normalized triangle with column profile (n, alpha, beta) at d = 1:
// L = (-1, beta+n+1), R = (alpha+n-1, 0), V = (v, 0) with the edge L-V crossing
// x = 0 in (beta-1, beta].
Triangle synthetic_normalized(long n, long alpha, long beta) {
    for (long v = 1; v <= alpha; ++v) {
        Rational y0 = make_rational(Integer((beta + n + 1) * v), Integer(v + 1));
        if (y0 > beta - 1 && y0 <= beta) {
            return Triangle(RationalPoint(-1, beta + n + 1), RationalPoint(v, 0), RationalPoint(alpha + n - 1, 0));
        }
    }
    throw std::logic_error("no integral bottom vertex");
}

}  // namespace

TEST(TriangleData, Examples) {
    auto d = triangle_data(q13());
    EXPECT_EQ(d.slopes[0], make_rational(Integer(-1), Integer(2)));
    EXPECT_EQ(d.slopes[1], make_rational(Integer(3), Integer(4)));
    EXPECT_EQ(d.slopes[2], 4);
    EXPECT_EQ(d.width, 36);
    EXPECT_EQ(d.doubled_area, 1170);

    auto e = triangle_data(parse_triangle("0,0;2,1;1,3"));
    EXPECT_EQ(e.slopes[0], -2);
    EXPECT_EQ(e.slopes[1], make_rational(Integer(1), Integer(2)));
    EXPECT_EQ(e.slopes[2], 3);
    EXPECT_EQ(e.width, 2);
    EXPECT_EQ(e.doubled_area, 5);

    EXPECT_EQ(error_code([] { triangle_data(parse_triangle("0,0;1,0;0,1")); }), "vertical-edge");
}

TEST(Triangle, DegenerateRejected) {
    EXPECT_THROW(Triangle(RationalPoint(0, 0), RationalPoint(1, 1), RationalPoint(2, 2)), DomainError);
    EXPECT_THROW(Triangle(RationalPoint(0, 0), RationalPoint(0, 0), RationalPoint(2, 1)), DomainError);
    EXPECT_THROW(parse_triangle("0,0;1,1"), ValidationError);
    EXPECT_THROW(parse_triangle("0,0;1,1;2,2"), ValidationError);
}

TEST(Triangle, ParseAndFormatRoundTrip) {
    Triangle t = parse_triangle("-1/2,-1/8;0,0;3/8,59/32");
    EXPECT_EQ(format_triangle(t), "-1/2,-1/8;0,0;3/8,59/32");
    EXPECT_EQ(t.integral_dilation(), 32);
    EXPECT_EQ(parse_triangle("36,27;0,0;10,40"), q13());
}

TEST(CountIntegers, Examples) {
    EXPECT_EQ(count_integers(make_rational(Integer(-1), Integer(2)), make_rational(Integer(3), Integer(4))), 1);
    EXPECT_EQ(count_integers(1, 3), 3);
    EXPECT_EQ(count_integers(make_rational(Integer(1), Integer(3)), make_rational(Integer(2), Integer(3))), 0);
    EXPECT_THROW(count_integers(2, 1), DomainError);
}

TEST(CountIntegers, MatchesWalkingOracle) {
    std::mt19937_64 gen(21);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 12);
    for (int i = 0; i < 2000; ++i) {
        Rational a = make_rational(Integer(num(gen)), Integer(den(gen)));
        Rational b = make_rational(Integer(num(gen)), Integer(den(gen)));
        if (a > b) std::swap(a, b);
        EXPECT_EQ(count_integers(a, b), oracle::integers_between(a, b));
    }
}

TEST(EnumeratePoints, Examples) {
    Triangle unit(RationalPoint(0, 0), RationalPoint(1, 0), RationalPoint(0, 1));
    auto s = enumerate_points(unit, 1);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], LatticePoint(0, 0));
    EXPECT_EQ(s[1], LatticePoint(0, 1));
    EXPECT_EQ(s[2], LatticePoint(1, 0));
    EXPECT_EQ(enumerate_points(q13(), 1).size(), 602u);
    EXPECT_EQ(enumerate_points(q13(), 2).size(), 2373u);
    EXPECT_THROW(enumerate_points(unit, 0), DomainError);
}

TEST(EnumeratePoints, MatchesBruteForce) {
    std::mt19937_64 gen(22);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    int checked = 0;
    while (checked < 150) {
        auto r = [&] { return make_rational(Integer(num(gen)), Integer(den(gen))); };
        RationalPoint a(r(), r()), b(r(), r()), c(r(), r());
        if (cross(a, b, c) == 0 || a == b || b == c || a == c) continue;
        Triangle t(a, b, c);
        for (long q = 1; q <= 3; ++q) EXPECT_EQ(as_pairs(enumerate_points(t, q)), brute(t, q)) << format_triangle(t);
        ++checked;
    }
    EXPECT_EQ(as_pairs(enumerate_points(q13(), 1)), brute(q13(), 1));
}

TEST(EnumeratePoints, EhrhartQuadratic) {
    std::mt19937_64 gen(23);
    std::uniform_int_distribution<long> c(-7, 7);
    int checked = 0;
    while (checked < 60) {
        RationalPoint a(c(gen), c(gen)), b(c(gen), c(gen)), d(c(gen), c(gen));
        if (a == b || b == d || a == d || cross(a, b, d) == 0) continue;
        Triangle t(a, b, d);
        Integer area2 = abs(cross(a, b, d)).get_num();
        Integer boundary = boundary_lattice_count(t);
        // 2 * L(q) = area2 * q^2 + boundary * q + 2 (Pick on the dilates)
        for (long q = 1; q <= 4; ++q) {
            EXPECT_EQ(Integer(2 * enumerate_points(t, q).size()), area2 * q * q + boundary * q + 2);
        }
        ++checked;
    }
    EXPECT_EQ(boundary_lattice_count(q13()), 32);
    for (long q = 1; q <= 3; ++q) EXPECT_EQ(Integer(enumerate_points(q13(), q).size()), 585 * q * q + 16 * q + 1);
}

TEST(SupportFromWpp, Examples) {
    EXPECT_EQ(support_from_wpp(1, 1, 1, 2).size(), 6u);
    auto s = support_from_wpp(9, 10, 13, 13);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], LatticePoint(0, 0));
    EXPECT_EQ(support_from_wpp(9, 10, 13, 1170).size(), 602u);
    EXPECT_EQ(support_from_wpp(1, 1, 2, 1).size(), 2u);
    EXPECT_EQ(error_code([] { support_from_wpp(2, 4, 5, 3); }), "non-coprime-weights");
    EXPECT_EQ(error_code([] { support_from_wpp(0, 1, 1, 3); }), "non-positive-weight");
}

TEST(SupportFromWpp, MatchesDefinitionScan) {
    for (long a = 1; a <= 7; ++a)
        for (long b = 1; b <= 7; ++b)
            for (long c = 1; c <= 7; ++c) {
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                for (long d = 0; d <= 30; ++d) {
                    std::vector<std::pair<long, long>> want;
                    for (long u = 0; a * u <= d; ++u)
                        for (long v = 0; a * u + b * v <= d; ++v)
                            if ((d - a * u - b * v) % c == 0) want.emplace_back(u, v);
                    EXPECT_EQ(as_pairs(support_from_wpp(a, b, c, d)), want);
                }
            }
}

TEST(SupportFromWpp, GrowsOverOnePeriod) {
    std::mt19937_64 gen(24);
    std::uniform_int_distribution<long> w(1, 12), d(0, 400);
    int checked = 0;
    while (checked < 200) {
        long a = w(gen), b = w(gen), c = w(gen);
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        long dd = d(gen);
        EXPECT_GT(support_from_wpp(a, b, c, dd + a * b * c).size(), support_from_wpp(a, b, c, dd).size());
        ++checked;
    }
}

TEST(SupportFromWpp, CountsMatchTriangleEnumeration) {
    for (long q = 1; q <= 3; ++q) {
        EXPECT_EQ(support_from_wpp(9, 10, 13, 1170 * q).size(), enumerate_points(q13(), q).size());
    }
}

TEST(AffineMap, Examples) {
    SupportSet unit = SupportSet::from_points({{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(apply_map(AffineUnimodularMap::identity(), unit), unit);
    auto sheared = apply_map(AffineUnimodularMap::shear(2), unit);
    EXPECT_EQ(sheared, SupportSet::from_points({{0, 0}, {0, 1}, {1, 2}}));
    auto moved = apply_map(AffineUnimodularMap::translation(-1, 3), SupportSet::from_points({{0, 0}}));
    EXPECT_EQ(moved[0], LatticePoint(-1, 3));
    EXPECT_EQ(error_code([] { AffineUnimodularMap(2, 0, 0, 1); }), "non-unimodular");
}

TEST(AffineMap, CompositionInverseAndCardinality) {
    std::mt19937_64 gen(25);
    std::uniform_int_distribution<long> k(-4, 4);
    for (int i = 0; i < 200; ++i) {
        long a = k(gen);
        AffineUnimodularMap m = AffineUnimodularMap(0, 1, -1, a, k(gen), k(gen))
                                    .after(AffineUnimodularMap::shear(k(gen)));
        auto pts = oracle::random_points(gen, 15, 6);
        std::vector<LatticePoint> lp;
        for (auto [x, y] : pts) lp.push_back({x, y});
        SupportSet s = SupportSet::from_points(lp);
        auto tracked = apply_map_tracked(m, s);
        EXPECT_EQ(tracked.support.size(), s.size());
        for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(tracked.support[tracked.image_index[j]], m.apply(s[j]));
        EXPECT_EQ(apply_map(m.inverse(), tracked.support), s);
        EXPECT_EQ(m.inverse().after(m), AffineUnimodularMap::identity());
    }
}

TEST(GkSetupCheck, Examples) {
    Triangle good(RationalPoint(0, 0), RationalPoint(make_rational(Integer(-1), Integer(4)), make_rational(Integer(11), Integer(8))),
                  RationalPoint(make_rational(Integer(1), Integer(2)), make_rational(Integer(1), Integer(4))));
    EXPECT_TRUE(gk_setup_check(good));
    EXPECT_TRUE(oracle::in_open_segment({good[0].x, good[0].y}, {good[2].x, good[2].y}, {0, 1}));
    Triangle small = q13().scaled(make_rational(Integer(1), Integer(1170)));
    EXPECT_FALSE(gk_setup_check(small));
    EXPECT_FALSE(oracle::in_open_segment({small[1].x, small[1].y}, {small[2].x, small[2].y}, {0, 1}));
    EXPECT_FALSE(gk_setup_check(Triangle(RationalPoint(0, 0), RationalPoint(1, 0), RationalPoint(0, 1))));
}

TEST(GkSetupCheck, MatchesSegmentOracle) {
    std::mt19937_64 gen(26);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    for (int i = 0; i < 500; ++i) {
        auto r = [&] { return make_rational(Integer(num(gen)), Integer(den(gen))); };
        // half the cases put (0,1) on the line through the two free vertices
        RationalPoint b(r(), r());
        RationalPoint c = gen() % 2 ? RationalPoint(r(), r()) : RationalPoint(-b.x * den(gen), 1 + (1 - b.y) * den(gen));
        RationalPoint o(0, 0);
        if (o == b || o == c || b == c || cross(o, b, c) == 0) continue;
        Triangle t(o, b, c);
        EXPECT_EQ(gk_setup_check(t), oracle::in_open_segment({b.x, b.y}, {c.x, c.y}, {0, 1})) << format_triangle(t);
    }
}

TEST(GkNormalize, SyntheticRoundTrip) {
    std::mt19937_64 gen(27);
    std::uniform_int_distribution<long> k(-5, 5);
    Triangle base = synthetic_normalized(2, 3, 4);
    for (int i = 0; i < 50; ++i) {
        AffineUnimodularMap perturb = AffineUnimodularMap::translation(k(gen), k(gen)).after(AffineUnimodularMap::shear(k(gen)));
        Triangle t = apply_map(perturb, base);
        GkNormalization g = gk_normalize(t, 1);
        EXPECT_EQ(g.n, 2);
        EXPECT_EQ(g.alpha, 3);
        EXPECT_EQ(g.beta, 4);
        EXPECT_FALSE(gk_profile_violation(gk_normalized_support(t, g), g.n, g.alpha, g.beta).has_value());
        EXPECT_EQ(apply_map(g.map, t), base);
    }
}

TEST(GkNormalize, ProfileHoldsAcrossSyntheticGrid) {
    int built = 0;
    for (long n = 1; n <= 4; ++n)
        for (long alpha = 1; alpha <= 8; ++alpha)
            for (long beta = 0; beta <= 10; ++beta) {
                // admissible profiles: s2 = -(beta+n+1)/(alpha+n) in (-2,-1), non-integral,
                // with every column alpha+i topped at n-1-i
                Rational r = make_rational(Integer(beta + n + 1), Integer(alpha + n));
                if (!(r > 1 && r < 2) || (n - 1) * (r - 1) >= 1) continue;
                std::optional<Triangle> t;
                try {
                    t = synthetic_normalized(n, alpha, beta);
                } catch (const std::logic_error&) {
                    continue;
                }
                if (count_integers(triangle_data(*t).slopes[0], triangle_data(*t).slopes[1]) != n) continue;
                GkNormalization g = gk_normalize(apply_map(AffineUnimodularMap::shear(3), *t), 1);
                EXPECT_EQ(g.n, n);
                EXPECT_EQ(g.alpha, alpha);
                EXPECT_EQ(g.beta, beta);
                ++built;
            }
    EXPECT_GT(built, 20);
}

TEST(GkNormalize, DeterminantLawCaseHasIntegralSlopeForNOne) {
    // (n, alpha, beta) = (1, 1, 2) forces s2 = -(beta+n+1)/(alpha+n) = -2.
    Triangle t(RationalPoint(-1, 4), RationalPoint(1, 0), RationalPoint(make_rational(Integer(1), Integer(2)), 0));
    EXPECT_EQ(error_code([&] { gk_normalize(t, 2); }), "integral-middle-slope");
}

TEST(GkNormalize, Errors) {
    Triangle t = synthetic_normalized(2, 3, 4).scaled(make_rational(Integer(1), Integer(2)));
    EXPECT_EQ(error_code([&] { gk_normalize(t, 1); }), "normalization-integrality");
    EXPECT_NO_THROW(gk_normalize(t, 2));
    EXPECT_EQ(error_code([&] { gk_normalize(t, 0); }), "bad-dilation");
}
