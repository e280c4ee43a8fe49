#include <gtest/gtest.h>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/gk/criterion.hpp"
#include "mdsgrid/gk/gk_matrix.hpp"
#include "mdsgrid/gk/polynomial.hpp"
#include "mdsgrid/gk/search.hpp"
#include "mdsgrid/linalg/fraction_free.hpp"
#include "mdsgrid/linalg/interpolation.hpp"
#include "oracles.hpp"

using namespace mdsgrid;

namespace {

const GkSearchHit& searched() {
    static const GkSearchHit hit = [] {
        auto h = find_gk_triangle();
        if (!h) throw std::runtime_error("documented search found no triangle");
        return *h;
    }();
    return hit;
}

oracle::P op(const RationalPoint& p) { return {p.x, p.y}; }

template <typename F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST(GkMatrix, Examples) {
    EXPECT_EQ(build_gk_matrix(1, 1, 1), (IntMatrix{{1, -1}, {3, -2}}));
    EXPECT_EQ(determinant(build_gk_matrix(1, 1, 1)), 1);
    EXPECT_EQ(build_gk_matrix(1, 1, 2), (IntMatrix{{2, -1}, {4, -2}}));
    EXPECT_EQ(determinant(build_gk_matrix(1, 1, 2)), 0);
    EXPECT_NE(determinant(build_gk_matrix(2, 3, 4)), 0);
    EXPECT_EQ(error_code([] { build_gk_matrix(0, 1, 1); }), "gk-parameter");
    EXPECT_EQ(error_code([] { build_gk_matrix(1, 0, 1); }), "gk-parameter");
    EXPECT_EQ(error_code([] { build_gk_matrix(1, 1, -1); }), "gk-parameter");
}

TEST(GkMatrix, EntriesAreBasisValuesAtTheNamedPoints) {
    for (long n = 1; n <= 5; ++n)
        for (long alpha = 1; alpha <= 6; ++alpha)
            for (long beta = 0; beta <= 6; ++beta) {
                IntMatrix m = build_gk_matrix(n, alpha, beta);
                for (long j = 0; j <= n; ++j) {
                    for (long i = 0; i < n; ++i) {
                        EXPECT_EQ(m(i, j), oracle::binom(-alpha, j) * oracle::binom(beta + i, n - j));
                    }
                    EXPECT_EQ(m(n, j), oracle::binom(-1 - alpha, j) * oracle::binom(beta + n + 1, n - j));
                }
            }
}

TEST(GkDetPredicate, Examples) {
    EXPECT_TRUE(gk_det_predicate(1, 1, 2));
    EXPECT_FALSE(gk_det_predicate(1, 1, 1));
    EXPECT_TRUE(gk_det_predicate(3, 3, 4));
    EXPECT_FALSE(gk_det_predicate(3, 3, 5));
}

TEST(GkMatrix, LemmaGrid) {
    for (long n = 1; n <= 7; ++n)
        for (long alpha = 1; alpha <= 12; ++alpha)
            for (long beta = 0; beta <= 12; ++beta) {
                IntMatrix mp = build_gk_matrix_prime(n, alpha, beta);
                ASSERT_EQ(rank_exact_value(mp), static_cast<std::size_t>(n)) << n << " " << alpha << " " << beta;
                IntMatrix m = build_gk_matrix(n, alpha, beta);
                EXPECT_EQ(determinant(m) == 0, gk_det_predicate(n, alpha, beta)) << n << " " << alpha << " " << beta;
            }
}

TEST(GkMatrix, RowDifferenceReplayIsUpperDiagonal) {
    for (long n = 1; n <= 7; ++n)
        for (long alpha = 1; alpha <= 12; ++alpha)
            for (long beta = 0; beta <= 12; ++beta) {
                IntMatrix replay = gk_row_difference_replay(build_gk_matrix_prime(n, alpha, beta));
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j <= n; ++j) {
                        oracle::Z want = i + j <= n ? oracle::Z(oracle::binom(-alpha, j) * oracle::binom(beta, n - i - j)) : oracle::Z(0);
                        ASSERT_EQ(replay(i, j), want) << n << " " << alpha << " " << beta << " at " << i << "," << j;
                    }
                EXPECT_EQ(replay, gk_upper_diagonal_form(n, alpha, beta));
            }
}

TEST(GkInterpolationCurve, Examples) {
    EXPECT_EQ(gk_interpolation_curve(1, 1, 1), (std::vector<Rational>{1, 1}));
    EXPECT_EQ(gk_interpolation_curve(1, 1, 2), (std::vector<Rational>{1, 2}));
}

TEST(GkInterpolationCurve, VanishesOnPAndQAndMatchesMonomialOracle) {
    for (long n = 1; n <= 5; ++n)
        for (long alpha = 1; alpha <= 8; ++alpha)
            for (long beta = 0; beta <= 8; ++beta) {
                auto c = gk_interpolation_curve(n, alpha, beta);
                auto f = gk_curve_polynomial(c, alpha);
                EXPECT_LE(f.total_degree(), n);
                for (long i = 0; i < n; ++i) EXPECT_EQ(f.evaluate(0, beta + i), 0);
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j <= n - 1 - i; ++j) EXPECT_EQ(f.evaluate(alpha + i, j), 0);
                EXPECT_EQ(oracle::gk_monomial_kernel_dim(n, alpha, beta), 1u);
                bool through_l = f.evaluate(-1, beta + n + 1) == 0;
                EXPECT_EQ(through_l, oracle::gk_curve_passes_L(n, alpha, beta));
                EXPECT_EQ(through_l, gk_det_predicate(n, alpha, beta));
            }
}

TEST(Polynomial, BinomialPolynomialMatchesBinom) {
    auto x = BivariatePolynomial::linear(1, 0, -3);
    for (long k = 0; k <= 6; ++k) {
        auto p = binomial_polynomial(x, k);
        EXPECT_EQ(p.total_degree(), k);
        for (long v = -8; v <= 8; ++v) EXPECT_EQ(p.evaluate(v, 0), Rational(binom(Integer(v - 3), k)));
    }
    BivariatePolynomial f = BivariatePolynomial::monomial(2, 1, make_rational(Integer(1), Integer(3))) +
                            BivariatePolynomial::constant(-2);
    BivariatePolynomial::Evaluator ev(f);
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) EXPECT_EQ(ev(a, b), f.evaluate(a, b));
}

TEST(GkCriterion, SimpleFailures) {
    auto unit = gk_criterion(parse_triangle("0,0;1,1/2;-1,1/2"));
    EXPECT_FALSE(unit.criterion_holds);
    Triangle small = parse_triangle("0,0;10,40;36,27").scaled(make_rational(Integer(1), Integer(1170)));
    auto r = gk_criterion(small);
    EXPECT_FALSE(r.setup_ok);
    EXPECT_FALSE(r.criterion_holds);
    EXPECT_EQ(error_code([] { gk_criterion(Triangle(RationalPoint(0, 0), RationalPoint(1, 0), RationalPoint(0, 1))); }),
              "vertical-edge");
}

TEST(GkCriterion, MatchesDirectEvaluation) {
    // every candidate shape visited by the documented search, first denominators only
    GkSearchBounds b;
    int holds = 0, total = 0;
    for (long den = 1; den <= 4; ++den)
        for (long q = 1; q <= 4; ++q)
            for (long p = -30; p <= 30; ++p) {
                if (std::gcd(p, q) != 1) continue;
                Rational sigma = make_rational(Integer(p), Integer(q));
                for (long i = 1; i < 2 * den; ++i)
                    for (long j = 1; j < 2 * den; ++j) {
                        Rational xl = make_rational(Integer(-i), Integer(den)), xr = make_rational(Integer(j), Integer(den));
                        RationalPoint a(0, 0), l(xl, 1 + sigma * xl), r(xr, 1 + sigma * xr);
                        if (cross(a, l, r) == 0) continue;
                        Triangle t(a, l, r);
                        if (t.has_vertical_edge()) continue;
                        GkReport rep = gk_criterion(t);
                        oracle::GkDirect d = oracle::gk_direct(op(a), op(l), op(r));
                        EXPECT_EQ(rep.setup_ok, d.setup);
                        EXPECT_EQ(rep.w, d.w);
                        EXPECT_EQ(rep.n, d.n);
                        EXPECT_EQ(rep.right_count, d.right);
                        EXPECT_EQ(rep.ns2_integral, d.ns2_integral);
                        EXPECT_EQ(rep.criterion_holds, d.holds);
                        EXPECT_EQ(rep.criterion_holds, rep.failures().empty());
                        holds += rep.criterion_holds;
                        ++total;
                    }
            }
    (void)b;
    EXPECT_GT(total, 1000);
    // small denominators never satisfy it; the searched triangle is the positive control
    EXPECT_EQ(holds, 0);
    const Triangle& hit = searched().triangle;
    oracle::GkDirect d = oracle::gk_direct(op(hit[0]), op(hit[1]), op(hit[2]));
    EXPECT_TRUE(d.holds);
    EXPECT_EQ(gk_criterion(hit).criterion_holds, d.holds);
    EXPECT_EQ(gk_criterion(hit).n, d.n);
}

TEST(GkCriterion, CompanionPredicateIsIndependent) {
    // -s2' = 1 + 1/n holds exactly on the determinant-law line; the criterion ignores it
    Triangle t = searched().triangle;
    auto r = gk_criterion(t);
    EXPECT_TRUE(r.criterion_holds);
    EXPECT_GT(r.sheared_s2, -2);
    EXPECT_LT(r.sheared_s2, -1);
    EXPECT_EQ(r.sheared_s2_is_one_plus_inverse_n, -r.sheared_s2 == 1 + make_rational(Integer(1), r.n));
}

TEST(GkSearch, FindsCriterionTrueTriangle) {
    const auto& hit = searched();
    EXPECT_TRUE(hit.report.criterion_holds);
    EXPECT_GE(hit.report.n, 2);
    const auto& v = hit.triangle.vertices();
    auto d = oracle::gk_direct(op(v[0]), op(v[1]), op(v[2]));
    EXPECT_TRUE(d.holds);
    EXPECT_EQ(hit.support_size, enumerate_points(hit.triangle, hit.triangle.integral_dilation()).size());
}

TEST(GkWitness, SearchedTriangleVerifiesAtTwoSmallestDilations) {
    const Triangle& t = searched().triangle;
    for (const auto& d : smallest_admissible_dilations(t)) {
        auto [w, v] = gk_witness(t, d);
        EXPECT_TRUE(v.passed());
        Rational dw = triangle_data(t).width * d;
        EXPECT_EQ(Rational(w.total_degree), dw - 1);
        EXPECT_EQ(Integer(w.total_degree), w.normalization.alpha - 1 + w.normalization.n);
        EXPECT_EQ(v.points_checked, enumerate_points(t, d).size());
        EXPECT_NE(v.value_at_leftmost, 0);
        EXPECT_EQ(v.leftmost, LatticePoint(-1, w.normalization.beta + w.normalization.n + 1));
        // independent evaluation: plain monomial sums at every point
        SupportSet s = gk_normalized_support(t, w.normalization);
        for (std::size_t i = 0; i < s.size(); ++i) {
            Rational val = w.polynomial.evaluate(s[i].x, s[i].y);
            if (i == 0) {
                EXPECT_NE(val, 0);
            } else {
                EXPECT_EQ(val, 0) << to_string(s[i]);
            }
        }
    }
}

TEST(GkWitness, CriterionFalseIsPreconditionError) {
    Triangle t = parse_triangle("0,0;10,40;36,27");
    EXPECT_EQ(error_code([&] { gk_witness(t, 1); }), "criterion-false");
}

TEST(GkWitness, AgreesWithSeparatingPolynomialAtLeftmost) {
    const Triangle& t = searched().triangle;
    const Integer d = t.integral_dilation();
    auto [w, v] = gk_witness(t, d);
    SupportSet s = gk_normalized_support(t, w.normalization);
    long dw = Integer(w.normalization.alpha + w.normalization.n).get_si();
    auto c = separating_polynomial(s, dw, s.leftmost_index());
    EXPECT_EQ(c.has_value(), v.passed());
    ASSERT_TRUE(c.has_value());
    // the witness itself, rescaled to 1 at the leftmost point, is one solution
    Rational scale = 1 / v.value_at_leftmost;
    DerivOrderList orders(dw);
    std::vector<Rational> from_witness(orders.size(), Rational(0));
    for (const auto& [e, coeff] : w.polynomial.terms()) {
        auto it = std::find(orders.orders().begin(), orders.orders().end(), e);
        ASSERT_NE(it, orders.orders().end());
        from_witness[it - orders.orders().begin()] = coeff * scale;
    }
    EXPECT_TRUE(maps_to_unit(build_B(s, dw).to_int_matrix(), from_witness, 0));
}
