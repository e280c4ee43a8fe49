#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/gk/gk_matrix.hpp"
#include "mdsgrid/gk/polynomial.hpp"
#include "mdsgrid/lattice/gk_normalize.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"

namespace mdsgrid {

/// Slope arithmetic of the Gonzalez-Karu criterion for a triangle.
///   n           = #([s1, s2] cap Z)
///   right_count = #((n-1)[s2, s3] cap Z)
///   criterion   = setup_ok && w < 1 && right_count == n && n*s2 not in Z
struct GkReport {
    bool setup_ok = false;
    Rational w;  // doubled area; equals the width when setup_ok
    Rational width;
    std::array<Rational, 3> slopes;
    Integer n;
    Integer right_count;
    bool ns2_integral = false;
    bool criterion_holds = false;
    // Companion predicate -s2' = 1 + 1/n on the sheared middle slope s2' in (-2, -1).
    // Reported independently; the criterion does not use it.
    Rational sheared_s2;
    bool sheared_s2_is_one_plus_inverse_n = false;

    /// Names of the failing hypotheses, empty when the criterion holds.
    std::vector<std::string> failures() const {
        std::vector<std::string> f;
        if (!setup_ok) f.push_back("setup");
        if (!(w < 1)) f.push_back("w<1");
        if (right_count != n) f.push_back("right_count==n");
        if (ns2_integral) f.push_back("n*s2 not integral");
        return f;
    }
};

inline GkReport gk_criterion(const Triangle& t) {
    GkReport r;
    TriangleData data = triangle_data(t);  // throws on a vertical edge
    r.setup_ok = gk_setup_check(t);
    r.w = data.doubled_area;
    r.width = data.width;
    r.slopes = data.slopes;
    const Rational& s1 = data.slopes[0];
    const Rational& s2 = data.slopes[1];
    const Rational& s3 = data.slopes[2];
    r.n = count_integers(s1, s2);
    Rational k = r.n - 1;
    Rational lo = k * s2, hi = k * s3;
    if (lo > hi) std::swap(lo, hi);
    r.right_count = count_integers(lo, hi);
    r.ns2_integral = is_integral(Rational(r.n * s2));
    r.criterion_holds = r.setup_ok && r.w < 1 && r.right_count == r.n && !r.ns2_integral;
    r.sheared_s2 = s2 + Integer(-floor(s2) - 2);
    r.sheared_s2_is_one_plus_inverse_n = r.n != 0 && -r.sheared_s2 == 1 + make_rational(Integer(1), r.n);
    return r;
}

/// C' = C + vertical lines x = 1..alpha-1, in normalized coordinates.
struct WitnessCurve {
    std::vector<Rational> curve_coeffs;  // over G_0..G_n
    Integer vertical_from = 1;
    Integer vertical_to;  // alpha - 1; empty range when alpha = 1
    long total_degree = 0;
    GkNormalization normalization;
    BivariatePolynomial polynomial;  // monomial form, for verification
};

struct WitnessVerification {
    std::size_t points_checked = 0;
    LatticePoint leftmost;
    Rational value_at_leftmost;
    long expected_degree = 0;
    std::vector<std::string> violations;
    bool passed() const noexcept { return violations.empty(); }
};

/// Assembles the witness and evaluates it at every lattice point of the
/// normalized d*t. Never throws on a failed check; see gk_witness.
inline std::pair<WitnessCurve, WitnessVerification> gk_witness_report(const Triangle& t, const Integer& d) {
    GkReport report = gk_criterion(t);
    if (!report.criterion_holds) {
        std::string which;
        for (const auto& f : report.failures()) which += (which.empty() ? "" : ", ") + f;
        throw DomainError("criterion-false", "criterion hypotheses fail: " + which);
    }
    GkNormalization norm = gk_normalize(t, d);
    WitnessCurve w;
    w.normalization = norm;
    w.curve_coeffs = gk_interpolation_curve(norm.n, norm.alpha, norm.beta);
    w.vertical_to = norm.alpha - 1;
    BivariatePolynomial f = gk_curve_polynomial(w.curve_coeffs, norm.alpha);
    for (Integer k = 1; k < norm.alpha; ++k) f = f * BivariatePolynomial::linear(1, 0, Rational(-k));
    w.polynomial = f;
    w.total_degree = f.total_degree();

    WitnessVerification v;
    Integer dw = norm.alpha + norm.n;
    v.expected_degree = Integer(dw - 1).get_si();
    if (w.total_degree != v.expected_degree) {
        v.violations.push_back("degree " + std::to_string(w.total_degree) + " != dw-1 = " +
                               std::to_string(v.expected_degree));
    }
    SupportSet s = gk_normalized_support(t, norm);
    v.leftmost = s[s.leftmost_index()];
    const LatticePoint expected_left(-1, norm.beta + norm.n + 1);
    if (v.leftmost != expected_left) v.violations.push_back("leftmost point is " + to_string(v.leftmost));
    BivariatePolynomial::Evaluator eval(f);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rational val = eval(s[i].x, s[i].y);
        ++v.points_checked;
        if (i == s.leftmost_index()) {
            v.value_at_leftmost = val;
            if (val == 0) v.violations.push_back("witness vanishes at the leftmost point");
        } else if (val != 0) {
            v.violations.push_back("witness is nonzero at " + to_string(s[i]));
        }
    }
    return {std::move(w), std::move(v)};
}

/// As gk_witness_report, but a failed verification is an invariant violation.
inline std::pair<WitnessCurve, WitnessVerification> gk_witness(const Triangle& t, const Integer& d) {
    auto result = gk_witness_report(t, d);
    if (!result.second.passed()) {
        throw InvariantViolation("witness-verification", "witness check failed: " + result.second.violations.front());
    }
    return result;
}

/// The two smallest d >= 1 with d*t integral.
inline std::array<Integer, 2> smallest_admissible_dilations(const Triangle& t) {
    Integer d0 = t.integral_dilation();
    return {d0, 2 * d0};
}

}  // namespace mdsgrid
