#pragma once

#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/gk/criterion.hpp"
#include "mdsgrid/lattice/gk_normalize.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"

namespace mdsgrid {

/// Search space for criterion-true triangles. Every candidate has the vertex
/// (0,0) and an opposite edge of slope sigma through (0,1) with endpoints at
/// x = -i/den and x = j/den:
///   den in [1, max_den], i, j in [1, 2*den), sigma = p/q in lowest terms with
///   q in [1, max_slope_den], |p| <= max_slope_num.
struct GkSearchBounds {
    long max_den = 8;
    long max_slope_num = 30;
    long max_slope_den = 4;
    long min_n = 2;
};

struct GkSearchHit {
    Triangle triangle;
    GkReport report;
    std::size_t support_size = 0;  // lattice points of d0 * triangle
};

/// A triangle passes when the criterion holds and gk_normalize succeeds at
/// both of the two smallest admissible d.
inline bool gk_search_accepts(const Triangle& t, long min_n, GkReport* out = nullptr) {
    GkReport r = gk_criterion(t);
    if (!r.criterion_holds || r.n < min_n) return false;
    try {
        for (const auto& d : smallest_admissible_dilations(t)) gk_normalize(t, d);
    } catch (const DomainError&) {
        return false;
    }
    if (out) *out = r;
    return true;
}

/// Exhaustive scan; among accepted triangles returns the one with the fewest
/// lattice points at the smallest admissible d, ties broken by vertex order.
inline std::optional<GkSearchHit> find_gk_triangle(const GkSearchBounds& b = {}) {
    std::optional<GkSearchHit> best;
    auto better = [](const GkSearchHit& x, const GkSearchHit& y) {
        if (x.support_size != y.support_size) return x.support_size < y.support_size;
        return x.triangle.vertices() < y.triangle.vertices();
    };
    for (long den = 1; den <= b.max_den; ++den) {
        for (long q = 1; q <= b.max_slope_den; ++q) {
            for (long p = -b.max_slope_num; p <= b.max_slope_num; ++p) {
                if (std::gcd(p, q) != 1) continue;
                Rational sigma = make_rational(Integer(p), Integer(q));
                for (long i = 1; i < 2 * den; ++i) {
                    for (long j = 1; j < 2 * den; ++j) {
                        if (i + j >= den) continue;  // width (i+j)/den < 1
                        Rational xl = make_rational(Integer(-i), Integer(den));
                        Rational xr = make_rational(Integer(j), Integer(den));
                        Triangle t(RationalPoint(0, 0), RationalPoint(xl, 1 + sigma * xl), RationalPoint(xr, 1 + sigma * xr));
                        if (t.has_vertical_edge()) continue;
                        GkReport r;
                        if (!gk_search_accepts(t, b.min_n, &r)) continue;
                        GkSearchHit hit{t, r, enumerate_points(t, t.integral_dilation()).size()};
                        if (!best || better(hit, *best)) best = std::move(hit);
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace mdsgrid
