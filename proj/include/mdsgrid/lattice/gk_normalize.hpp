#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/lattice/affine_map.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"

namespace mdsgrid {

/// True iff (0,0) is a vertex of t and (0,1) lies in the relative interior of
/// the edge joining the other two vertices.
inline bool gk_setup_check(const Triangle& t) {
    const RationalPoint origin(0, 0);
    const RationalPoint unit_y(0, 1);
    for (int i = 0; i < 3; ++i) {
        if (t[i] != origin) continue;
        const RationalPoint& a = t[(i + 1) % 3];
        const RationalPoint& b = t[(i + 2) % 3];
        if (cross(a, b, unit_y) != 0) return false;
        // unit_y = a + s (b - a) with 0 < s < 1
        Rational dot = (unit_y.x - a.x) * (b.x - a.x) + (unit_y.y - a.y) * (b.y - a.y);
        Rational len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        return dot > 0 && dot < len2;
    }
    return false;
}

/// Coordinates in which d*t has leftmost vertex (-1, beta+n+1), rightmost
/// vertex on the x-axis and middle slope in (-2, -1).
struct GkNormalization {
    AffineUnimodularMap map = AffineUnimodularMap::identity();
    Integer n;
    Integer alpha;
    Integer beta;
    Integer d;
};

/// Describes the first place where `s` departs from the normalized column
/// profile, or nullopt when the profile is exact:
///   column -1 = {(-1, beta+n+1)}, column 0 = {(0,beta) .. (0,beta+n-1)},
///   column alpha+i = {(alpha+i,0) .. (alpha+i,n-1-i)} for 0 <= i < n,
///   nothing right of alpha+n-1.
inline std::optional<std::string> gk_profile_violation(const SupportSet& s, const Integer& n, const Integer& alpha,
                                                       const Integer& beta) {
    std::map<Integer, std::vector<Integer>> columns;
    for (const auto& p : s.points()) columns[p.x].push_back(p.y);
    auto expect = [&](const Integer& x, const Integer& lo, const Integer& hi) -> std::optional<std::string> {
        auto it = columns.find(x);
        std::vector<Integer> want;
        for (Integer y = lo; y <= hi; ++y) want.push_back(y);
        std::vector<Integer> got = it == columns.end() ? std::vector<Integer>{} : it->second;
        if (got != want) {
            return "column x=" + x.get_str() + " has " + std::to_string(got.size()) + " points, expected y in [" +
                   lo.get_str() + "," + hi.get_str() + "]";
        }
        return std::nullopt;
    };
    if (s.empty() || s[0].x != -1) return std::string("leftmost column is not x=-1");
    if (auto v = expect(-1, beta + n + 1, beta + n + 1)) return v;
    if (auto v = expect(0, beta, beta + n - 1)) return v;
    for (Integer i = 0; i < n; ++i) {
        if (auto v = expect(alpha + i, 0, n - 1 - i)) return v;
    }
    if (s.points().back().x != alpha + n - 1) return std::string("rightmost column is not x=alpha+n-1");
    return std::nullopt;
}

/// Shears d*t so the middle slope lies in (-2,-1), then translates the
/// leftmost vertex to x = -1 and the rightmost vertex onto the x-axis, and
/// reads off n = #([s1,s2] cap Z), alpha = dw - n, beta = -s2*dw - n - 1.
inline GkNormalization gk_normalize(const Triangle& t, const Integer& d) {
    if (d < 1) throw DomainError("bad-dilation", "gk_normalize: d must be >= 1");
    TriangleData data = triangle_data(t);
    const Rational& s1 = data.slopes[0];
    const Rational& s2 = data.slopes[1];
    if (is_integral(s2)) throw DomainError("integral-middle-slope", "middle slope s2 = " + to_string(s2) + " is an integer");
    Rational dw = data.width * d;
    if (!is_integral(dw)) {
        throw DomainError("normalization-integrality", "d*w = " + to_string(dw) + " is not an integer");
    }
    Triangle dt = t.scaled(Rational(d));
    if (!dt.is_integral()) {
        throw DomainError("normalization-integrality", "d*t does not have integer vertices for d = " + d.get_str());
    }

    Integer shear = -floor(s2) - 2;
    Rational s2n = s2 + shear;
    const RationalPoint& left = dt[0];
    const RationalPoint& right = dt[2];
    Integer tx = -1 - left.x.get_num();
    Integer ty = -(right.y.get_num() + shear * right.x.get_num());
    AffineUnimodularMap map = AffineUnimodularMap::translation(tx, ty).after(AffineUnimodularMap::shear(shear));

    GkNormalization out;
    out.map = map;
    out.d = d;
    out.n = count_integers(s1, s2);
    Integer width = dw.get_num();
    out.alpha = width - out.n;
    Rational beta = -s2n * dw - out.n - 1;
    if (!is_integral(beta)) {
        throw DomainError("normalization-integrality", "beta = " + to_string(beta) + " is not an integer");
    }
    out.beta = beta.get_num();
    if (out.n < 1) throw DomainError("n-zero", "no integer lies in [s1, s2]");
    if (out.alpha < 1) {
        throw DomainError("alpha-nonpositive", "alpha = dw - n = " + out.alpha.get_str() + " must be >= 1");
    }
    if (out.beta < 0) throw DomainError("beta-negative", "beta = " + out.beta.get_str() + " must be >= 0");

    SupportSet image = apply_map(map, enumerate_points(t, d));
    if (auto violation = gk_profile_violation(image, out.n, out.alpha, out.beta)) {
        throw DomainError("normalization-structure", "normalized support departs from the column profile: " + *violation);
    }
    return out;
}

inline SupportSet gk_normalized_support(const Triangle& t, const GkNormalization& norm) {
    return apply_map(norm.map, enumerate_points(t, norm.d));
}

}  // namespace mdsgrid
