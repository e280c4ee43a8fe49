#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/lattice/point.hpp"
#include "mdsgrid/lattice/triangle.hpp"

namespace mdsgrid {

/// Finite set of lattice points in strictly increasing lexicographic order.
/// Row i of every interpolation matrix corresponds to points()[i]; the
/// lex-minimal (leftmost lowest) point is always row 0.
class SupportSet {
public:
    SupportSet() = default;

    /// Sorts and removes duplicates.
    static SupportSet from_points(std::vector<LatticePoint> pts) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        SupportSet s;
        s.points_ = std::move(pts);
        return s;
    }

    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
    static constexpr std::size_t leftmost_index() noexcept { return 0; }

    std::optional<std::size_t> index_of(const LatticePoint& p) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it == points_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - points_.begin());
    }

    friend bool operator==(const SupportSet& a, const SupportSet& b) { return a.points_ == b.points_; }

private:
    std::vector<LatticePoint> points_;
};

/// All integer points in the closed triangle q * t.
inline SupportSet enumerate_points(const Triangle& t, const Integer& q) {
    if (q < 1) throw DomainError("bad-dilation", "enumerate_points: q must be >= 1");
    std::array<RationalPoint, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = RationalPoint(t[i].x * q, t[i].y * q);

    Integer xlo = ceil(v[0].x);
    Integer xhi = floor(v[2].x);
    std::vector<LatticePoint> pts;
    for (Integer x = xlo; x <= xhi; ++x) {
        // Each edge (a, b) with opposite vertex c contributes the half-plane
        // sign(cross(a, b, X)) in {0, sign(cross(a, b, c))}; linear in X.y.
        Rational ylo;
        Rational yhi;
        bool has_lo = false;
        bool has_hi = false;
        bool feasible = true;
        for (int e = 0; e < 3 && feasible; ++e) {
            const auto& a = v[e];
            const auto& b = v[(e + 1) % 3];
            const auto& c = v[(e + 2) % 3];
            int side = sgn(cross(a, b, c));
            // cross(a, b, X) = (b.x - a.x)(y - a.y) - (b.y - a.y)(x - a.x)
            Rational coef = b.x - a.x;
            Rational rest = -(b.y - a.y) * (Rational(x) - a.x) - coef * a.y;
            if (coef == 0) {
                if (sgn(rest) * side < 0) feasible = false;
                continue;
            }
            Rational bound = -rest / coef;  // cross vanishes at y = bound
            bool lower = (sgn(coef) * side) > 0;
            if (lower) {
                if (!has_lo || bound > ylo) ylo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < yhi) yhi = bound;
                has_hi = true;
            }
        }
        if (!feasible || !has_lo || !has_hi) continue;
        for (Integer y = ceil(ylo), top = floor(yhi); y <= top; ++y) pts.push_back({x, y});
    }
    return SupportSet::from_points(std::move(pts));
}

inline void require_wpp_weights(const Integer& a, const Integer& b, const Integer& c) {
    if (a < 1 || b < 1 || c < 1) throw DomainError("non-positive-weight", "weights must be positive");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) {
        throw DomainError("non-coprime-weights", "weights must be pairwise coprime");
    }
}

/// Exponents (u, v) of the weighted-degree-d monomials x^u y^v z^w of
/// P(a, b, c), read on the chart z = 1.
inline SupportSet support_from_wpp(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    require_wpp_weights(a, b, c);
    if (d < 0) throw DomainError("negative-degree", "degree must be nonnegative");
    const std::int64_t A = to_int64(a), B = to_int64(b), C = to_int64(c), D = to_int64(d);
    // b * v = d - a * u (mod c) pins v to a single class mod c.
    Integer binv;
    mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    const std::int64_t b_inverse = C == 1 ? 0 : binv.get_si();
    std::vector<LatticePoint> pts;
    for (std::int64_t u = 0; A * u <= D; ++u) {
        std::int64_t rest = D - A * u;
        std::int64_t v0 = static_cast<std::int64_t>((static_cast<__int128>(rest % C) * b_inverse) % C);
        for (std::int64_t v = v0; B * v <= rest; v += C) pts.push_back({Integer(u), Integer(v)});
    }
    return SupportSet::from_points(std::move(pts));
}

}  // namespace mdsgrid
