#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/lattice/point.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"

namespace mdsgrid {

/// p -> M p + t with M an integer 2x2 matrix of determinant +-1.
/// These are the torus automorphisms (times a monomial) that fix e = (1, 1).
class AffineUnimodularMap {
public:
    AffineUnimodularMap(Integer m00, Integer m01, Integer m10, Integer m11, Integer t0 = 0, Integer t1 = 0)
        : m00_(std::move(m00)), m01_(std::move(m01)), m10_(std::move(m10)), m11_(std::move(m11)),
          t0_(std::move(t0)), t1_(std::move(t1)) {
        Integer det = m00_ * m11_ - m01_ * m10_;
        if (det != 1 && det != -1) {
            throw DomainError("non-unimodular", "affine map matrix has determinant " + det.get_str());
        }
    }

    static AffineUnimodularMap identity() { return {1, 0, 0, 1}; }
    /// (i, j) -> (i, j + a i)
    static AffineUnimodularMap shear(const Integer& a) { return {1, 0, a, 1}; }
    static AffineUnimodularMap translation(const Integer& tx, const Integer& ty) { return {1, 0, 0, 1, tx, ty}; }

    Integer determinant() const { return m00_ * m11_ - m01_ * m10_; }

    LatticePoint apply(const LatticePoint& p) const {
        return {m00_ * p.x + m01_ * p.y + t0_, m10_ * p.x + m11_ * p.y + t1_};
    }
    RationalPoint apply(const RationalPoint& p) const {
        return {m00_ * p.x + m01_ * p.y + t0_, m10_ * p.x + m11_ * p.y + t1_};
    }

    /// (*this) o inner
    AffineUnimodularMap after(const AffineUnimodularMap& inner) const {
        return {m00_ * inner.m00_ + m01_ * inner.m10_, m00_ * inner.m01_ + m01_ * inner.m11_,
                m10_ * inner.m00_ + m11_ * inner.m10_, m10_ * inner.m01_ + m11_ * inner.m11_,
                m00_ * inner.t0_ + m01_ * inner.t1_ + t0_, m10_ * inner.t0_ + m11_ * inner.t1_ + t1_};
    }

    AffineUnimodularMap inverse() const {
        Integer det = determinant();
        // det = +-1, so 1/det = det.
        Integer i00 = m11_ * det, i01 = -m01_ * det, i10 = -m10_ * det, i11 = m00_ * det;
        return {i00, i01, i10, i11, -(i00 * t0_ + i01 * t1_), -(i10 * t0_ + i11 * t1_)};
    }

    const Integer& m00() const { return m00_; }
    const Integer& m01() const { return m01_; }
    const Integer& m10() const { return m10_; }
    const Integer& m11() const { return m11_; }
    const Integer& t0() const { return t0_; }
    const Integer& t1() const { return t1_; }

    friend bool operator==(const AffineUnimodularMap& a, const AffineUnimodularMap& b) {
        return a.m00_ == b.m00_ && a.m01_ == b.m01_ && a.m10_ == b.m10_ && a.m11_ == b.m11_ && a.t0_ == b.t0_ &&
               a.t1_ == b.t1_;
    }

private:
    Integer m00_, m01_, m10_, m11_;
    Integer t0_, t1_;
};

/// Image support plus, for each source index i, the index of its image.
struct TrackedSupport {
    SupportSet support;
    std::vector<std::size_t> image_index;
};

inline TrackedSupport apply_map_tracked(const AffineUnimodularMap& m, const SupportSet& s) {
    std::vector<std::pair<LatticePoint, std::size_t>> imgs;
    imgs.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) imgs.emplace_back(m.apply(s[i]), i);
    std::sort(imgs.begin(), imgs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    TrackedSupport out;
    out.image_index.resize(s.size());
    std::vector<LatticePoint> pts;
    pts.reserve(s.size());
    for (std::size_t k = 0; k < imgs.size(); ++k) {
        out.image_index[imgs[k].second] = k;
        pts.push_back(std::move(imgs[k].first));
    }
    out.support = SupportSet::from_points(std::move(pts));
    if (out.support.size() != s.size()) throw InvariantViolation("map-not-injective", "unimodular image lost points");
    return out;
}

inline SupportSet apply_map(const AffineUnimodularMap& m, const SupportSet& s) {
    return apply_map_tracked(m, s).support;
}

inline Triangle apply_map(const AffineUnimodularMap& m, const Triangle& t) {
    return Triangle(m.apply(t[0]), m.apply(t[1]), m.apply(t[2]));
}

}  // namespace mdsgrid
