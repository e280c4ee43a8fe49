#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/lattice/point.hpp"

namespace mdsgrid {

/// Non-degenerate triangle with rational vertices, stored in lexicographic order.
class Triangle {
public:
    Triangle(RationalPoint a, RationalPoint b, RationalPoint c) : v_{std::move(a), std::move(b), std::move(c)} {
        std::sort(v_.begin(), v_.end());
        if (v_[0] == v_[1] || v_[1] == v_[2]) {
            throw DomainError("degenerate-triangle", "triangle has repeated vertices");
        }
        if (cross(v_[0], v_[1], v_[2]) == 0) {
            throw DomainError("degenerate-triangle", "triangle vertices are collinear");
        }
    }

    const std::array<RationalPoint, 3>& vertices() const noexcept { return v_; }
    const RationalPoint& operator[](std::size_t i) const { return v_[i]; }

    Triangle scaled(const Rational& factor) const {
        if (factor == 0) throw DomainError("degenerate-triangle", "scaling by zero");
        auto s = [&](const RationalPoint& p) { return RationalPoint(p.x * factor, p.y * factor); };
        return Triangle(s(v_[0]), s(v_[1]), s(v_[2]));
    }

    bool is_integral() const {
        return std::all_of(v_.begin(), v_.end(),
                           [](const RationalPoint& p) { return mdsgrid::is_integral(p.x) && mdsgrid::is_integral(p.y); });
    }

    /// Smallest q >= 1 with q * t integral.
    Integer integral_dilation() const {
        Integer l = 1;
        for (const auto& p : v_) {
            l = lcm(l, p.x.get_den());
            l = lcm(l, p.y.get_den());
        }
        return l;
    }

    bool has_vertical_edge() const {
        return v_[0].x == v_[1].x || v_[1].x == v_[2].x || v_[0].x == v_[2].x;
    }

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.v_ == b.v_; }

private:
    std::array<RationalPoint, 3> v_;
};

struct TriangleData {
    std::array<Rational, 3> slopes;  // ascending: s1 < s2 < s3
    Rational width;
    Rational doubled_area;
};

inline Rational slope(const RationalPoint& a, const RationalPoint& b) {
    if (a.x == b.x) throw DomainError("vertical-edge", "edge " + to_string(a) + " -- " + to_string(b) + " is vertical");
    return (b.y - a.y) / (b.x - a.x);
}

/// Edge slopes, width and doubled area. The edge joining the leftmost and
/// rightmost vertices always carries the middle slope s2.
inline TriangleData triangle_data(const Triangle& t) {
    if (t.has_vertical_edge()) throw DomainError("vertical-edge", "triangle has a vertical edge");
    TriangleData data;
    data.slopes = {slope(t[0], t[1]), slope(t[1], t[2]), slope(t[0], t[2])};
    std::sort(data.slopes.begin(), data.slopes.end());
    data.width = t[2].x - t[0].x;
    data.doubled_area = abs(cross(t[0], t[1], t[2]));
    return data;
}

/// Number of integers in [lo, hi].
inline Integer count_integers(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("empty-interval", "count_integers: lo > hi");
    Integer n = floor(hi) - ceil(lo) + 1;
    return n < 0 ? Integer(0) : n;
}

/// Lattice points on the boundary of an integral triangle (sum of edge gcds).
inline Integer boundary_lattice_count(const Triangle& t) {
    if (!t.is_integral()) throw DomainError("non-integral-triangle", "boundary count needs integer vertices");
    Integer total = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& a = t[i];
        const auto& b = t[(i + 1) % 3];
        total += gcd(Rational(b.x - a.x).get_num(), Rational(b.y - a.y).get_num());
    }
    return total;
}

/// Text form "x,y;x,y;x,y" with each coordinate "num" or "num/den".
inline Triangle parse_triangle(std::string_view text) {
    std::vector<RationalPoint> pts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view vertex = text.substr(start, end - start);
        auto comma = vertex.find(',');
        if (comma == std::string_view::npos || vertex.find(',', comma + 1) != std::string_view::npos) {
            throw ValidationError("bad-triangle", "vertex '" + std::string(vertex) + "' is not 'x,y'");
        }
        pts.emplace_back(parse_rational(vertex.substr(0, comma)), parse_rational(vertex.substr(comma + 1)));
        start = end + 1;
    }
    if (pts.size() != 3) {
        throw ValidationError("bad-triangle", "expected three vertices separated by ';'");
    }
    try {
        return Triangle(pts[0], pts[1], pts[2]);
    } catch (const DomainError& e) {
        throw ValidationError(e.code(), e.what());
    }
}

inline std::string format_triangle(const Triangle& t) {
    return to_string(t[0]) + ";" + to_string(t[1]) + ";" + to_string(t[2]);
}

}  // namespace mdsgrid
