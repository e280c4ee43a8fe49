#pragma once

#include <string>

#include "mdsgrid/exact/integer.hpp"

namespace mdsgrid {

/// Integer point, ordered lexicographically (x first, then y).
struct LatticePoint {
    Integer x;
    Integer y;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        int c = cmp(a.x, b.x);
        return c < 0 || (c == 0 && a.y < b.y);
    }
};

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    explicit RationalPoint(const LatticePoint& p) : x(p.x), y(p.y) {}

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        int c = cmp(a.x, b.x);
        return c < 0 || (c == 0 && a.y < b.y);
    }
};

/// z-component of (b - a) x (c - a).
inline Rational cross(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline std::string to_string(const LatticePoint& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; }
inline std::string to_string(const RationalPoint& p) { return to_string(p.x) + "," + to_string(p.y); }

}  // namespace mdsgrid
