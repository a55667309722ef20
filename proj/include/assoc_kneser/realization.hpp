#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "assoc_kneser/polygon.hpp"

namespace assockg {

using Rat = mpq_class;

struct Vec2 {
    Rat x, y;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

/// Cross product (b - a) x (c - a); positive iff a, b, c make a left turn.
Rat orient(const Vec2& a, const Vec2& b, const Vec2& c);

/// An affine function p -> ax*x + ay*y + c on the plane.
struct Affine2 {
    Rat ax, ay, c;
    Rat eval(const Vec2& p) const { return ax * p.x + ay * p.y + c; }
};

/// An exact-rational convex polygon with vertices in strictly convex
/// position, counterclockwise in label order (1-based labels). make_polygon
/// validates: every vertex lies strictly left of every directed edge.
struct PolygonRealization {
    int n = 0;
    std::vector<Vec2> pts;  // pts[k] is vertex k+1

    const Vec2& vertex(int label) const { return pts[label - 1]; }
};

PolygonRealization make_polygon(std::vector<Vec2> pts);

/// An affine image of the regular n-gon with rational coordinates. Exists
/// for n = 4 (rotated unit square) and n = 6 (hexagon squeezed by sqrt(3)).
/// Every affine-invariant claim about the regular polygon can be checked
/// exactly on these.
PolygonRealization affine_regular_polygon(int n);

/// n distinct rational points on the unit circle in counterclockwise order,
/// via the tangent-half-angle parametrization; deterministic in the seed.
PolygonRealization random_circle_polygon(int n, uint64_t seed);

/// Deterministic 64-bit mix used for all sampling (same seed, same stream).
uint64_t splitmix64(uint64_t& state);

}  // namespace assockg
