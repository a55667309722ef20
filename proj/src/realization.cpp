#include "assoc_kneser/realization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace assockg {

Rat orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

PolygonRealization make_polygon(std::vector<Vec2> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (int i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        for (int q = 0; q < n; ++q) {
            if (q == i || q == (i + 1) % n) continue;
            if (orient(a, b, pts[q]) <= 0)
                throw std::invalid_argument("vertices are not in strictly convex position");
        }
    }
    PolygonRealization out;
    out.n = n;
    out.pts = std::move(pts);
    return out;
}

PolygonRealization affine_regular_polygon(int n) {
    std::vector<Vec2> pts;
    if (n == 4) {
        pts = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
    } else if (n == 6) {
        // Regular hexagon scaled by 1/sqrt(3) in y: (cos(k*60), sin(k*60)/sqrt 3).
        pts = {{Rat(1), Rat(0)},       {Rat(1, 2), Rat(1, 2)},
               {Rat(-1, 2), Rat(1, 2)}, {Rat(-1), Rat(0)},
               {Rat(-1, 2), Rat(-1, 2)}, {Rat(1, 2), Rat(-1, 2)}};
    } else {
        throw std::invalid_argument("rational affine-regular polygons exist for n = 4, 6");
    }
    return make_polygon(std::move(pts));
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

PolygonRealization random_circle_polygon(int n, uint64_t seed) {
    // Distinct rational tangent-half-angle parameters; increasing t walks
    // the unit circle counterclockwise through (cos, sin) = ((1-t^2), 2t)/(1+t^2).
    uint64_t state = seed;
    std::set<Rat> ts;
    while (static_cast<int>(ts.size()) < n) {
        long num = static_cast<long>(splitmix64(state) % 4001) - 2000;
        long den = static_cast<long>(splitmix64(state) % 512) + 1;
        Rat t(num, den);
        t.canonicalize();
        ts.insert(t);
    }
    std::vector<Vec2> pts;
    for (const Rat& t : ts) {
        Rat denom = 1 + t * t;
        pts.push_back({(1 - t * t) / denom, 2 * t / denom});
    }
    return make_polygon(std::move(pts));
}

}  // namespace assockg
