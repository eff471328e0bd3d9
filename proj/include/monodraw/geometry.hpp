#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace monodraw {

using Coord = std::int64_t;
using Wide = __int128;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

struct Vec {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Vec& a, const Vec& b) { return a.x == b.x && a.y == b.y; }
};

inline Wide cross(Vec a, Vec b) { return Wide(a.x) * b.y - Wide(a.y) * b.x; }
inline Wide dot(Vec a, Vec b) { return Wide(a.x) * b.x + Wide(a.y) * b.y; }

// Sign of the signed area of triangle (a, b, c); exact.
inline int orient(Point a, Point b, Point c) {
    Wide v = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// True iff q lies on the closed segment [a, b]; assumes collinearity is not required.
inline bool on_segment(Point a, Point b, Point q) {
    if (orient(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

struct Segment {
    Point a;
    Point b;
};

// Two segments "cross" iff they share a point that is not an endpoint of both.
// Collinear overlap beyond a single shared endpoint also counts.
inline bool segments_cross(const Segment& s, const Segment& t) {
    const Point a = s.a, b = s.b, c = t.a, d = t.b;
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);

    auto shared_endpoint = [&](Point p) {
        return (p == a || p == b) && (p == c || p == d);
    };

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;

    // Degenerate contacts: any incidence that is not a common endpoint is a crossing.
    if (o1 == 0 && on_segment(a, b, c) && !shared_endpoint(c)) return true;
    if (o2 == 0 && on_segment(a, b, d) && !shared_endpoint(d)) return true;
    if (o3 == 0 && on_segment(c, d, a) && !shared_endpoint(a)) return true;
    if (o4 == 0 && on_segment(c, d, b) && !shared_endpoint(b)) return true;

    // Touching at a shared endpoint: still a crossing when the segments overlap
    // collinearly past the shared point.
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        int contacts = 0;
        if (on_segment(a, b, c)) ++contacts;
        if (on_segment(a, b, d)) ++contacts;
        if (on_segment(c, d, a)) ++contacts;
        if (on_segment(c, d, b)) ++contacts;
        if (contacts > 2) return true;
    }
    return false;
}

// A direction d certifying that every edge vector of a path has strictly
// positive projection on it.
struct DirectionWitness {
    Vec dir;
};

namespace detail {

// Angular order over nonzero vectors: half-plane split, then exact cross test.
inline bool angle_less(Vec a, Vec b) {
    auto half = [](Vec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Wide c = cross(a, b);
    if (c != 0) return c > 0;
    return false;
}

inline Vec rot90ccw(Vec v) { return {-v.y, v.x}; }
inline Vec rot90cw(Vec v) { return {v.y, -v.x}; }

}  // namespace detail

// Finds an integer direction with strictly positive dot product against every
// input vector, or nullopt when the vectors do not fit in an open half-plane.
inline std::optional<DirectionWitness> open_halfplane_witness(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("open_halfplane_witness: no vectors");
    std::vector<Vec> dirs;
    dirs.reserve(vectors.size());
    for (Vec v : vectors) {
        if (v.x == 0 && v.y == 0) throw std::invalid_argument("open_halfplane_witness: zero vector");
        Coord g = std::gcd(v.x, v.y);
        dirs.push_back({v.x / g, v.y / g});
    }
    std::sort(dirs.begin(), dirs.end(), detail::angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    auto certify = [&](Vec d) -> std::optional<DirectionWitness> {
        for (Vec v : vectors)
            if (dot(v, d) <= 0) return std::nullopt;
        return DirectionWitness{d};
    };

    if (dirs.size() == 1) return certify(dirs.front());

    // The directions fit in an open half-plane iff some cyclic gap exceeds pi.
    // For consecutive sorted directions u -> w the ccw gap exceeds pi exactly
    // when cross(u, w) < 0 (cross == 0 with opposite dot is a gap of exactly pi).
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        Vec u = dirs[i];
        Vec w = dirs[(i + 1) % dirs.size()];
        if (cross(u, w) >= 0) continue;
        // Span runs ccw from w (first) to u (last); a strict interior direction
        // is the positive combination of the two open boundary normals.
        Vec d{detail::rot90cw(u).x + detail::rot90ccw(w).x,
              detail::rot90cw(u).y + detail::rot90ccw(w).y};
        return certify(d);
    }
    return std::nullopt;
}

// Monotonicity of a drawn path: strictly increasing projections on some line.
inline std::optional<DirectionWitness> is_path_monotone(const std::vector<Point>& points) {
    if (points.size() < 2) throw std::invalid_argument("is_path_monotone: need at least 2 points");
    std::vector<Vec> vecs;
    vecs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Point d = points[i] - points[i - 1];
        if (d.x == 0 && d.y == 0)
            throw std::invalid_argument("is_path_monotone: repeated consecutive point");
        vecs.push_back({d.x, d.y});
    }
    return open_halfplane_witness(vecs);
}

}  // namespace monodraw
