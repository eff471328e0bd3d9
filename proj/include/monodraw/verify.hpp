#pragma once

#include <functional>
#include <map>

#include "tree_layout.hpp"

namespace monodraw {

struct CrossingPair {
    std::pair<Vertex, Vertex> e1;
    std::pair<Vertex, Vertex> e2;  // e2 = {v, -1} marks a vertex inside e1
};

struct BoundViolation {
    std::string quantity;
    Coord value;
    Coord bound;
};

struct VerificationReport {
    bool passed = true;
    std::vector<CrossingPair> crossing_pairs;
    std::vector<std::pair<Vertex, Vertex>> non_monotone_pairs;
    std::vector<BoundViolation> bound_violations;
    std::map<std::pair<Vertex, Vertex>, Vec> witness_directions;
    std::vector<std::string> notes;

    void finalize() {
        passed = crossing_pairs.empty() && non_monotone_pairs.empty() &&
                 bound_violations.empty() && notes.empty();
    }
};

// Unique tree path between two vertices, as drawn points.
inline std::vector<Vertex> tree_path(const GoodSpanningTree& t, Vertex a, Vertex b) {
    std::vector<Vertex> up, down;
    Vertex u = a, v = b;
    while (u != v) {
        if (t.level[u] >= t.level[v]) {
            up.push_back(u);
            u = t.parent[u];
        } else {
            down.push_back(v);
            v = t.parent[v];
        }
    }
    up.push_back(u);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

inline std::optional<DirectionWitness> check_tree_path_monotone(const GridDrawing& d,
                                                                const GoodSpanningTree& t, Vertex a,
                                                                Vertex b) {
    if (a == b) throw std::invalid_argument("check_tree_path_monotone: a == b");
    std::vector<Point> pts;
    for (Vertex v : tree_path(t, a, b)) pts.push_back(d.of(v));
    return is_path_monotone(pts);
}

// Exact pairwise crossing detection over all drawn edges, plus vertices lying
// in the interior of non-incident segments.
inline std::vector<CrossingPair> check_no_crossings(const GridDrawing& d, const PlaneGraph& g) {
    std::vector<CrossingPair> out;
    auto edges = g.edges();
    std::vector<Segment> segs;
    segs.reserve(edges.size());
    for (auto [u, v] : edges) segs.push_back({d.of(u), d.of(v)});
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (segments_cross(segs[i], segs[j])) out.push_back({edges[i], edges[j]});
    for (Vertex v = 0; v < g.n; ++v)
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (edges[i].first == v || edges[i].second == v) continue;
            Point p = d.of(v);
            if (p != segs[i].a && p != segs[i].b && on_segment(segs[i].a, segs[i].b, p))
                out.push_back({edges[i], {v, -1}});
        }
    return out;
}

struct BoundSpec {
    Coord width_bound = 0;
    Coord height_bound = 0;
};

// Explicit constants behind the O(n) x O(n^2) grid claim: width at most
// (n-1) + z and y within [0, (n-1) * ((n-1) + z)] where z = m - n + 1.
inline BoundSpec grid_bounds(int n, int m) {
    Coord z = m - n + 1;
    BoundSpec b;
    b.width_bound = (n - 1) + z;
    b.height_bound = Coord(n - 1) * b.width_bound;
    return b;
}

inline VerificationReport check_all_pairs(const GridDrawing& d, const PlaneGraph& g,
                                          const GoodSpanningTree& t) {
    VerificationReport rep;

    // Grid-point distinctness.
    {
        std::vector<Point> sorted = d.pos;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                rep.notes.push_back("coincident vertices at (" + std::to_string(sorted[i].x) + "," +
                                    std::to_string(sorted[i].y) + ")");
    }

    rep.crossing_pairs = check_no_crossings(d, g);

    for (Vertex a = 0; a < g.n; ++a)
        for (Vertex b = a + 1; b < g.n; ++b) {
            auto w = check_tree_path_monotone(d, t, a, b);
            if (w)
                rep.witness_directions[{a, b}] = w->dir;
            else
                rep.non_monotone_pairs.push_back({a, b});
        }

    BoundSpec bounds = grid_bounds(g.n, g.edge_count());
    Coord maxx = d.max_x(), maxy = d.max_y();
    Coord minx = 0, miny = 0;
    for (const Point& p : d.pos) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
    }
    if (minx < 0) rep.bound_violations.push_back({"min_x", minx, 0});
    if (miny < 0) rep.bound_violations.push_back({"min_y", miny, 0});
    if (maxx > bounds.width_bound)
        rep.bound_violations.push_back({"width", maxx, bounds.width_bound});
    if (maxy > bounds.height_bound)
        rep.bound_violations.push_back({"height", maxy, bounds.height_bound});

    rep.finalize();
    return rep;
}

// Brute-force oracle: does SOME simple path between a and b draw monotone?
// Exponential; guarded to small instances.
inline bool oracle_all_paths_monotone(const GridDrawing& d, const PlaneGraph& g, Vertex a,
                                      Vertex b) {
    if (g.n > 10) throw std::invalid_argument("oracle_all_paths_monotone: n > 10");
    std::vector<char> used(g.n, 0);
    std::vector<Vertex> path{a};
    used[a] = 1;
    bool found = false;
    std::function<void()> dfs = [&]() {
        if (found) return;
        Vertex u = path.back();
        if (u == b) {
            std::vector<Point> pts;
            for (Vertex v : path) pts.push_back(d.of(v));
            if (is_path_monotone(pts)) found = true;
            return;
        }
        for (Vertex w : g.rotation[u]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            used[w] = 0;
            if (found) return;
        }
    };
    dfs();
    return found;
}

}  // namespace monodraw
