#pragma once

#include <random>

#include "plane_graph.hpp"

namespace monodraw {

enum class GraphKind { Tree, Cycle, Wheel, MaximalPlanar, RandomPlanar };

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Tree: return "tree";
        case GraphKind::Cycle: return "cycle";
        case GraphKind::Wheel: return "wheel";
        case GraphKind::MaximalPlanar: return "maximal_planar";
        case GraphKind::RandomPlanar: return "random_planar";
    }
    return "?";
}

inline std::optional<GraphKind> kind_from_string(const std::string& s) {
    for (GraphKind k : {GraphKind::Tree, GraphKind::Cycle, GraphKind::Wheel,
                        GraphKind::MaximalPlanar, GraphKind::RandomPlanar})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

inline int min_size(GraphKind k) {
    switch (k) {
        case GraphKind::Tree: return 1;
        case GraphKind::Cycle: return 3;
        case GraphKind::Wheel: return 4;
        case GraphKind::MaximalPlanar: return 3;
        case GraphKind::RandomPlanar: return 3;
    }
    return 1;
}

namespace detail {

// Bounded uniform via rejection; mt19937_64 keeps output stable across
// standard libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline PlaneGraph random_tree(int n, std::mt19937_64& rng) {
    PlaneGraph g;
    g.n = n;
    g.rotation.resize(n);
    for (Vertex v = 1; v < n; ++v) {
        Vertex p = static_cast<Vertex>(uniform(rng, v));
        std::size_t slot = uniform(rng, g.rotation[p].size() + 1);
        g.rotation[p].insert(g.rotation[p].begin() + slot, v);
        g.rotation[v].push_back(p);
    }
    if (n > 1) g.outer = {0, g.rotation[0].front()};
    return g;
}

inline PlaneGraph cycle_graph(int n) {
    PlaneGraph g;
    g.n = n;
    g.rotation.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex next = (v + 1) % n, prev = (v + n - 1) % n;
        g.rotation[v] = {next, prev};
    }
    // With rotations [next, prev] the ccw inner face is 0,1,...,n-1; the
    // clockwise walk from (0, n-1) is the outer face.
    g.outer = {0, n - 1};
    return g;
}

inline PlaneGraph wheel_graph(int n) {
    PlaneGraph g;
    g.n = n;
    g.rotation.resize(n);
    int rim = n - 1;
    for (int i = 1; i <= rim; ++i) g.rotation[0].push_back(i);
    for (int i = 1; i <= rim; ++i) {
        Vertex next = i == rim ? 1 : i + 1;
        Vertex prev = i == 1 ? rim : i - 1;
        g.rotation[i] = {next, 0, prev};
    }
    g.outer = {1, rim};
    return g;
}

// Incremental triangulation: split a random inner triangular face with a new
// vertex joined to its three corners.
inline PlaneGraph maximal_planar(int n, std::mt19937_64& rng) {
    PlaneGraph g;
    g.n = n;
    g.rotation.resize(n);
    g.rotation[0] = {1, 2};
    g.rotation[1] = {2, 0};
    g.rotation[2] = {0, 1};
    g.outer = {1, 0};
    struct Tri {
        Vertex a, b, c;  // ccw corner order of an inner face
    };
    std::vector<Tri> faces{{0, 1, 2}};
    auto insert_after = [&](Vertex at, Vertex ref, Vertex nv) {
        auto& r = g.rotation[at];
        auto it = std::find(r.begin(), r.end(), ref);
        r.insert(it + 1, nv);
    };
    for (Vertex v = 3; v < n; ++v) {
        std::size_t fi = uniform(rng, faces.size());
        Tri f = faces[fi];
        // Corner wedges of the ccw face (a,b,c): at a between b and c, at b
        // between c and a, at c between a and b (each pair consecutive ccw).
        insert_after(f.a, f.b, v);
        insert_after(f.b, f.c, v);
        insert_after(f.c, f.a, v);
        g.rotation[v] = {f.a, f.b, f.c};
        faces[fi] = {f.a, f.b, v};
        faces.push_back({f.b, f.c, v});
        faces.push_back({f.c, f.a, v});
    }
    return g;
}

inline PlaneGraph random_planar(int n, std::mt19937_64& rng) {
    PlaneGraph g = maximal_planar(n, rng);
    if (n < 4) return g;
    // Keep a spanning tree plus the outer-dart edge; delete every other edge
    // independently, so connectivity and the outer designation survive.
    std::vector<char> keep_vertex(g.n, 0);
    std::set<std::uint64_t> protected_edges;
    protected_edges.insert(edge_key(g.outer.from, g.outer.to));
    std::deque<Vertex> q{0};
    keep_vertex[0] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : g.rotation[u])
            if (!keep_vertex[w]) {
                keep_vertex[w] = 1;
                protected_edges.insert(edge_key(u, w));
                q.push_back(w);
            }
    }
    std::uint64_t keep_percent = 20 + uniform(rng, 70);
    std::vector<std::pair<Vertex, Vertex>> to_delete;
    for (auto [u, v] : g.edges()) {
        if (protected_edges.count(edge_key(u, v))) continue;
        if (uniform(rng, 100) >= keep_percent) to_delete.emplace_back(u, v);
    }
    for (auto [u, v] : to_delete) {
        auto& ru = g.rotation[u];
        auto& rv = g.rotation[v];
        ru.erase(std::find(ru.begin(), ru.end(), v));
        rv.erase(std::find(rv.begin(), rv.end(), u));
    }
    return g;
}

}  // namespace detail

// Deterministic for fixed (kind, n, seed).
inline PlaneGraph generate(GraphKind kind, int n, std::uint64_t seed) {
    if (n < min_size(kind))
        throw std::invalid_argument(std::string("generate: ") + to_string(kind) +
                                    " needs n >= " + std::to_string(min_size(kind)));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    switch (kind) {
        case GraphKind::Tree: return detail::random_tree(n, rng);
        case GraphKind::Cycle: return detail::cycle_graph(n);
        case GraphKind::Wheel: return detail::wheel_graph(n);
        case GraphKind::MaximalPlanar: return detail::maximal_planar(n, rng);
        case GraphKind::RandomPlanar: return detail::random_planar(n, rng);
    }
    throw std::invalid_argument("generate: unknown kind");
}

}  // namespace monodraw
