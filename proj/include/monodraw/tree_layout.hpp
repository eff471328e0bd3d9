#pragma once

#include "geometry.hpp"
#include "good_tree.hpp"

namespace monodraw {

// Integer slope per non-root vertex: slope k stands for direction (1, k).
// The i-th vertex in counterclockwise postorder gets slope i, so the slope
// set is exactly {1, ..., n-1} and every subtree owns a contiguous block.
struct SlopeAssignment {
    std::vector<Coord> slope;  // slope[root] stays 0 and is never used

    Coord of(Vertex v) const { return slope[v]; }
};

struct GridDrawing {
    std::vector<Point> pos;

    Point of(Vertex v) const { return pos[v]; }
    Coord max_x() const {
        Coord m = 0;
        for (const Point& p : pos) m = std::max(m, p.x);
        return m;
    }
    Coord max_y() const {
        Coord m = 0;
        for (const Point& p : pos) m = std::max(m, p.y);
        return m;
    }
};

inline SlopeAssignment assign_slopes(const GoodSpanningTree& t) {
    SlopeAssignment s;
    s.slope.assign(t.n, 0);
    auto order = ccw_postorder(t);
    for (int i = 0; i + 1 < static_cast<int>(order.size()); ++i) s.slope[order[i]] = i + 1;
    return s;
}

// Counterclockwise preorder placement: root at the origin, every other vertex
// one x-step from its parent along its own slope.
inline GridDrawing draw_tree(const GoodSpanningTree& t, const SlopeAssignment& s) {
    GridDrawing d;
    d.pos.assign(t.n, Point{0, 0});
    std::vector<Vertex> stack{t.root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (v != t.root) {
            Point p = d.pos[t.parent[v]];
            d.pos[v] = {p.x + 1, p.y + s.of(v)};
        }
        const auto& kids = t.children[v];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return d;
}

namespace detail {

inline void shift_subtree(GridDrawing& d, const GoodSpanningTree& t, Vertex v, Coord dx, Coord dy) {
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        d.pos[u].x += dx;
        d.pos[u].y += dy;
        for (Vertex c : t.children[u]) stack.push_back(c);
    }
}

}  // namespace detail

// Lengthens the tree edge (parent(v), v) by `steps` x-units preserving its
// slope: the whole subtree T_v translates rigidly by steps * (1, slope(v)).
inline GridDrawing elongate_edge(const GridDrawing& d, const GoodSpanningTree& t,
                                 const SlopeAssignment& s, Vertex v, Coord steps) {
    if (v == t.root) throw std::invalid_argument("elongate_edge: cannot elongate above the root");
    if (steps < 0) throw std::invalid_argument("elongate_edge: negative steps");
    GridDrawing out = d;
    if (steps == 0) return out;
    detail::shift_subtree(out, t, v, steps, steps * s.of(v));
    return out;
}

}  // namespace monodraw
