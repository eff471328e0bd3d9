#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace monodraw {

using Vertex = int;

struct Dart {
    Vertex from = -1;
    Vertex to = -1;

    friend bool operator==(const Dart& a, const Dart& b) { return a.from == b.from && a.to == b.to; }
    friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
    friend bool operator<(const Dart& a, const Dart& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    }
};

// Undirected edge key, order-insensitive.
inline std::uint64_t edge_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
}

// Combinatorial plane graph: counterclockwise rotation per vertex plus a
// designated dart whose traced face is the outer face. Inner faces trace
// counterclockwise, the outer face clockwise.
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<Vertex>> rotation;
    Dart outer;

    int edge_count() const {
        std::size_t d = 0;
        for (const auto& r : rotation) d += r.size();
        return static_cast<int>(d / 2);
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u < 0 || u >= n) return false;
        const auto& r = rotation[u];
        return std::find(r.begin(), r.end(), v) != r.end();
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : rotation[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

struct FaceWalk {
    std::vector<Dart> darts;

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs;
        vs.reserve(darts.size());
        for (const Dart& d : darts) vs.push_back(d.from);
        return vs;
    }
    bool contains(const Dart& d) const {
        return std::find(darts.begin(), darts.end(), d) != darts.end();
    }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};

struct Component {
    std::vector<Vertex> vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> attachments;
};

namespace detail {

// Neighbor -> rotation index lookup for one vertex.
inline std::unordered_map<Vertex, int> index_of(const std::vector<Vertex>& rot) {
    std::unordered_map<Vertex, int> idx;
    idx.reserve(rot.size() * 2);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) idx.emplace(rot[i], i);
    return idx;
}

}  // namespace detail

// Face-tracing successor: the dart after (u, v) is (v, w) where w immediately
// precedes u in rotation[v].
inline Dart face_next(const PlaneGraph& g, const Dart& d) {
    const auto& rot = g.rotation[d.to];
    auto it = std::find(rot.begin(), rot.end(), d.from);
    if (it == rot.end())
        throw std::invalid_argument("face_next: dart (" + std::to_string(d.from) + "," +
                                    std::to_string(d.to) + ") not in rotation");
    std::size_t i = static_cast<std::size_t>(it - rot.begin());
    Vertex w = rot[(i + rot.size() - 1) % rot.size()];
    return {d.to, w};
}

inline std::vector<FaceWalk> trace_faces(const PlaneGraph& g) {
    // Dart ids: offset[v] + index within rotation[v].
    std::vector<std::size_t> offset(g.n + 1, 0);
    for (Vertex v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + g.rotation[v].size();
    std::vector<std::unordered_map<Vertex, int>> idx(g.n);
    for (Vertex v = 0; v < g.n; ++v) idx[v] = detail::index_of(g.rotation[v]);

    auto dart_id = [&](const Dart& d) {
        auto it = idx[d.from].find(d.to);
        if (it == idx[d.from].end())
            throw std::invalid_argument("trace_faces: inconsistent rotation at dart (" +
                                        std::to_string(d.from) + "," + std::to_string(d.to) + ")");
        return offset[d.from] + static_cast<std::size_t>(it->second);
    };

    std::vector<char> seen(offset[g.n], 0);
    std::vector<FaceWalk> faces;
    for (Vertex v = 0; v < g.n; ++v) {
        for (Vertex w : g.rotation[v]) {
            Dart start{v, w};
            if (seen[dart_id(start)]) continue;
            FaceWalk walk;
            Dart d = start;
            do {
                std::size_t id = dart_id(d);
                if (seen[id])
                    throw std::invalid_argument("trace_faces: dart revisited, rotation inconsistent");
                seen[id] = 1;
                walk.darts.push_back(d);
                const auto& rot = g.rotation[d.to];
                auto it = idx[d.to].find(d.from);
                if (it == idx[d.to].end())
                    throw std::invalid_argument("trace_faces: dart (" + std::to_string(d.from) +
                                                "," + std::to_string(d.to) + ") has no reverse");
                int i = it->second;
                d = {d.to, rot[(i + rot.size() - 1) % rot.size()]};
            } while (d != start);
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

inline ValidationReport validate(const PlaneGraph& g) {
    ValidationReport rep;
    if (g.n < 1) {
        rep.fail("vertex count must be >= 1");
        return rep;
    }
    if (static_cast<int>(g.rotation.size()) != g.n) {
        rep.fail("rotation table size != n");
        return rep;
    }

    bool structure_ok = true;
    for (Vertex u = 0; u < g.n; ++u) {
        std::unordered_set<Vertex> seen;
        for (Vertex v : g.rotation[u]) {
            if (v < 0 || v >= g.n) {
                rep.fail("vertex " + std::to_string(u) + " lists out-of-range neighbor " +
                         std::to_string(v));
                structure_ok = false;
                continue;
            }
            if (v == u) {
                rep.fail("self-loop at vertex " + std::to_string(u));
                structure_ok = false;
            }
            if (!seen.insert(v).second) {
                rep.fail("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
                structure_ok = false;
            }
        }
    }
    if (structure_ok) {
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex v : g.rotation[u])
                if (!g.has_edge(v, u)) {
                    rep.fail("asymmetric adjacency: " + std::to_string(u) + " lists " +
                             std::to_string(v) + " but not vice versa");
                    structure_ok = false;
                }
    }
    if (!structure_ok) return rep;

    // Connectivity.
    std::vector<char> vis(g.n, 0);
    std::queue<Vertex> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.rotation[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    if (reached != g.n) rep.fail("graph is disconnected");

    // Outer dart exists.
    bool outer_ok = g.n == 1 ? g.outer.from == 0 || g.edge_count() == 0
                             : g.outer.from >= 0 && g.outer.from < g.n &&
                                   g.has_edge(g.outer.from, g.outer.to);
    if (g.n > 1 && !outer_ok) rep.fail("designated outer dart is not a dart of the graph");

    // Euler: n - m + f == 2 for a plane embedding of a connected graph.
    if (reached == g.n) {
        auto faces = trace_faces(g);
        long long f = static_cast<long long>(faces.size());
        if (g.n == 1) f = 1;  // single vertex, no darts: one face
        long long euler = static_cast<long long>(g.n) - g.edge_count() + f;
        if (euler != 2)
            rep.fail("Euler check failed: n - m + f = " + std::to_string(euler) +
                     " (f = " + std::to_string(f) + ")");
    }
    return rep;
}

inline FaceWalk outer_boundary(const PlaneGraph& g) {
    if (g.n == 1) return FaceWalk{};
    FaceWalk walk;
    Dart d = g.outer;
    if (!g.has_edge(d.from, d.to))
        throw std::invalid_argument("outer_boundary: designated outer dart missing");
    Dart start = d;
    do {
        walk.darts.push_back(d);
        d = face_next(g, d);
    } while (d != start);
    return walk;
}

inline std::set<Vertex> cut_vertices(const PlaneGraph& g) {
    std::set<Vertex> cut;
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    int timer = 0;
    // Iterative lowpoint DFS.
    struct Frame {
        Vertex u;
        Vertex parent;
        std::size_t next_i;
        int child_count;
    };
    for (Vertex root = 0; root < g.n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_i < g.rotation[f.u].size()) {
                Vertex v = g.rotation[f.u][f.next_i++];
                if (v == f.parent) continue;
                if (disc[v] != -1) {
                    low[f.u] = std::min(low[f.u], disc[v]);
                } else {
                    disc[v] = low[v] = timer++;
                    ++f.child_count;
                    stack.push_back({v, f.u, 0, 0});
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.u] = std::min(low[p.u], low[done.u]);
                    if (p.parent != -1 && low[done.u] >= disc[p.u]) cut.insert(p.u);
                }
                if (done.parent == -1 && done.child_count >= 2) cut.insert(done.u);
            }
        }
    }
    return cut;
}

namespace detail {

// Connected components of g with `banned` vertices removed; returns the
// component vertex sets.
inline std::vector<std::vector<Vertex>> components_without(const PlaneGraph& g,
                                                           const std::vector<Vertex>& banned) {
    std::vector<char> ban(g.n, 0), vis(g.n, 0);
    for (Vertex b : banned) ban[b] = 1;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < g.n; ++s) {
        if (ban[s] || vis[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex v : g.rotation[u])
                if (!ban[v] && !vis[v]) {
                    vis[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline Component make_component(const PlaneGraph& g, const std::vector<Vertex>& core,
                                const std::vector<Vertex>& anchors) {
    Component c;
    std::vector<char> in_core(g.n, 0);
    for (Vertex v : core) in_core[v] = 1;
    c.vertices = core;
    for (Vertex u : core)
        for (Vertex v : g.rotation[u])
            if (in_core[v] ? u < v : true) {
                bool anchor_end = !in_core[v];
                if (anchor_end && std::find(anchors.begin(), anchors.end(), v) == anchors.end())
                    continue;
                c.edges.emplace_back(std::min(u, v), std::max(u, v));
            }
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    for (Vertex a : anchors) {
        bool adjacent = false;
        for (Vertex u : core)
            if (g.has_edge(a, u)) {
                adjacent = true;
                break;
            }
        if (adjacent) {
            c.attachments.push_back(a);
            if (std::find(c.vertices.begin(), c.vertices.end(), a) == c.vertices.end())
                c.vertices.push_back(a);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    return c;
}

}  // namespace detail

inline std::vector<Component> v_components(const PlaneGraph& g, Vertex v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("v_components: bad vertex");
    std::vector<Component> out;
    for (auto& core : detail::components_without(g, {v}))
        out.push_back(detail::make_component(g, core, {v}));
    return out;
}

// Split components of the pair {u, v}: the edge (u, v) when present plus one
// component per connected piece of g - {u, v}. Empty when {u, v} is not a
// split pair (fewer than two edge-disjoint pieces).
inline std::vector<Component> split_components(const PlaneGraph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("split_components: u == v");
    std::vector<Component> out;
    if (g.has_edge(u, v)) {
        Component edge_comp;
        edge_comp.vertices = {std::min(u, v), std::max(u, v)};
        edge_comp.edges = {{std::min(u, v), std::max(u, v)}};
        edge_comp.attachments = {std::min(u, v), std::max(u, v)};
        out.push_back(std::move(edge_comp));
    }
    for (auto& core : detail::components_without(g, {u, v}))
        out.push_back(detail::make_component(g, core, {u, v}));
    if (out.size() < 2) return {};
    return out;
}

namespace detail {

struct CycleSides {
    std::vector<FaceWalk> faces;
    std::map<Dart, int> face_of;
    std::vector<char> outside;  // per face: on the outer-face side of the cycle
    std::set<std::uint64_t> cycle_edges;
};

inline CycleSides analyze_cycle_sides(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle analysis: not a cycle");
    CycleSides cs;
    std::vector<char> on_cycle(g.n, 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(a, b)) throw std::invalid_argument("cycle analysis: cycle edge missing");
        if (on_cycle[a]) throw std::invalid_argument("cycle analysis: cycle not simple");
        on_cycle[a] = 1;
        cs.cycle_edges.insert(edge_key(a, b));
    }

    cs.faces = trace_faces(g);
    for (int fi = 0; fi < static_cast<int>(cs.faces.size()); ++fi)
        for (const Dart& d : cs.faces[fi].darts) cs.face_of[d] = fi;

    // Flood face adjacency from the outer face, never stepping over a cycle edge.
    cs.outside.assign(cs.faces.size(), 0);
    std::queue<int> q;
    int outer_face = cs.face_of.at(g.outer);
    q.push(outer_face);
    cs.outside[outer_face] = 1;
    while (!q.empty()) {
        int fi = q.front();
        q.pop();
        for (const Dart& d : cs.faces[fi].darts) {
            if (cs.cycle_edges.count(edge_key(d.from, d.to))) continue;
            int fj = cs.face_of.at(Dart{d.to, d.from});
            if (!cs.outside[fj]) {
                cs.outside[fj] = 1;
                q.push(fj);
            }
        }
    }
    return cs;
}

}  // namespace detail

// The plane subgraph of g inside the simple cycle `cycle` (including the
// cycle): everything on the side of the cycle not containing the outer face.
inline Component subgraph_inside_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    detail::CycleSides cs = detail::analyze_cycle_sides(g, cycle);
    Component inside;
    std::set<Vertex> verts(cycle.begin(), cycle.end());
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : cs.cycle_edges) {
        Vertex a = Vertex(e >> 32), b = Vertex(e & 0xffffffffu);
        edges.insert({a, b});
    }
    for (int fi = 0; fi < static_cast<int>(cs.faces.size()); ++fi) {
        if (cs.outside[fi]) continue;
        for (const Dart& d : cs.faces[fi].darts) {
            verts.insert(d.from);
            if (!cs.cycle_edges.count(edge_key(d.from, d.to)))
                edges.insert({std::min(d.from, d.to), std::max(d.from, d.to)});
        }
    }
    inside.vertices.assign(verts.begin(), verts.end());
    inside.edges.assign(edges.begin(), edges.end());
    return inside;
}

namespace detail {

// Shared splice primitive: remove the darts at `at` pointing into `moved`,
// then reinsert them next to the dart (at -> anchor). `after` selects the
// ccw-after slot (used at the later-postorder endpoint) vs ccw-before.
inline void splice_darts(std::vector<Vertex>& rot, const std::vector<char>& moved, Vertex anchor,
                         bool after) {
    std::vector<Vertex> kept, block;
    kept.reserve(rot.size());
    for (Vertex w : rot)
        (moved[w] ? block : kept).push_back(w);
    if (block.empty()) return;
    auto it = std::find(kept.begin(), kept.end(), anchor);
    if (it == kept.end()) throw std::logic_error("splice_darts: anchor dart missing");
    if (after) ++it;
    kept.insert(it, block.begin(), block.end());
    rot = std::move(kept);
}

}  // namespace detail

// Moves a component lying inside `cycle`, attached only at one or two cycle
// vertices, to the other side of the cycle. `hug` is the cycle edge the
// component is re-embedded against: its darts land in the face bordering the
// hug edge on the outer side, immediately adjacent to the edge's darts and
// preserving their relative order. Pure: returns a new graph.
inline PlaneGraph move_component_outside(const PlaneGraph& g, const std::vector<Vertex>& cycle,
                                         const Component& h, const Dart& hug) {
    if (!g.has_edge(hug.from, hug.to))
        throw std::invalid_argument("move_component_outside: hug edge not in graph");
    bool hug_on_cycle = false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if ((a == hug.from && b == hug.to) || (a == hug.to && b == hug.from)) hug_on_cycle = true;
    }
    if (!hug_on_cycle) throw std::invalid_argument("move_component_outside: hug edge not on cycle");
    for (Vertex a : h.attachments)
        if (a != hug.from && a != hug.to)
            throw std::invalid_argument("move_component_outside: attachment not an endpoint of hug edge");

    detail::CycleSides cs = detail::analyze_cycle_sides(g, cycle);
    std::vector<char> inside(g.n, 0);
    for (int fi = 0; fi < static_cast<int>(cs.faces.size()); ++fi) {
        if (cs.outside[fi]) continue;
        for (const Dart& d : cs.faces[fi].darts) inside[d.from] = 1;
    }

    std::vector<char> moved(g.n, 0);
    bool any = false;
    for (Vertex v : h.vertices)
        if (std::find(h.attachments.begin(), h.attachments.end(), v) == h.attachments.end()) {
            if (!inside[v])
                throw std::invalid_argument("move_component_outside: component not inside cycle");
            moved[v] = 1;
            any = true;
        }

    PlaneGraph out = g;
    if (!any) return out;
    // The target face is the one bordering the hug edge on the outer side.
    // When face(from->to) is that face, a block inserted ccw-after the `to`
    // dart at `from` (and ccw-before the `from` dart at `to`) lands inside it;
    // otherwise the mirrored slots apply.
    Vertex x = hug.from, y = hug.to;
    if (!cs.outside[cs.face_of.at(Dart{x, y})]) std::swap(x, y);
    if (!cs.outside[cs.face_of.at(Dart{x, y})])
        throw std::invalid_argument("move_component_outside: hug edge has no outer-side face");
    detail::splice_darts(out.rotation[x], moved, y, /*after=*/true);
    detail::splice_darts(out.rotation[y], moved, x, /*after=*/false);
    return out;
}

}  // namespace monodraw
