#pragma once

#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "plane_graph.hpp"

namespace monodraw {

// Rooted ordered spanning tree of a plane graph G_phi satisfying:
//   - no non-tree edge joins a vertex to a proper ancestor;
//   - around every non-root vertex, clockwise from the parent edge, the
//     incident edges split into consecutive runs X_v (non-tree, to
//     later-postorder subtrees), Y_v (tree), Z_v (non-tree, to
//     earlier-postorder subtrees).
// children[v] is in ccw rotation order: at the root starting with ref_child,
// elsewhere starting after the parent dart.
struct GoodSpanningTree {
    int n = 0;
    Vertex root = 0;
    Vertex ref_child = -1;
    std::vector<Vertex> parent;
    std::vector<int> level;
    std::vector<std::vector<Vertex>> children;
    std::set<std::uint64_t> tree_edge_set;
    std::vector<std::pair<Vertex, Vertex>> nontree_edges;

    bool is_tree_edge(Vertex u, Vertex v) const { return tree_edge_set.count(edge_key(u, v)) > 0; }

    bool is_ancestor(Vertex a, Vertex d) const {
        while (d != -1 && level[d] > level[a]) d = parent[d];
        return d == a;
    }

    Vertex lca(Vertex a, Vertex b) const {
        while (a != b) {
            if (level[a] < level[b]) std::swap(a, b);
            a = parent[a];
        }
        return a;
    }
};

// Counterclockwise postorder: subtrees in child order, vertex last; the
// reference child's subtree comes first, the root is final.
inline std::vector<Vertex> ccw_postorder(const GoodSpanningTree& t) {
    std::vector<Vertex> order;
    order.reserve(t.n);
    struct Frame {
        Vertex v;
        std::size_t next_child;
    };
    std::vector<Frame> stack{{t.root, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child < t.children[f.v].size()) {
            Vertex c = t.children[f.v][f.next_child++];
            stack.push_back({c, 0});
        } else {
            order.push_back(f.v);
            stack.pop_back();
        }
    }
    return order;
}

// 1-based postorder positions; position of the root is n.
inline std::vector<int> postorder_positions(const GoodSpanningTree& t) {
    std::vector<int> pos(t.n, 0);
    auto order = ccw_postorder(t);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i + 1;
    return pos;
}

struct EdgePartition {
    std::vector<Vertex> x;  // non-tree, later-postorder targets
    std::vector<Vertex> y;  // tree children
    std::vector<Vertex> z;  // non-tree, earlier-postorder targets
    bool well_formed = true;
};

// Reads the X/Y/Z partition of v's incident edges off the rotation of g_phi.
// ccw from the parent dart the pattern must be Z*, Y*, X*.
inline EdgePartition xyz_partition(const PlaneGraph& g, const GoodSpanningTree& t,
                                   const std::vector<int>& po, Vertex v) {
    EdgePartition part;
    if (v == t.root) {
        part.y = t.children[v];
        return part;
    }
    const auto& rot = g.rotation[v];
    auto it = std::find(rot.begin(), rot.end(), t.parent[v]);
    if (it == rot.end()) {
        part.well_formed = false;
        return part;
    }
    std::size_t pi = static_cast<std::size_t>(it - rot.begin());
    int state = 0;  // 0 = Z run, 1 = Y run, 2 = X run
    for (std::size_t k = 1; k < rot.size(); ++k) {
        Vertex w = rot[(pi + k) % rot.size()];
        bool tree = t.is_tree_edge(v, w);
        int cls;
        if (tree)
            cls = 1;
        else
            cls = po[w] < po[v] ? 0 : 2;
        if (cls < state) part.well_formed = false;
        state = std::max(state, cls);
        (cls == 0 ? part.z : cls == 1 ? part.y : part.x).push_back(w);
    }
    return part;
}

struct GoodTreeViolation {
    Vertex vertex;  // -1 for whole-tree conditions
    std::string condition;
    std::string detail;
};

struct GoodTreeReport {
    bool passed = true;         // the good-spanning-tree definition itself
    bool bfs_levels_ok = true;  // every edge spans at most one tree level
    std::vector<GoodTreeViolation> violations;

    void fail(Vertex v, std::string cond, std::string detail) {
        passed = false;
        violations.push_back({v, std::move(cond), std::move(detail)});
    }
};

struct GoodTreeOptions {
    std::optional<Vertex> root;
    std::optional<Vertex> ref_child;  // overrides the ccw-neighbor rule
};

struct BuildResult {
    PlaneGraph graph;  // G_phi: same abstract graph, possibly re-embedded
    GoodSpanningTree tree;
};

namespace detail {

class GoodTreeBuilder {
public:
    explicit GoodTreeBuilder(const PlaneGraph& g) : g_(g), n_(g.n) {
        rot_ = g.rotation;
        idx_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) idx_[v] = index_of(rot_[v]);
        parent_.assign(n_, -1);
        level_.assign(n_, -1);
        visited_.assign(n_, 0);
        mark_.assign(n_, 0);
        wxmark_.assign(n_, 0);
        wymark_.assign(n_, 0);
    }

    BuildResult run(const GoodTreeOptions& opt) {
        choose_root_and_ref(opt);
        visited_[root_] = 1;
        level_[root_] = 0;
        if (n_ == 1) return assemble();

        std::deque<Vertex> queue{root_};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : scan_order(u)) {
                char st = status(u, w);
                if (st == kTree)
                    throw std::logic_error("good tree: tree edge re-scanned");
                if (visited_[w]) {
                    if (st != kNonTree)
                        throw std::logic_error("good tree: unmarked edge between visited vertices");
                    continue;
                }
                if (st == kNonTree) continue;  // forced; w is reached elsewhere
                adopt(u, w);
                queue.push_back(w);
                for (Vertex t : back_edge_targets(w)) process_nontree_edge(w, t);
            }
        }
        for (Vertex v = 0; v < n_; ++v)
            if (!visited_[v])
                throw std::logic_error("good tree: vertex " + std::to_string(v) +
                                       " unreachable after BFS");
        return assemble();
    }

private:
    static constexpr char kUnmarked = 0, kTree = 1, kNonTree = 2;

    const PlaneGraph& g_;
    int n_;
    Vertex root_ = 0, ref_ = -1;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::unordered_map<Vertex, int>> idx_;
    std::unordered_map<std::uint64_t, char> status_;
    std::vector<Vertex> parent_;
    std::vector<int> level_;
    std::vector<char> visited_;
    std::vector<std::pair<Vertex, Vertex>> nontree_order_;

    std::vector<int> mark_;  // epoch marks for probe floods
    std::vector<int> wxmark_, wymark_;
    int epoch_ = 0;

    char status(Vertex u, Vertex v) const {
        auto it = status_.find(edge_key(u, v));
        return it == status_.end() ? kUnmarked : it->second;
    }
    void set_status(Vertex u, Vertex v, char s) { status_[edge_key(u, v)] = s; }

    void choose_root_and_ref(const GoodTreeOptions& opt) {
        FaceWalk walk = n_ > 1 ? outer_boundary(g_) : FaceWalk{};
        auto on_outer = [&](Vertex v) {
            for (const Dart& d : walk.darts)
                if (d.from == v) return true;
            return n_ == 1 && v == 0;
        };
        root_ = opt.root.value_or(n_ > 1 ? walk.darts.front().from : 0);
        if (!on_outer(root_))
            throw std::invalid_argument("good tree: root " + std::to_string(root_) +
                                        " is not an outer vertex");
        if (n_ == 1) {
            ref_ = -1;
            return;
        }
        if (opt.ref_child) {
            ref_ = *opt.ref_child;
            if (!g_.has_edge(root_, ref_))
                throw std::invalid_argument("good tree: reference child not adjacent to root");
            if (!on_outer(ref_))
                throw std::invalid_argument("good tree: reference child not an outer vertex");
            return;
        }
        // BFS-Start edge: the walk predecessor of r; an edge occurring twice in
        // the walk is a bridge, in which case any predecessor occurrence works,
        // so prefer a non-bridge one (then s is the ccw neighbor of r on an
        // outer cycle).
        std::map<std::uint64_t, int> edge_occurrences;
        for (const Dart& d : walk.darts) ++edge_occurrences[edge_key(d.from, d.to)];
        Vertex fallback = -1;
        for (const Dart& d : walk.darts) {
            if (d.to != root_) continue;
            if (fallback == -1) fallback = d.from;
            if (edge_occurrences[edge_key(d.from, d.to)] == 1) {
                ref_ = d.from;
                return;
            }
        }
        if (fallback == -1) throw std::logic_error("good tree: root not entered by outer walk");
        ref_ = fallback;
    }

    // Neighbors of u in ccw order: the root starts at the reference child,
    // everything else starts just after the parent dart.
    std::vector<Vertex> scan_order(Vertex u) const {
        const auto& rot = rot_[u];
        std::vector<Vertex> out;
        out.reserve(rot.size());
        if (rot.empty()) return out;
        if (u == root_) {
            int s = idx_[u].at(ref_);
            for (std::size_t k = 0; k < rot.size(); ++k) out.push_back(rot[(s + k) % rot.size()]);
        } else {
            int p = idx_[u].at(parent_[u]);
            for (std::size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(p + k) % rot.size()]);
        }
        return out;
    }

    void adopt(Vertex u, Vertex w) {
        set_status(u, w, kTree);
        parent_[w] = u;
        level_[w] = level_[u] + 1;
        visited_[w] = 1;
    }

    std::vector<Vertex> back_edge_targets(Vertex w) const {
        std::vector<Vertex> out;
        for (Vertex t : scan_order(w))
            if (visited_[t] && t != parent_[w] && status(w, t) != kTree) out.push_back(t);
        return out;
    }

    // Whether a precedes b in the counterclockwise postorder of the current
    // tree, decided at their lowest common ancestor. O(depth + deg(lca)).
    bool postorder_before(Vertex a, Vertex b) const {
        Vertex u = a, v = b;
        Vertex cu = -1, cv = -1;
        while (u != v) {
            if (level_[u] >= level_[v]) {
                cu = u;
                u = parent_[u];
            } else {
                cv = v;
                v = parent_[v];
            }
        }
        if (u == a) return false;  // a is an ancestor of b: postorder visits it later
        if (u == b) return true;
        for (Vertex w : scan_order(u)) {
            if (w == cu) return true;
            if (w == cv) return false;
        }
        throw std::logic_error("good tree: postorder comparison lost its anchors");
    }

    // Wedge of darts at v strictly between the parent dart and the dart to
    // `stop`, counterclockwise from the parent dart.
    std::vector<Vertex> wedge_after_parent(Vertex v, Vertex stop) const {
        const auto& rot = rot_[v];
        std::vector<Vertex> out;
        int p = idx_[v].at(parent_[v]);
        for (std::size_t k = 1; k < rot.size(); ++k) {
            Vertex w = rot[(p + k) % rot.size()];
            if (w == stop) return out;
            out.push_back(w);
        }
        throw std::logic_error("good tree: wedge scan never reached stop dart");
    }

    // Wedge at v strictly between the dart to `start` and the parent dart,
    // counterclockwise from `start` (equivalently clockwise from the parent).
    std::vector<Vertex> wedge_before_parent(Vertex v, Vertex start) const {
        const auto& rot = rot_[v];
        std::vector<Vertex> out;
        int s = idx_[v].at(start);
        for (std::size_t k = 1; k < rot.size(); ++k) {
            Vertex w = rot[(s + k) % rot.size()];
            if (w == parent_[v]) return out;
            out.push_back(w);
        }
        throw std::logic_error("good tree: wedge scan never reached parent dart");
    }

    // Handles one non-tree edge e = {a, b} (both endpoints visited): orients
    // it so x is the later endpoint in the current counterclockwise postorder,
    // relocates components that would otherwise be trapped in the forced
    // non-tree wedges, then marks the wedges non-tree (future Z_x and X_y).
    void process_nontree_edge(Vertex a, Vertex b) {
        if (status(a, b) != kNonTree) {
            set_status(a, b, kNonTree);
            nontree_order_.emplace_back(a, b);
        }
        // Both wedges are empty for either orientation only when both
        // endpoints carry nothing besides the parent dart and this edge.
        if (rot_[a].size() == 2 && rot_[b].size() == 2) return;
        Vertex x = postorder_before(a, b) ? b : a;
        Vertex y = x == a ? b : a;
        if (x == root_ || y == root_)
            throw std::logic_error("good tree: root became a non-tree endpoint");

        auto wx = wedge_after_parent(x, y);
        auto wy = wedge_before_parent(y, x);
        if (!wx.empty() || !wy.empty()) relocate_trapped(x, y, wx, wy);

        for (Vertex w : wedge_after_parent(x, y)) force_nontree(x, w);
        for (Vertex w : wedge_before_parent(y, x)) force_nontree(y, w);
    }

    void force_nontree(Vertex v, Vertex w) {
        char st = status(v, w);
        if (st == kTree)
            throw std::logic_error("good tree: wedge would force tree edge {" + std::to_string(v) +
                                   "," + std::to_string(w) + "} non-tree");
        if (st != kNonTree) {
            set_status(v, w, kNonTree);
            nontree_order_.emplace_back(v, w);
        }
    }

    // A component of G - {x, y} whose every access dart lies inside the two
    // wedges would be cut off once the wedges are marked; re-embed it next to
    // the edge (x, y): at x immediately ccw-after the y dart, at y immediately
    // ccw-before the x dart, preserving relative order. Probe floods abort as
    // soon as a contact outside the wedges (or the root) shows the component
    // is not trapped, so the common untrapped case stays cheap.
    void relocate_trapped(Vertex x, Vertex y, const std::vector<Vertex>& wx,
                          const std::vector<Vertex>& wy) {
        int wstamp = ++epoch_;
        for (Vertex c : wx) wxmark_[c] = wstamp;
        for (Vertex c : wy) wymark_[c] = wstamp;
        int taken = ++epoch_;
        int rejected = ++epoch_;
        bool any = false;

        auto consider = [&](Vertex c) {
            if (c == root_ || mark_[c] == taken || mark_[c] == rejected) return;
            int probe = ++epoch_;
            std::vector<Vertex> comp{c};
            mark_[c] = probe;
            bool trapped = true;
            for (std::size_t i = 0; i < comp.size() && trapped; ++i) {
                Vertex u = comp[i];
                for (Vertex w : rot_[u]) {
                    if (w == x) {
                        if (wxmark_[u] != wstamp) {
                            trapped = false;
                            break;
                        }
                        continue;
                    }
                    if (w == y) {
                        if (wymark_[u] != wstamp) {
                            trapped = false;
                            break;
                        }
                        continue;
                    }
                    if (w == root_) {
                        trapped = false;
                        break;
                    }
                    if (mark_[w] == probe || mark_[w] == taken) continue;
                    if (mark_[w] == rejected) {
                        trapped = false;
                        break;
                    }
                    mark_[w] = probe;
                    comp.push_back(w);
                }
            }
            int verdict = trapped ? taken : rejected;
            for (Vertex u : comp) mark_[u] = verdict;
            any |= trapped;
        };
        for (Vertex c : wx) consider(c);
        for (Vertex c : wy) consider(c);
        if (!any) return;

        splice_taken(x, y, taken, /*after=*/true);
        splice_taken(y, x, taken, /*after=*/false);
        idx_[x] = index_of(rot_[x]);
        idx_[y] = index_of(rot_[y]);
    }

    void splice_taken(Vertex at, Vertex anchor, int taken, bool after) {
        std::vector<Vertex> kept, block;
        kept.reserve(rot_[at].size());
        for (Vertex w : rot_[at]) (mark_[w] == taken ? block : kept).push_back(w);
        if (block.empty()) return;
        auto it = std::find(kept.begin(), kept.end(), anchor);
        if (it == kept.end()) throw std::logic_error("good tree: splice anchor missing");
        if (after) ++it;
        kept.insert(it, block.begin(), block.end());
        rot_[at] = std::move(kept);
    }

    BuildResult assemble() {
        GoodSpanningTree t;
        t.n = n_;
        t.root = root_;
        t.ref_child = ref_;
        t.parent = parent_;
        t.level = level_;
        t.children.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : scan_order(v))
                if (visited_[w] && parent_[w] == v) t.children[v].push_back(w);
        for (Vertex v = 0; v < n_; ++v)
            if (v != root_) t.tree_edge_set.insert(edge_key(v, parent_[v]));
        for (auto& e : nontree_order_) t.nontree_edges.push_back(e);

        PlaneGraph g_phi;
        g_phi.n = n_;
        g_phi.rotation = rot_;
        g_phi.outer = g_.outer;
        return {std::move(g_phi), std::move(t)};
    }
};

}  // namespace detail

// Re-embeds g into G_phi containing a good spanning tree rooted at an outer
// vertex, per counterclockwise BFS with component relocation and forced
// non-tree marking. Deterministic for fixed input and options.
inline BuildResult build_good_spanning_tree(const PlaneGraph& g, GoodTreeOptions opt = {}) {
    ValidationReport v = validate(g);
    if (!v.ok) {
        std::ostringstream os;
        os << "build_good_spanning_tree: invalid input:";
        for (const auto& p : v.problems) os << " " << p << ";";
        throw std::invalid_argument(os.str());
    }
    return detail::GoodTreeBuilder(g).run(opt);
}

struct VerifyTreeOptions {
    bool check_reference_rule = true;
};

inline GoodTreeReport verify_good_tree(const PlaneGraph& g, const GoodSpanningTree& t,
                                       VerifyTreeOptions opt = {}) {
    GoodTreeReport rep;
    if (t.n != g.n) {
        rep.fail(-1, "structure", "tree size mismatch");
        return rep;
    }

    // Spanning rooted tree shape.
    if (t.root < 0 || t.root >= t.n || t.parent[t.root] != -1) {
        rep.fail(t.root, "structure", "bad root");
        return rep;
    }
    for (Vertex v = 0; v < t.n; ++v) {
        if (v == t.root) continue;
        if (t.parent[v] < 0 || t.parent[v] >= t.n) {
            rep.fail(v, "structure", "missing parent");
            return rep;
        }
        if (!g.has_edge(v, t.parent[v])) rep.fail(v, "structure", "parent edge not in graph");
        if (t.level[v] != t.level[t.parent[v]] + 1)
            rep.fail(v, "structure", "level inconsistent with parent");
    }

    // Children order must be the rotation order anchored at parent/reference.
    for (Vertex v = 0; v < t.n; ++v) {
        const auto& rot = g.rotation[v];
        std::vector<Vertex> expect;
        if (!rot.empty()) {
            int anchor;
            if (v == t.root) {
                if (t.n > 1) {
                    auto it = std::find(rot.begin(), rot.end(), t.ref_child);
                    if (it == rot.end()) {
                        rep.fail(v, "reference", "reference child not adjacent to root");
                        continue;
                    }
                    anchor = static_cast<int>(it - rot.begin());
                    for (std::size_t k = 0; k < rot.size(); ++k) {
                        Vertex w = rot[(anchor + k) % rot.size()];
                        if (t.parent[w] == v) expect.push_back(w);
                    }
                }
            } else {
                auto it = std::find(rot.begin(), rot.end(), t.parent[v]);
                if (it != rot.end()) {
                    anchor = static_cast<int>(it - rot.begin());
                    for (std::size_t k = 1; k < rot.size(); ++k) {
                        Vertex w = rot[(anchor + k) % rot.size()];
                        if (t.parent[w] == v) expect.push_back(w);
                    }
                }
            }
        }
        if (expect != t.children[v]) rep.fail(v, "ordering", "children not in rotation order");
    }

    // Edge classification covers the graph.
    std::set<std::uint64_t> nontree_set;
    for (auto& e : t.nontree_edges) nontree_set.insert(edge_key(e.first, e.second));
    std::size_t tree_count = 0, nontree_count = 0;
    for (auto [u, w] : g.edges()) {
        bool tr = t.is_tree_edge(u, w);
        bool nt = nontree_set.count(edge_key(u, w)) > 0;
        if (tr == nt) rep.fail(u, "classification",
                               "edge {" + std::to_string(u) + "," + std::to_string(w) +
                                   "} not classified exactly once");
        tr ? ++tree_count : ++nontree_count;
        // BFS property: levels differ by at most one across any edge. Forced
        // non-tree marking can deepen a vertex past its BFS distance, so this
        // is tracked separately from the good-tree definition.
        if (std::abs(t.level[u] - t.level[w]) > 1) {
            rep.bfs_levels_ok = false;
            rep.violations.push_back({u, "bfs_level",
                                      "edge {" + std::to_string(u) + "," + std::to_string(w) +
                                          "} spans more than one tree level"});
        }
    }
    if (tree_count != static_cast<std::size_t>(t.n) - 1)
        rep.fail(-1, "structure", "tree edge count != n - 1");

    // Non-tree edges must join incomparable vertices.
    for (auto& e : t.nontree_edges) {
        if (t.is_ancestor(e.first, e.second) || t.is_ancestor(e.second, e.first))
            rep.fail(e.second, "ancestor-chord",
                     "non-tree edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} joins ancestor and descendant");
    }

    // Run structure: ccw from the parent dart the classes must
    // read Z* Y* X*, where Z edges point to earlier-postorder vertices and X
    // edges to later-postorder ones.
    auto po = postorder_positions(t);
    for (Vertex v = 0; v < t.n; ++v) {
        if (v == t.root) continue;
        EdgePartition part = xyz_partition(g, t, po, v);
        if (!part.well_formed)
            rep.fail(v, "edge-runs", "incident edges do not split into consecutive Z, Y, X runs");
    }

    if (opt.check_reference_rule && t.n > 1) {
        FaceWalk walk = outer_boundary(g);
        auto on_outer = [&](Vertex v) {
            for (const Dart& d : walk.darts)
                if (d.from == v) return true;
            return false;
        };
        if (!on_outer(t.root)) rep.fail(t.root, "reference", "root not on outer boundary");
        if (!on_outer(t.ref_child)) rep.fail(t.ref_child, "reference", "reference child not outer");
        // If r lies on an outer cycle (some incident outer edge is not a
        // bridge of the walk), s must be its ccw neighbor there, i.e. the
        // walk must contain the dart (s, r).
        std::map<std::uint64_t, int> occ;
        for (const Dart& d : walk.darts) ++occ[edge_key(d.from, d.to)];
        bool root_on_outer_cycle = false;
        for (const Dart& d : walk.darts)
            if ((d.from == t.root || d.to == t.root) && occ[edge_key(d.from, d.to)] == 1)
                root_on_outer_cycle = true;
        if (root_on_outer_cycle && !walk.contains(Dart{t.ref_child, t.root}))
            rep.fail(t.root, "reference", "reference child is not the ccw neighbor of the root");
    }
    return rep;
}

}  // namespace monodraw
