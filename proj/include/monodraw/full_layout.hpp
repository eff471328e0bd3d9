#pragma once

#include "verify.hpp"

namespace monodraw {

struct InsertionItem {
    Vertex x = -1;  // earlier in ccw postorder
    Vertex y = -1;
    Vertex lca = -1;
};

struct InsertionPlan {
    std::vector<InsertionItem> order;
};

namespace detail {

// Insertion-order constraints on top of the peel order.
//
// Dominance: a chord must be drawn before any chord owning an endpoint
// strictly inside one of its endpoint subtrees, else a later elongation
// rotates the drawn chord across that subtree's interior. Peeling already
// forbids drawn chords enclosing a later chord's endpoints, so together no
// drawn chord ever gets pierced.
//
// Fan order: chords sharing an endpoint v on the same side (both Z_v or both
// X_v) pivot around their far anchors whenever v moves; they stay mutually
// clear only if drawn in run order starting next to the parent dart of v
// (ccw for the Z run, cw for the X run).
//
// Both relations together are acyclic for plane inputs (interleaved chords
// would cross in the embedding); a cycle indicates a broken tree and throws.

// Fenwick tree with range add and point query over Euler-tour positions.
class SubtreeCounter {
public:
    explicit SubtreeCounter(int n) : bit_(n + 1, 0) {}

    void add_range(int lo, int hi, int delta) {  // [lo, hi)
        add(lo, delta);
        add(hi, -delta);
    }
    int at(int i) const {
        int s = 0;
        for (int j = i + 1; j > 0; j -= j & -j) s += bit_[j];
        return s;
    }

private:
    void add(int i, int delta) {
        for (int j = i + 1; j < static_cast<int>(bit_.size()); j += j & -j) bit_[j] += delta;
    }
    std::vector<int> bit_;
};

inline void order_constraints_sort(const PlaneGraph& g_phi, const GoodSpanningTree& t,
                                   std::vector<InsertionItem>& order) {
    int k = static_cast<int>(order.size());
    if (k < 2) return;
    std::vector<int> tin(t.n), tout(t.n);
    {
        int timer = 0;
        struct Frame {
            Vertex v;
            std::size_t next;
        };
        std::vector<Frame> stack{{t.root, 0}};
        tin[t.root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < t.children[f.v].size()) {
                Vertex c = t.children[f.v][f.next++];
                tin[c] = timer++;
                stack.push_back({c, 0});
            } else {
                tout[f.v] = timer;
                stack.pop_back();
            }
        }
    }
    auto po = postorder_positions(t);

    // Fan chains. Per endpoint the run rank counts rotation steps from the
    // parent dart: ccw for Z-side chords, cw for X-side ones; consecutive
    // same-side chords at a vertex get explicit precedence edges.
    std::vector<std::vector<int>> fan_succ(k);
    std::vector<int> indeg_fan(k, 0);
    {
        struct Attachment {
            int side_rank;  // rank within its side's run
            bool x_side;
            int chord;
        };
        std::vector<std::vector<Attachment>> at(t.n);
        for (int i = 0; i < k; ++i) {
            at[order[i].x].push_back({0, false, i});
            at[order[i].y].push_back({0, false, i});
        }
        for (Vertex v = 0; v < t.n; ++v) {
            if (at[v].size() < 2) continue;
            const auto& rot = g_phi.rotation[v];
            int m = static_cast<int>(rot.size());
            int p = 0;
            for (int i = 0; i < m; ++i)
                if (rot[i] == t.parent[v]) p = i;
            std::unordered_map<Vertex, int> ccw_steps;
            for (int s = 1; s < m; ++s) ccw_steps[rot[(p + s) % m]] = s;
            for (auto& a : at[v]) {
                const InsertionItem& it = order[a.chord];
                Vertex partner = it.x == v ? it.y : it.x;
                a.x_side = po[partner] > po[v];
                int ccw = ccw_steps.at(partner);
                a.side_rank = a.x_side ? m - ccw : ccw;
            }
            std::sort(at[v].begin(), at[v].end(), [](const Attachment& a, const Attachment& b) {
                return a.x_side != b.x_side ? a.x_side < b.x_side : a.side_rank < b.side_rank;
            });
            for (std::size_t i = 1; i < at[v].size(); ++i)
                if (at[v][i - 1].x_side == at[v][i].x_side) {
                    fan_succ[at[v][i - 1].chord].push_back(at[v][i].chord);
                    ++indeg_fan[at[v][i].chord];
                }
        }
    }

    // Dominance handled as attachment tokens: a chord is ready once no
    // remaining chord attaches at a proper ancestor of either endpoint.
    SubtreeCounter tokens(t.n);
    std::vector<int> attach_active(t.n, 0);
    for (const auto& it : order)
        for (Vertex v : {it.x, it.y}) {
            tokens.add_range(tin[v], tout[v], 1);
            ++attach_active[v];
        }
    std::vector<int> indeg(k, 0);
    for (int e = 0; e < k; ++e) {
        for (Vertex v : {order[e].x, order[e].y})
            indeg[e] += tokens.at(tin[v]) - attach_active[v];
        indeg[e] += indeg_fan[e];
    }

    // Endpoint attachments bucketed by Euler position, so emitting a chord
    // notifies exactly the chords it dominated.
    std::vector<std::pair<int, int>> by_tin;  // (tin of endpoint, chord)
    by_tin.reserve(2 * k);
    for (int e = 0; e < k; ++e) {
        by_tin.push_back({tin[order[e].x], e});
        by_tin.push_back({tin[order[e].y], e});
    }
    std::sort(by_tin.begin(), by_tin.end());

    // Kahn, emitting the ready chord earliest in peel order.
    std::set<int> ready;
    for (int e = 0; e < k; ++e)
        if (indeg[e] == 0) ready.insert(e);
    std::vector<InsertionItem> out;
    out.reserve(k);
    while (!ready.empty()) {
        int f = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(order[f]);
        for (Vertex v : {order[f].x, order[f].y}) {
            auto lo = std::lower_bound(by_tin.begin(), by_tin.end(), std::pair<int, int>{tin[v] + 1, -1});
            auto hi = std::lower_bound(by_tin.begin(), by_tin.end(), std::pair<int, int>{tout[v], -1});
            for (auto it2 = lo; it2 != hi; ++it2)
                if (--indeg[it2->second] == 0) ready.insert(it2->second);
        }
        for (int s : fan_succ[f])
            if (--indeg[s] == 0) ready.insert(s);
    }
    if (static_cast<int>(out.size()) != k)
        throw std::logic_error("plan_insertions: cyclic chord ordering constraints");
    order = std::move(out);
}

}  // namespace detail

// Peeling order: repeatedly remove a non-tree edge lying on the outer
// boundary of the remaining embedding; the insertion order is the reverse
// (outermost edge drawn last, landing furthest right), refined by the
// ordering constraints above. Removing an outer edge merges its inner face
// into the outer walk, so the walk only grows; a lazy candidate queue of
// non-tree walk darts keeps the whole peel near-linear.
inline InsertionPlan plan_insertions(const PlaneGraph& g_phi, const GoodSpanningTree& t) {
    InsertionPlan plan;
    std::size_t remaining = t.nontree_edges.size();
    if (remaining == 0) return plan;

    // Rotations as circular doubly-linked dart slots; slot i at vertex v is
    // the dart (v, to[i]). face successor of dart s = (u, v): the slot of the
    // ccw-predecessor of u's reverse slot at v.
    int n = g_phi.n;
    std::vector<Vertex> from, to;
    std::vector<int> nxt, prv, rev;
    std::map<std::uint64_t, int> half;  // dart (u << 32 | v) -> slot
    for (Vertex u = 0; u < n; ++u) {
        int prev_slot = -1, head = -1;
        for (Vertex v : g_phi.rotation[u]) {
            int s = static_cast<int>(from.size());
            from.push_back(u);
            to.push_back(v);
            nxt.push_back(-1);
            prv.push_back(-1);
            rev.push_back(-1);
            half[(std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v)] = s;
            if (prev_slot != -1) {
                nxt[prev_slot] = s;
                prv[s] = prev_slot;
            } else {
                head = s;
            }
            prev_slot = s;
        }
        if (head != -1) {
            nxt[prev_slot] = head;
            prv[head] = prev_slot;
        }
    }
    for (int s = 0; s < static_cast<int>(from.size()); ++s)
        rev[s] = half.at((std::uint64_t(std::uint32_t(to[s])) << 32) | std::uint32_t(from[s]));
    auto face_succ = [&](int s) { return prv[rev[s]]; };

    std::set<std::uint64_t> nontree;
    for (auto& e : t.nontree_edges) nontree.insert(edge_key(e.first, e.second));
    auto po = postorder_positions(t);

    // Scan the outer walk from the designated dart; every peel picks the
    // first non-tree dart. Since the walk darts before the pick are tree
    // darts forever and the merged face splices in exactly at the pick, the
    // cursor never needs to back up: the choice sequence matches a rescan
    // from the outer dart each round at O(m + z) total cost.
    int cursor = half.at((std::uint64_t(std::uint32_t(g_phi.outer.from)) << 32) |
                         std::uint32_t(g_phi.outer.to));
    std::size_t stall = 0;

    std::vector<InsertionItem> removal;
    while (remaining > 0) {
        if (!nontree.count(edge_key(from[cursor], to[cursor]))) {
            cursor = face_succ(cursor);
            if (++stall > 2 * from.size())
                throw std::logic_error(
                    "plan_insertions: no outer non-tree edge although non-tree edges remain");
            continue;
        }
        stall = 0;
        int pick = cursor;
        int r = rev[pick];
        cursor = face_succ(r);  // first dart of the merged-in face
        nontree.erase(edge_key(from[pick], to[pick]));
        for (int s : {pick, r}) {
            nxt[prv[s]] = nxt[s];
            prv[nxt[s]] = prv[s];
        }

        InsertionItem item;
        Vertex a = from[pick], b = to[pick];
        item.x = po[a] < po[b] ? a : b;
        item.y = item.x == a ? b : a;
        item.lca = t.lca(a, b);
        removal.push_back(item);
        --remaining;
    }
    plan.order.assign(removal.rbegin(), removal.rend());
    detail::order_constraints_sort(g_phi, t, plan.order);
    return plan;
}

struct DrawOptions {
    bool debug_stepwise = false;  // re-verify planarity and monotonicity after every insertion
    // Chords go on the lowest clear grid line (which keeps the drawing inside
    // the (n-1)+z width bound) as long as the graph has at most this many
    // vertices; the placement checks behind that are quadratic-ish, so larger
    // graphs fall back to fresh rightmost lines, trading grid tightness for
    // near-linear drawing time.
    int compact_limit = 3000;
};

namespace detail {

// Incremental insertion state: the drawing plus per-segment column intervals,
// chord indices per vertex, and subtree slope blocks (contiguous by the slope
// assignment, so each dragged subtree occupies a cone anchored at its root).
class Inserter {
public:
    Inserter(const GoodSpanningTree& t, const SlopeAssignment& s, GridDrawing& d)
        : t_(t), s_(s), d_(d) {
        subtree_size_.assign(t.n, 1);
        auto order = ccw_postorder(t);
        for (Vertex v : order)
            if (v != t.root) subtree_size_[t.parent[v]] += subtree_size_[v];
        // Tree segments first (indexed by child vertex), chords appended.
        segs_.resize(t.n, {-1, -1});
        for (Vertex v = 0; v < t.n; ++v)
            if (v != t.root) segs_[v] = {t.parent[v], v};
        cmin_.assign(t.n, 0);
        cmax_.assign(t.n, 0);
        for (Vertex v = 0; v < t.n; ++v)
            if (v != t.root) refresh(v);
        chords_at_.resize(t.n);
        maxx_ = d.max_x();
    }

    Coord maxx() const { return maxx_; }

    // Places the chord (x, y) on the vertical line L; returns the ids of any
    // crossing segment pair, or nullopt on success. On failure the caller
    // must undo() before retrying. `thorough` enables the settled-drawing and
    // subtree-interior checks needed when L is not right of everything.
    std::optional<std::pair<int, int>> attempt(const InsertionItem& item, Coord L,
                                               bool thorough) {
        Coord oldx_x = d_.pos[item.x].x, oldx_y = d_.pos[item.y].x;
        sx_ = L - oldx_x;
        sy_ = L - oldx_y;
        shift(item.x, sx_);
        shift(item.y, sy_);
        if (d_.pos[item.x].y == d_.pos[item.y].y)
            throw std::logic_error("draw_graph: degenerate vertical segment");

        // Anything that moved relative to something else must be re-checked:
        // the new vertical, the two stretched parent rays (only their
        // extensions can meet previously clear segments), chords pivoting at
        // x or y, and the two dragged subtree interiors.
        struct Mover {
            int id;
            Coord fmin, fmax;  // column filter for pairing with settled segments
        };
        std::vector<Mover> movers;
        if (item.x != t_.root) movers.push_back({item.x, oldx_x, L});
        if (item.y != t_.root) movers.push_back({item.y, oldx_y, L});
        for (Vertex v : {item.x, item.y})
            for (int c : chords_at_[v]) movers.push_back({c, cmin_[c], cmax_[c]});
        int vertical = add_chord_seg(item);  // provisional
        movers.push_back({vertical, L, L});

        auto exact = [&](int a, int b) { return segments_cross(seg(a), seg(b)); };

        for (std::size_t i = 0; i < movers.size(); ++i)
            for (std::size_t j = i + 1; j < movers.size(); ++j) {
                if (cmin_[movers[i].id] > cmax_[movers[j].id] ||
                    cmin_[movers[j].id] > cmax_[movers[i].id])
                    continue;
                if (exact(movers[i].id, movers[j].id))
                    return std::make_pair(movers[i].id, movers[j].id);
            }
        if (!thorough) {
            pending_vertical_ = vertical;
            return std::nullopt;
        }

        // Movers against the settled drawing.
        for (int other = 0; other < static_cast<int>(segs_.size()) - 1; ++other) {
            if (segs_[other].first < 0) continue;
            int oc = shift_class(other, item);
            if (oc == 9) continue;  // a mover; handled above
            for (const Mover& m : movers) {
                if (m.id == other) continue;
                if (m.fmin > cmax_[other] || cmin_[other] > m.fmax) continue;
                if (shift_class(m.id, item) == oc) continue;
                if (exact(m.id, other)) return std::make_pair(m.id, other);
            }
            // Untouched segment versus the two dragged interiors.
            if (oc == 0 && cmax_[other] >= L) {
                for (Vertex root : {item.x, item.y}) {
                    if (!cone_may_hit(root, other)) continue;
                    auto hit = interior_scan(root, other);
                    if (hit) return hit;
                }
            }
        }

        // Movers against the dragged interiors (a subtree slides along its
        // own parent ray, so that pair stays clear by itself).
        for (const Mover& m : movers)
            for (Vertex root : {item.x, item.y}) {
                if (m.id == root) continue;
                auto [ma, mb] = segs_[m.id];
                if (in_subtree(root, ma) && in_subtree(root, mb)) continue;
                if (!cone_may_hit(root, m.id)) continue;
                auto hit = interior_scan(root, m.id);
                if (hit) return hit;
            }

        // The interiors against each other, unless their cones are separated.
        if (!cones_disjoint(item)) {
            auto hit = interior_pair_scan(item);
            if (hit) return hit;
        }
        pending_vertical_ = vertical;
        return std::nullopt;
    }

    void commit(const InsertionItem& item) {
        chords_at_[item.x].push_back(pending_vertical_);
        chords_at_[item.y].push_back(pending_vertical_);
        maxx_ = std::max(maxx_, std::max(subtree_right(item.x), subtree_right(item.y)));
    }

    void undo(const InsertionItem& item) {
        segs_.pop_back();
        cmin_.pop_back();
        cmax_.pop_back();
        shift(item.x, -sx_);
        shift(item.y, -sy_);
    }

    std::pair<Vertex, Vertex> seg_vertices(int id) const { return segs_[id]; }

    Segment seg(int id) const { return {d_.of(segs_[id].first), d_.of(segs_[id].second)}; }

private:
    const GoodSpanningTree& t_;
    const SlopeAssignment& s_;
    GridDrawing& d_;
    std::vector<int> subtree_size_;
    std::vector<std::pair<Vertex, Vertex>> segs_;
    std::vector<Coord> cmin_, cmax_;
    std::vector<std::vector<int>> chords_at_;
    Coord maxx_ = 0, sx_ = 0, sy_ = 0;
    int pending_vertical_ = -1;

    void refresh(int id) {
        cmin_[id] = std::min(d_.of(segs_[id].first).x, d_.of(segs_[id].second).x);
        cmax_[id] = std::max(d_.of(segs_[id].first).x, d_.of(segs_[id].second).x);
    }

    int add_chord_seg(const InsertionItem& item) {
        segs_.push_back({item.x, item.y});
        cmin_.push_back(0);
        cmax_.push_back(0);
        int id = static_cast<int>(segs_.size()) - 1;
        refresh(id);
        return id;
    }

    void shift(Vertex root, Coord sh) {
        Coord dy = sh * s_.of(root);
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            d_.pos[u].x += sh;
            d_.pos[u].y += dy;
            if (u != t_.root) refresh(u);
            for (Vertex c : t_.children[u]) stack.push_back(c);
        }
        for (int c : chords_at_[root]) refresh(c);
    }

    bool in_subtree(Vertex root, Vertex q) const {
        Coord lo = s_.of(root) - subtree_size_[root] + 1;
        return root == t_.root || (q != t_.root && s_.of(q) >= lo && s_.of(q) <= s_.of(root));
    }

    // 0 = untouched, 1 = rigid inside T_x, 2 = rigid inside T_y, 9 = boundary
    // (rays, pivots, the vertical): boundary segments always get exact tests.
    int shift_class(int id, const InsertionItem& item) const {
        auto [a, b] = segs_[id];
        int ca = in_subtree(item.x, a) ? 1 : in_subtree(item.y, a) ? 2 : 0;
        int cb = in_subtree(item.x, b) ? 1 : in_subtree(item.y, b) ? 2 : 0;
        if (ca != cb) return 9;
        return ca;
    }

    Coord subtree_right(Vertex root) const {
        Coord r = d_.of(root).x;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            r = std::max(r, d_.of(u).x);
            for (Vertex c : t_.children[u]) stack.push_back(c);
        }
        return r;
    }

    // Slope blocks are contiguous, ordered by postorder, so the two dragged
    // subtrees live in cones anchored at the vertical's endpoints. When the
    // lower endpoint's cone tops out below the upper cone's floor the
    // interiors cannot meet.
    bool cones_disjoint(const InsertionItem& item) const {
        Vertex lower = d_.of(item.x).y < d_.of(item.y).y ? item.x : item.y;
        Vertex upper = lower == item.x ? item.y : item.x;
        return s_.of(lower) < s_.of(upper) - subtree_size_[upper] + 1;
    }

    bool cone_may_hit(Vertex root, int id) const {
        Point apex = d_.of(root);
        Coord hi = s_.of(root), lo = hi - subtree_size_[root] + 1;
        auto above = [&](Point p) { return Wide(p.y - apex.y) > Wide(hi) * (p.x - apex.x); };
        auto below = [&](Point p) { return Wide(p.y - apex.y) < Wide(lo) * (p.x - apex.x); };
        Point a = d_.of(segs_[id].first), b = d_.of(segs_[id].second);
        if (a.x <= apex.x && b.x <= apex.x) return false;
        if (above(a) && above(b)) return false;
        if (below(a) && below(b)) return false;
        return true;
    }

    std::optional<std::pair<int, int>> interior_scan(Vertex root, int other) {
        Segment so = seg(other);
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (u != root && u != t_.root) {
                if (!(cmin_[u] > cmax_[other] || cmin_[other] > cmax_[u]) &&
                    segments_cross(seg(u), so))
                    return std::make_pair(int(u), other);
            }
            for (Vertex c : t_.children[u]) stack.push_back(c);
        }
        return std::nullopt;
    }

    std::optional<std::pair<int, int>> interior_pair_scan(const InsertionItem& item) {
        std::vector<int> xs, ys;
        auto collect = [&](Vertex root, std::vector<int>& out) {
            std::vector<Vertex> stack{root};
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                if (u != root) out.push_back(u);
                for (Vertex c : t_.children[u]) stack.push_back(c);
            }
        };
        collect(item.x, xs);
        collect(item.y, ys);
        for (int a : xs)
            for (int b : ys)
                if (!(cmin_[a] > cmax_[b] || cmin_[b] > cmax_[a]) && segments_cross(seg(a), seg(b)))
                    return std::make_pair(a, b);
        return std::nullopt;
    }
};

}  // namespace detail

// Draws G_phi: the tree via Draw-Monotone-Tree, then every planned non-tree
// edge as a vertical segment, elongating the two endpoint parent edges so
// both endpoints reach the segment's grid line. Each chord first tries the
// lowest line past the previous lines and its endpoints (this is what keeps
// the grid inside the (n-1)+z width bound); the placement is validated
// against everything that moved, and on a conflict the chord falls back to a
// fresh line right of the whole drawing, which restores the disjoint-columns
// argument. A conflict surviving the fallback throws with the offending pair.
inline GridDrawing draw_graph(const PlaneGraph& g_phi, const GoodSpanningTree& t,
                              DrawOptions opt = {}) {
    SlopeAssignment slopes = assign_slopes(t);
    GridDrawing d = draw_tree(t, slopes);
    if (t.nontree_edges.empty()) return d;

    InsertionPlan plan = plan_insertions(g_phi, t);
    detail::Inserter ins(t, slopes, d);

    auto cross_error = [&](std::pair<int, int> ids, const InsertionItem& item) {
        auto a = ins.seg_vertices(ids.first), b = ins.seg_vertices(ids.second);
        throw std::logic_error("draw_graph: crossing between {" + std::to_string(a.first) + "," +
                               std::to_string(a.second) + "} and {" + std::to_string(b.first) +
                               "," + std::to_string(b.second) + "} after inserting {" +
                               std::to_string(item.x) + "," + std::to_string(item.y) + "}");
    };

    bool compact_mode = g_phi.n <= opt.compact_limit;
    Coord prev_line = 0;
    std::vector<std::pair<Vertex, Vertex>> inserted;
    for (const InsertionItem& item : plan.order) {
        Coord line;
        std::optional<std::pair<int, int>> hit;
        if (compact_mode) {
            line = std::max({prev_line, d.pos[item.x].x, d.pos[item.y].x}) + 1;
            hit = ins.attempt(item, line, /*thorough=*/true);
            if (hit) {
                ins.undo(item);
                line = ins.maxx() + 1;
                hit = ins.attempt(item, line, /*thorough=*/true);
            }
        } else {
            line = ins.maxx() + 1;
            hit = ins.attempt(item, line, /*thorough=*/false);
        }
        if (hit) cross_error(*hit, item);
        ins.commit(item);
        prev_line = line;
        inserted.push_back({item.x, item.y});

        if (opt.debug_stepwise) {
            std::vector<std::pair<Vertex, Vertex>> all = inserted;
            for (Vertex v = 0; v < t.n; ++v)
                if (v != t.root) all.emplace_back(t.parent[v], v);
            auto seg_of = [&](std::pair<Vertex, Vertex> e) {
                return Segment{d.of(e.first), d.of(e.second)};
            };
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i + 1; j < all.size(); ++j)
                    if (segments_cross(seg_of(all[i]), seg_of(all[j])))
                        throw std::logic_error(
                            "draw_graph: stepwise re-check found a crossing after inserting {" +
                            std::to_string(item.x) + "," + std::to_string(item.y) + "}");
            for (Vertex a = 0; a < t.n; ++a)
                for (Vertex b = a + 1; b < t.n; ++b)
                    if (!check_tree_path_monotone(d, t, a, b))
                        throw std::logic_error("draw_graph: monotonicity lost at pair (" +
                                               std::to_string(a) + "," + std::to_string(b) +
                                               ") after inserting {" + std::to_string(item.x) +
                                               "," + std::to_string(item.y) + "}");
        }
    }
    return d;
}

}  // namespace monodraw
