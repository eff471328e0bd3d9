// Acceptance suite: runs every advertised guarantee end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <monodraw/full_layout.hpp>
#include <monodraw/generate.hpp>
#include <monodraw/io.hpp>
#include <monodraw/verify.hpp>

using namespace monodraw;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Corpus {
    std::vector<PlaneGraph> graphs;
    std::vector<BuildResult> built;
    std::vector<GridDrawing> drawings;
};

Corpus make_corpus(int count, int max_n, std::uint64_t seed0) {
    Corpus c;
    std::mt19937_64 rng(seed0);
    const GraphKind kinds[] = {GraphKind::Tree, GraphKind::Cycle, GraphKind::Wheel,
                               GraphKind::RandomPlanar, GraphKind::MaximalPlanar};
    for (int i = 0; i < count; ++i) {
        GraphKind kind = kinds[i % 5];
        int lo = min_size(kind);
        int n = lo + int(rng() % std::uint64_t(max_n - lo + 1));
        c.graphs.push_back(generate(kind, n, rng()));
        c.built.push_back(build_good_spanning_tree(c.graphs.back()));
        c.drawings.push_back(draw_graph(c.built.back().graph, c.built.back().tree));
    }
    return c;
}

bool all_pairs_monotone_with_witness(const GridDrawing& d, const GoodSpanningTree& t) {
    for (Vertex a = 0; a < t.n; ++a)
        for (Vertex b = a + 1; b < t.n; ++b) {
            auto w = check_tree_path_monotone(d, t, a, b);
            if (!w) return false;
            // Certify the witness independently.
            auto path = tree_path(t, a, b);
            for (std::size_t i = 1; i < path.size(); ++i) {
                Point delta = d.of(path[i]) - d.of(path[i - 1]);
                if (dot(w->dir, Vec{delta.x, delta.y}) <= 0) return false;
            }
        }
    return true;
}

bool distinct_grid_positions(const GridDrawing& d) {
    auto pos = d.pos;
    std::sort(pos.begin(), pos.end(),
              [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i] == pos[i - 1]) return false;
    return true;
}

struct TreeClauseCounts {
    int bad_tree = 0;
    int bad_levels = 0;
};

TreeClauseCounts criteria_1_and_2(const Corpus& corpus) {
    auto start = Clock::now();
    int bad_pipeline = 0, bad_bounds = 0;
    TreeClauseCounts tc;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        const auto& g_phi = corpus.built[i].graph;
        const auto& t = corpus.built[i].tree;
        const auto& d = corpus.drawings[i];

        bool ok = distinct_grid_positions(d) && check_no_crossings(d, g_phi).empty() &&
                  all_pairs_monotone_with_witness(d, t);
        if (!ok) ++bad_pipeline;

        BoundSpec b = grid_bounds(g_phi.n, g_phi.edge_count());
        bool bounds_ok = d.max_x() <= b.width_bound && d.max_y() <= b.height_bound;
        for (const Point& p : d.pos) bounds_ok &= p.x >= 0 && p.y >= 0;
        if (!bounds_ok) ++bad_bounds;

        auto rep = verify_good_tree(g_phi, t);
        if (!rep.passed) ++tc.bad_tree;
        if (!rep.bfs_levels_ok) ++tc.bad_levels;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu graphs, %d failures, %.1fs", corpus.graphs.size(),
                  bad_pipeline, seconds_since(start));
    report(1, "end-to-end draw+verify (distinct, crossing-free, monotone)", bad_pipeline == 0, buf);

    std::snprintf(buf, sizeof buf, "%d drawings exceed width <= (n-1)+z or height bound",
                  bad_bounds);
    report(2, "grid bounds width <= (n-1)+z, 0 <= y <= (n-1)((n-1)+z)", bad_bounds == 0, buf);
    return tc;
}

void criterion_4(const TreeClauseCounts& tc) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "definition failures: %d, BFS-level failures: %d", tc.bad_tree,
                  tc.bad_levels);
    report(4, "good-tree verifier round-trip + BFS level condition",
           tc.bad_tree == 0 && tc.bad_levels == 0, buf);
}

void criterion_3() {
    auto start = Clock::now();
    std::mt19937_64 rng(777);
    int checked = 0, bad = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 3 + int(rng() % 7);  // 3..9
        auto g = generate(GraphKind::RandomPlanar, n, rng());
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto d = draw_graph(g_phi, t);
        for (Vertex a = 0; a < g.n; ++a)
            for (Vertex b = a + 1; b < g.n; ++b) {
                ++checked;
                if (!oracle_all_paths_monotone(d, g_phi, a, b)) ++bad;
            }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "200 graphs, %d pairs, %d without a monotone path, %.1fs",
                  checked, bad, seconds_since(start));
    report(3, "brute-force all-simple-paths oracle on n <= 9", bad == 0, buf);
}

void criterion_5() {
    auto start = Clock::now();
    std::mt19937_64 rng(4242);
    int tree_trials_bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 2 + int(rng() % 15);
        auto g = generate(GraphKind::Tree, n, rng());
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto s = assign_slopes(t);
        auto d = draw_tree(t, s);
        Vertex v;
        do {
            v = int(rng() % n);
        } while (v == t.root);
        auto e = elongate_edge(d, t, s, v, Coord(rng() % 8));
        if (!check_no_crossings(e, g_phi).empty() || !all_pairs_monotone_with_witness(e, t))
            ++tree_trials_bad;
    }

    int chord_trials = 0, chord_trials_bad = 0;
    std::uint64_t attempts = 0;
    auto po_cache = std::vector<int>{};
    while (chord_trials < 1000 && attempts < 40000) {
        ++attempts;
        int n = 5 + int(rng() % 12);
        auto g = generate(GraphKind::RandomPlanar, n, rng());
        auto [g_phi, t] = build_good_spanning_tree(g);
        if (t.nontree_edges.empty()) continue;
        auto s = assign_slopes(t);
        auto d = draw_tree(t, s);
        auto po = postorder_positions(t);
        // Pick a vertex with a nonempty X/Z set.
        std::vector<Vertex> candidates;
        for (Vertex v = 0; v < t.n; ++v) {
            if (v == t.root) continue;
            auto part = xyz_partition(g_phi, t, po, v);
            if (!part.x.empty() || !part.z.empty()) candidates.push_back(v);
        }
        if (candidates.empty()) continue;
        Vertex v = candidates[rng() % candidates.size()];
        auto part = xyz_partition(g_phi, t, po, v);
        std::vector<std::pair<Vertex, Vertex>> xz_segments;
        for (Vertex w : part.x)
            if (rng() % 2) xz_segments.push_back({v, w});
        for (Vertex w : part.z)
            if (rng() % 2) xz_segments.push_back({v, w});
        if (xz_segments.empty()) continue;

        // Premise: the chosen X/Z edges are drawn without crossings already.
        auto segments_clean = [&](const GridDrawing& dd) {
            std::vector<std::pair<Vertex, Vertex>> segs;
            for (Vertex u = 0; u < t.n; ++u)
                if (u != t.root) segs.push_back({t.parent[u], u});
            segs.insert(segs.end(), xz_segments.begin(), xz_segments.end());
            for (std::size_t i = 0; i < segs.size(); ++i)
                for (std::size_t j = i + 1; j < segs.size(); ++j)
                    if (segments_cross({dd.of(segs[i].first), dd.of(segs[i].second)},
                                       {dd.of(segs[j].first), dd.of(segs[j].second)}))
                        return false;
            return true;
        };
        if (!segments_clean(d)) continue;

        ++chord_trials;
        auto e = elongate_edge(d, t, s, v, 1 + Coord(rng() % 6));
        if (!segments_clean(e) || !all_pairs_monotone_with_witness(e, t)) ++chord_trials_bad;
    }

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "tree-only: 10000 trials, %d failures; with chords: %d trials, %d failures; %.1fs",
                  tree_trials_bad, chord_trials, chord_trials_bad, seconds_since(start));
    report(5, "elongation preserves planarity and monotonicity",
           tree_trials_bad == 0 && chord_trials_bad == 0 && chord_trials >= 1000, buf);
}

void criterion_6() {
    std::vector<std::vector<Vertex>> rot(16);
    rot[0] = {1, 2, 3};
    rot[1] = {0, 4};
    rot[2] = {0, 5, 11};
    rot[3] = {0, 11, 12, 9, 4};
    rot[4] = {1, 3, 7, 10, 5};
    rot[5] = {2, 4, 6};
    rot[6] = {5, 10};
    rot[7] = {4, 8};
    rot[8] = {7, 9};
    rot[9] = {8, 3};
    rot[10] = {4, 15, 6};
    rot[11] = {2, 3};
    rot[12] = {3, 13};
    rot[13] = {12};
    rot[14] = {15};
    rot[15] = {10, 14};
    PlaneGraph g;
    g.n = 16;
    g.rotation = rot;
    g.outer = {0, 1};

    bool ok = validate(g).ok;
    std::string detail;
    if (ok) {
        auto [g_phi, t] = build_good_spanning_tree(g, {.root = 0, .ref_child = 1});
        std::set<std::uint64_t> nontree;
        for (auto& e : t.nontree_edges) nontree.insert(edge_key(e.first, e.second));
        std::set<std::uint64_t> expect{edge_key(4, 3), edge_key(3, 11), edge_key(4, 10),
                                       edge_key(4, 5), edge_key(8, 7)};
        bool classification = nontree == expect;
        bool relocated = g_phi.rotation[3] == std::vector<Vertex>{0, 11, 4, 12, 9} &&
                         g_phi.rotation[4] == std::vector<Vertex>{1, 7, 3, 10, 5};
        bool good = verify_good_tree(g_phi, t, {.check_reference_rule = false}).passed;
        auto d = draw_graph(g_phi, t);
        bool drawing_ok = check_no_crossings(d, g_phi).empty() &&
                          all_pairs_monotone_with_witness(d, t);
        ok = classification && relocated && good && drawing_ok;
        detail = std::string("classification ") + (classification ? "ok" : "BAD") +
                 ", relocation " + (relocated ? "ok" : "BAD") + ", conditions " +
                 (good ? "ok" : "BAD") + ", drawing " + (drawing_ok ? "ok" : "BAD");
    }
    report(6, "sixteen-vertex construction walkthrough fixture", ok, detail);
}

void criterion_7() {
    char buf[200];
    std::string table;
    double t10k = 0;
    for (int n : {1000, 2000, 5000, 10000}) {
        auto g = generate(GraphKind::RandomPlanar, n, 31337);
        auto start = Clock::now();
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto d = draw_graph(g_phi, t);
        double secs = seconds_since(start);
        if (n == 10000) t10k = secs;
        std::snprintf(buf, sizeof buf, "n=%d m=%d: %.2fs (max_x=%lld); ", n, g.edge_count(), secs,
                      static_cast<long long>(d.max_x()));
        table += buf;
    }
    report(7, "draw on n = 10000 random planar below 5s", t10k < 5.0, table);
}

}  // namespace

int main() {
    auto corpus = make_corpus(1000, 200, 20240601);
    auto tree_clauses = criteria_1_and_2(corpus);
    criterion_3();
    criterion_4(tree_clauses);
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
