#include <catch2/catch.hpp>

#include <random>

#include <monodraw/generate.hpp>
#include <monodraw/tree_layout.hpp>
#include <monodraw/verify.hpp>

#include "test_helpers.hpp"

using namespace monodraw;
using namespace testing_helpers;

TEST_CASE("slope assignment follows counterclockwise postorder") {
    SECTION("chain 0-1-2: postorder [2,1,0]") {
        auto [g_phi, t] = build_good_spanning_tree(path3(), {.root = 0});
        auto s = assign_slopes(t);
        CHECK(s.of(2) == 1);
        CHECK(s.of(1) == 2);
    }
    SECTION("single vertex: no slopes") {
        PlaneGraph g;
        g.n = 1;
        g.rotation = {{}};
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto s = assign_slopes(t);
        CHECK(s.slope == std::vector<Coord>{0});
    }
    SECTION("slopes are exactly 1..n-1, one each") {
        for (std::uint64_t seed : {5ull, 6ull, 7ull}) {
            auto g = generate(GraphKind::Tree, 23, seed);
            auto [g_phi, t] = build_good_spanning_tree(g);
            auto s = assign_slopes(t);
            std::vector<Coord> used;
            for (Vertex v = 0; v < t.n; ++v)
                if (v != t.root) used.push_back(s.of(v));
            std::sort(used.begin(), used.end());
            std::vector<Coord> expect;
            for (Coord k = 1; k < t.n; ++k) expect.push_back(k);
            CHECK(used == expect);
        }
    }
    SECTION("every subtree owns a contiguous slope interval, siblings ordered ccw") {
        auto g = generate(GraphKind::Tree, 31, 42);
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto s = assign_slopes(t);
        for (Vertex v = 0; v < t.n; ++v) {
            Coord prev_max = 0;
            for (Vertex c : t.children[v]) {
                std::vector<Coord> sub;
                std::vector<Vertex> stack{c};
                while (!stack.empty()) {
                    Vertex u = stack.back();
                    stack.pop_back();
                    sub.push_back(s.of(u));
                    for (Vertex k : t.children[u]) stack.push_back(k);
                }
                std::sort(sub.begin(), sub.end());
                for (std::size_t i = 1; i < sub.size(); ++i) CHECK(sub[i] == sub[i - 1] + 1);
                CHECK(sub.front() > prev_max);
                prev_max = sub.back();
            }
        }
    }
}

TEST_CASE("tree drawing places vertices by slope steps") {
    SECTION("chain 0-1-2") {
        auto [g_phi, t] = build_good_spanning_tree(path3(), {.root = 0});
        auto d = draw_tree(t, assign_slopes(t));
        CHECK(d.of(0) == Point{0, 0});
        CHECK(d.of(1) == Point{1, 2});
        CHECK(d.of(2) == Point{2, 3});
    }
    SECTION("triangle spanning tree") {
        auto [g_phi, t] = build_good_spanning_tree(triangle(), {.root = 0});
        auto d = draw_tree(t, assign_slopes(t));
        CHECK(d.of(0) == Point{0, 0});
        CHECK(d.of(1) == Point{1, 1});
        CHECK(d.of(2) == Point{1, 2});
    }
    SECTION("single edge") {
        auto g = make_graph(2, {{1}, {0}}, {0, 1});
        auto [g_phi, t] = build_good_spanning_tree(g);
        auto d = draw_tree(t, assign_slopes(t));
        CHECK(d.of(t.root) == Point{0, 0});
        CHECK(d.of(1 - t.root) == Point{1, 1});
    }
    SECTION("tree-alone grid bound: x <= n-1, y <= (n-1)^2") {
        for (std::uint64_t seed = 100; seed < 110; ++seed) {
            auto g = generate(GraphKind::Tree, 40, seed);
            auto [g_phi, t] = build_good_spanning_tree(g);
            auto d = draw_tree(t, assign_slopes(t));
            CHECK(d.max_x() <= 39);
            CHECK(d.max_y() <= 39 * 39);
            for (auto& p : d.pos) {
                CHECK(p.x >= 0);
                CHECK(p.y >= 0);
            }
        }
    }
    SECTION("drawing is planar and all tree paths are monotone") {
        for (std::uint64_t seed = 200; seed < 206; ++seed) {
            auto g = generate(GraphKind::Tree, 28, seed);
            auto [g_phi, t] = build_good_spanning_tree(g);
            auto d = draw_tree(t, assign_slopes(t));
            CHECK(check_no_crossings(d, g_phi).empty());
            for (Vertex a = 0; a < t.n; ++a)
                for (Vertex b = a + 1; b < t.n; ++b)
                    CHECK(check_tree_path_monotone(d, t, a, b).has_value());
        }
    }
}

TEST_CASE("elongation translates the subtree along its slope") {
    auto [g_phi, t] = build_good_spanning_tree(path3(), {.root = 0});
    auto s = assign_slopes(t);
    auto d = draw_tree(t, s);
    SECTION("zero steps is the identity") {
        auto e = elongate_edge(d, t, s, 1, 0);
        CHECK(e.pos == d.pos);
    }
    SECTION("chain elongated at the middle vertex by 3") {
        auto e = elongate_edge(d, t, s, 1, 3);
        CHECK(e.of(0) == Point{0, 0});
        CHECK(e.of(1) == Point{4, 8});
        CHECK(e.of(2) == Point{5, 9});
    }
    SECTION("cannot elongate above the root") {
        CHECK_THROWS_AS(elongate_edge(d, t, s, t.root, 1), std::invalid_argument);
    }
    SECTION("random elongations preserve planarity and monotonicity") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            auto g = generate(GraphKind::Tree, 14, 300 + trial);
            auto [gp, tree] = build_good_spanning_tree(g);
            auto slopes = assign_slopes(tree);
            auto base = draw_tree(tree, slopes);
            Vertex v = 1 + int(rng() % (tree.n - 1));
            if (v == tree.root) v = (v + 1) % tree.n;
            if (v == tree.root) continue;
            auto e = elongate_edge(base, tree, slopes, v, Coord(rng() % 6));
            CHECK(check_no_crossings(e, gp).empty());
            for (Vertex a = 0; a < tree.n; ++a)
                for (Vertex b = a + 1; b < tree.n; ++b)
                    CHECK(check_tree_path_monotone(e, tree, a, b).has_value());
        }
    }
}
