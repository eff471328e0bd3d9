#include <catch2/catch.hpp>

#include <monodraw/generate.hpp>
#include <monodraw/io.hpp>

#include "test_helpers.hpp"

using namespace monodraw;
using namespace testing_helpers;

static const char* kTriangleDoc =
    "# smallest cycle\n"
    "n 3\n"
    "v 0 : 1 2\n"
    "v 1 : 2 0\n"
    "v 2 : 0 1\n"
    "outer 1 0\n";

TEST_CASE("text graph documents") {
    SECTION("minimal triangle parses") {
        auto doc = parse_graph(kTriangleDoc);
        CHECK(doc.graph.n == 3);
        CHECK(doc.graph.edge_count() == 3);
        CHECK(validate(doc.graph).ok);
    }
    SECTION("asymmetric adjacency is a parse error") {
        const char* bad =
            "n 2\n"
            "v 0 : 1\n"
            "v 1 :\n"
            "outer 0 1\n";
        CHECK_THROWS_AS(parse_graph(bad), ParseError);
        try {
            parse_graph(bad);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("asymmetric") != std::string::npos);
        }
    }
    SECTION("duplicate neighbor is rejected") {
        const char* bad =
            "n 2\n"
            "v 0 : 1 1\n"
            "v 1 : 0 0\n"
            "outer 0 1\n";
        CHECK_THROWS_AS(parse_graph(bad), ParseError);
    }
    SECTION("disconnected input is rejected") {
        const char* bad =
            "n 4\n"
            "v 0 : 1\n"
            "v 1 : 0\n"
            "v 2 : 3\n"
            "v 3 : 2\n"
            "outer 0 1\n";
        CHECK_THROWS_AS(parse_graph(bad), ParseError);
    }
    SECTION("a K5 rotation system fails the Euler check at parse time") {
        std::ostringstream os;
        os << "n 5\n";
        for (int u = 0; u < 5; ++u) {
            os << "v " << u << " :";
            for (int v = 0; v < 5; ++v)
                if (v != u) os << " " << v;
            os << "\n";
        }
        os << "outer 0 1\n";
        CHECK_THROWS_AS(parse_graph(os.str()), ParseError);
    }
    SECTION("unknown directive names the line") {
        try {
            parse_graph("n 1\nbogus 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("round trip is the identity") {
        GraphDocument doc;
        doc.graph = k4();
        doc.labels[0] = "hub";
        auto text = serialize_graph(doc);
        auto back = parse_graph(text);
        CHECK(back.graph.rotation == doc.graph.rotation);
        CHECK(back.graph.outer == doc.graph.outer);
        CHECK(back.labels == doc.labels);
    }
}

TEST_CASE("json graph documents") {
    auto doc = parse_graph(R"({"n": 3, "rotation": [[1,2],[2,0],[0,1]], "outer": [1,0]})");
    CHECK(doc.graph.n == 3);
    CHECK(validate(doc.graph).ok);
}

TEST_CASE("drawing documents round trip") {
    auto g = generate(GraphKind::RandomPlanar, 14, 5);
    auto [g_phi, t] = build_good_spanning_tree(g);
    auto d = draw_graph(g_phi, t);
    auto doc = make_drawing_document(t, d, {{0, "root"}});
    auto text = serialize_drawing(doc);
    auto back = parse_drawing(text);
    CHECK(back.n == doc.n);
    CHECK(back.root == doc.root);
    CHECK(back.ref_child == doc.ref_child);
    CHECK(back.pos == doc.pos);
    CHECK(back.tree_edges == doc.tree_edges);
    CHECK(back.nontree_edges == doc.nontree_edges);
    CHECK(back.labels == doc.labels);

    // The rebuilt tree supports the same checkers.
    auto t2 = tree_from_drawing(back);
    GridDrawing d2;
    d2.pos = back.pos;
    auto rep = check_all_pairs(d2, g_phi, t2);
    CHECK(rep.crossing_pairs.empty());
    CHECK(rep.non_monotone_pairs.empty());
    CHECK(rep.notes.empty());
}

TEST_CASE("generators") {
    SECTION("cycle has two faces") {
        auto g = generate(GraphKind::Cycle, 5, 0);
        CHECK(validate(g).ok);
        CHECK(trace_faces(g).size() == 2);
    }
    SECTION("maximal planar: m = 3n-6, all faces triangles") {
        for (int n : {3, 6, 15, 40}) {
            auto g = generate(GraphKind::MaximalPlanar, n, 9);
            CHECK(validate(g).ok);
            CHECK(g.edge_count() == 3 * n - 6);
            for (auto& f : trace_faces(g)) CHECK(f.darts.size() == 3);
        }
    }
    SECTION("wheel is valid and has n faces") {
        for (int n : {4, 5, 9}) {
            auto g = generate(GraphKind::Wheel, n, 0);
            CHECK(validate(g).ok);
            CHECK(trace_faces(g).size() == std::size_t(n));
        }
    }
    SECTION("deterministic per (kind, n, seed)") {
        for (auto kind : {GraphKind::Tree, GraphKind::MaximalPlanar, GraphKind::RandomPlanar}) {
            auto a = generate(kind, 20, 123);
            auto b = generate(kind, 20, 123);
            CHECK(a.rotation == b.rotation);
            auto c = generate(kind, 20, 124);
            // Different seed, almost surely different graph.
            if (kind != GraphKind::Tree) CHECK(a.rotation != c.rotation);
        }
    }
    SECTION("all kinds validate across sizes") {
        std::uint64_t seed = 9000;
        for (auto kind : {GraphKind::Tree, GraphKind::Cycle, GraphKind::Wheel,
                          GraphKind::MaximalPlanar, GraphKind::RandomPlanar})
            for (int n : {1, 2, 3, 4, 5, 8, 30})
                if (n >= min_size(kind)) CHECK(validate(generate(kind, n, ++seed)).ok);
    }
    SECTION("size guard") {
        CHECK_THROWS_AS(generate(GraphKind::Wheel, 3, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate(GraphKind::Cycle, 2, 0), std::invalid_argument);
    }
}

TEST_CASE("svg output") {
    auto [g_phi, t] = build_good_spanning_tree(triangle(), {.root = 0});
    auto d = draw_graph(g_phi, t);
    auto doc = make_drawing_document(t, d);
    SECTION("solid tree edges, dashed non-tree edges") {
        auto svg = emit_svg(doc);
        CHECK(svg.find("<svg") == 0);
        std::size_t dashed = 0, lines = 0;
        for (std::size_t p = 0; (p = svg.find("<line", p)) != std::string::npos; ++p) ++lines;
        for (std::size_t p = 0; (p = svg.find("stroke-dasharray", p)) != std::string::npos; ++p)
            ++dashed;
        CHECK(lines == 3);
        CHECK(dashed == 1);
        CHECK(svg.find("<circle") != std::string::npos);
        // Deterministic output.
        CHECK(emit_svg(doc) == svg);
    }
    SECTION("labels appear only when requested") {
        auto off = emit_svg(doc);
        auto on = emit_svg(doc, {.labels = true});
        CHECK(off.find("<text") == std::string::npos);
        CHECK(on.find("<text") != std::string::npos);
    }
}
