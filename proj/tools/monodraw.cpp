// Command-line front end: generate plane graphs, draw them as monotone grid
// drawings, verify drawings, and tabulate grid statistics.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <monodraw/full_layout.hpp>
#include <monodraw/generate.hpp>
#include <monodraw/io.hpp>

using namespace monodraw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_gen(const std::string& kind_name, int n, std::uint64_t seed, const std::string& out,
            bool as_json) {
    auto kind = kind_from_string(kind_name);
    if (!kind) {
        std::cerr << "unknown kind '" << kind_name << "'\n";
        return kExitInputError;
    }
    GraphDocument doc;
    doc.graph = generate(*kind, n, seed);
    if (as_json) {
        nlohmann::json j;
        j["n"] = doc.graph.n;
        j["rotation"] = doc.graph.rotation;
        j["outer"] = {doc.graph.outer.from, doc.graph.outer.to};
        write_output(out, j.dump(2) + "\n");
    } else {
        write_output(out, serialize_graph(doc));
    }
    return kExitOk;
}

int cmd_draw(const std::string& in, const std::string& out, const std::string& svg_out,
             int root, int ref, bool debug_stepwise, int compact_limit, bool labels,
             const std::string& format) {
    GraphDocument doc = parse_graph(read_input(in));
    GoodTreeOptions topt;
    if (root >= 0) topt.root = root;
    if (ref >= 0) topt.ref_child = ref;
    auto [g_phi, tree] = build_good_spanning_tree(doc.graph, topt);
    DrawOptions dopt;
    dopt.debug_stepwise = debug_stepwise;
    if (compact_limit >= 0) dopt.compact_limit = compact_limit;
    GridDrawing drawing = draw_graph(g_phi, tree, dopt);

    DrawingDocument ddoc = make_drawing_document(tree, drawing, doc.labels);
    if (format == "svg")
        write_output(out, emit_svg(ddoc, {.labels = labels}));
    else
        write_output(out, serialize_drawing(ddoc));
    if (!svg_out.empty()) write_output(svg_out, emit_svg(ddoc, {.labels = labels}));
    return kExitOk;
}

int cmd_verify(const std::string& graph_in, const std::string& drawing_in, bool oracle) {
    GraphDocument gdoc = parse_graph(read_input(graph_in));
    DrawingDocument ddoc = parse_drawing(read_input(drawing_in));
    if (ddoc.n != gdoc.graph.n) {
        std::cerr << "drawing has " << ddoc.n << " vertices, graph has " << gdoc.graph.n << "\n";
        return kExitInputError;
    }
    std::set<std::uint64_t> doc_edges;
    for (auto& e : ddoc.tree_edges) doc_edges.insert(edge_key(e.first, e.second));
    for (auto& e : ddoc.nontree_edges) doc_edges.insert(edge_key(e.first, e.second));
    for (auto [u, v] : gdoc.graph.edges())
        if (!doc_edges.count(edge_key(u, v))) {
            std::cerr << "edge {" << u << "," << v << "} missing from the drawing document\n";
            return kExitInputError;
        }
    if (doc_edges.size() != static_cast<std::size_t>(gdoc.graph.edge_count())) {
        std::cerr << "drawing document lists edges not in the graph\n";
        return kExitInputError;
    }

    GoodSpanningTree tree = tree_from_drawing(ddoc);
    GridDrawing drawing;
    drawing.pos = ddoc.pos;
    VerificationReport rep = check_all_pairs(drawing, gdoc.graph, tree);

    nlohmann::json j;
    j["passed"] = rep.passed;
    j["crossings"] = rep.crossing_pairs.size();
    j["non_monotone_pairs"] = rep.non_monotone_pairs.size();
    j["distinctness_violations"] = rep.notes.size();
    auto bounds = nlohmann::json::array();
    for (auto& b : rep.bound_violations)
        bounds.push_back({{"quantity", b.quantity}, {"value", b.value}, {"bound", b.bound}});
    j["bound_violations"] = bounds;
    j["witnessed_pairs"] = rep.witness_directions.size();

    bool oracle_ok = true;
    if (oracle) {
        if (gdoc.graph.n > 10) {
            std::cerr << "--oracle requires n <= 10 (got n = " << gdoc.graph.n << ")\n";
            return kExitInputError;
        }
        int checked = 0, failed = 0;
        for (Vertex a = 0; a < gdoc.graph.n; ++a)
            for (Vertex b = a + 1; b < gdoc.graph.n; ++b) {
                ++checked;
                if (!oracle_all_paths_monotone(drawing, gdoc.graph, a, b)) ++failed;
            }
        oracle_ok = failed == 0;
        j["oracle"] = {{"pairs", checked}, {"without_monotone_path", failed}};
    }
    std::cout << j.dump(2) << "\n";
    return rep.passed && oracle_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_stats(const std::string& corpus_dir, const std::string& kinds_csv,
              const std::string& sizes_csv, std::uint64_t seed, int count,
              const std::string& stats_out) {
    std::ostringstream table;
    table << "kind,n,m,z,width,height,width_bound,height_bound,within_bounds,draw_ms\n";
    bool all_within = true;

    auto run_one = [&](const std::string& label, const PlaneGraph& g) {
        auto start = std::chrono::steady_clock::now();
        auto [g_phi, tree] = build_good_spanning_tree(g);
        auto drawing = draw_graph(g_phi, tree);
        double ms = seconds(start) * 1000.0;
        BoundSpec b = grid_bounds(g.n, g.edge_count());
        bool within = drawing.max_x() <= b.width_bound && drawing.max_y() <= b.height_bound;
        all_within &= within;
        int z = g.edge_count() - g.n + 1;
        table << label << "," << g.n << "," << g.edge_count() << "," << z << ","
              << drawing.max_x() << "," << drawing.max_y() << "," << b.width_bound << ","
              << b.height_bound << "," << (within ? "yes" : "no") << "," << std::fixed
              << std::setprecision(2) << ms << "\n";
    };

    if (!corpus_dir.empty()) {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (auto& entry : fs::directory_iterator(corpus_dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            std::cerr << "no corpus files in " << corpus_dir << "\n";
            return kExitInputError;
        }
        for (auto& f : files) {
            GraphDocument doc = parse_graph(read_input(f.string()));
            run_one(f.filename().string(), doc.graph);
        }
    } else {
        std::vector<GraphKind> kinds;
        std::istringstream ks(kinds_csv);
        std::string tok;
        while (std::getline(ks, tok, ',')) {
            auto k = kind_from_string(tok);
            if (!k) {
                std::cerr << "unknown kind '" << tok << "'\n";
                return kExitInputError;
            }
            kinds.push_back(*k);
        }
        std::vector<int> sizes;
        std::istringstream ss(sizes_csv);
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
        std::mt19937_64 rng(seed);
        for (GraphKind k : kinds)
            for (int n : sizes)
                for (int c = 0; c < count; ++c) {
                    if (n < min_size(k)) continue;
                    run_one(to_string(k), generate(k, n, rng()));
                }
    }
    write_output(stats_out, table.str());
    return all_within ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone grid drawings of connected planar graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a plane graph document");
    std::string gen_kind = "random_planar", gen_out = "-";
    int gen_n = 10;
    std::uint64_t gen_seed = 0;
    bool gen_json = false;
    gen->add_option("--kind", gen_kind, "tree|cycle|wheel|maximal_planar|random_planar");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_flag("--json", gen_json, "emit the JSON document form");

    auto* draw = app.add_subcommand("draw", "compute a monotone grid drawing");
    std::string draw_in = "-", draw_out = "-", draw_svg, draw_format = "json";
    int draw_root = -1, draw_ref = -1, draw_compact = -1;
    bool draw_debug = false, draw_labels = false;
    draw->add_option("-i,--input", draw_in, "graph document (default stdin)");
    draw->add_option("-o,--output", draw_out, "drawing output (default stdout)");
    draw->add_option("--svg", draw_svg, "also write an SVG rendering here");
    draw->add_option("--format", draw_format, "output format: json|svg")
        ->check(CLI::IsMember({"json", "svg"}));
    draw->add_option("--root", draw_root, "root vertex (default: first outer vertex)");
    draw->add_option("--ref", draw_ref, "reference child override");
    draw->add_option("--compact-limit", draw_compact,
                     "largest n drawn with compact grid lines (default 3000)");
    draw->add_flag("--debug-stepwise", draw_debug, "re-verify the drawing after every insertion");
    draw->add_flag("--labels", draw_labels, "render vertex labels in SVG output");

    auto* verify = app.add_subcommand("verify", "check a drawing against its graph");
    std::string ver_graph, ver_drawing;
    bool ver_oracle = false;
    verify->add_option("-i,--input", ver_graph, "graph document")->required();
    verify->add_option("-d,--drawing", ver_drawing, "drawing document")->required();
    verify->add_flag("--oracle", ver_oracle,
                     "also run the all-simple-paths monotonicity oracle (n <= 10)");

    auto* stats = app.add_subcommand("stats", "grid size and runtime table over a corpus");
    std::string st_corpus, st_kinds = "tree,cycle,wheel,maximal_planar,random_planar";
    std::string st_sizes = "10,100,1000", st_out = "-";
    std::uint64_t st_seed = 1;
    int st_count = 3;
    if (const char* env = std::getenv("MONODRAW_CORPUS")) st_corpus = env;
    stats->add_option("--corpus", st_corpus,
                      "directory of graph documents (default: $MONODRAW_CORPUS)");
    stats->add_option("--kinds", st_kinds, "comma-separated generator kinds");
    stats->add_option("--sizes", st_sizes, "comma-separated vertex counts");
    stats->add_option("--seed", st_seed, "generator seed");
    stats->add_option("--count", st_count, "graphs per kind and size");
    stats->add_option("--stats-out", st_out, "write the CSV table here (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_seed, gen_out, gen_json);
        if (draw->parsed())
            return cmd_draw(draw_in, draw_out, draw_svg, draw_root, draw_ref, draw_debug,
                            draw_compact, draw_labels, draw_format);
        if (verify->parsed()) return cmd_verify(ver_graph, ver_drawing, ver_oracle);
        if (stats->parsed())
            return cmd_stats(st_corpus, st_kinds, st_sizes, st_seed, st_count, st_out);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
