#pragma once

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "full_layout.hpp"
#include "good_tree.hpp"

namespace monodraw {

struct GraphDocument {
    PlaneGraph graph;
    std::map<Vertex, std::string> labels;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Line-oriented text format:
//   n <count>
//   v <id> : <neighbor> <neighbor> ...   (counterclockwise)
//   outer <u> <v>
//   label <id> <text>
// '#' starts a comment. A JSON object with the same fields is also accepted.
inline GraphDocument parse_graph_text(const std::string& text) {
    GraphDocument doc;
    PlaneGraph& g = doc.graph;
    g.n = -1;
    bool outer_seen = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<char> defined;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (g.n != -1) throw ParseError(lineno, "duplicate n");
            if (!(ls >> g.n) || g.n < 1) throw ParseError(lineno, "bad vertex count");
            g.rotation.resize(g.n);
            defined.assign(g.n, 0);
        } else if (tag == "v") {
            if (g.n == -1) throw ParseError(lineno, "v before n");
            int id;
            std::string colon;
            if (!(ls >> id >> colon) || colon != ":") throw ParseError(lineno, "expected 'v <id> :'");
            if (id < 0 || id >= g.n) throw ParseError(lineno, "vertex id out of range");
            if (defined[id]) throw ParseError(lineno, "duplicate vertex " + std::to_string(id));
            defined[id] = 1;
            int nb;
            while (ls >> nb) {
                if (nb < 0 || nb >= g.n) throw ParseError(lineno, "neighbor out of range");
                g.rotation[id].push_back(nb);
            }
            if (!ls.eof()) throw ParseError(lineno, "bad neighbor list");
        } else if (tag == "outer") {
            if (g.n == -1) throw ParseError(lineno, "outer before n");
            if (!(ls >> g.outer.from >> g.outer.to)) throw ParseError(lineno, "bad outer dart");
            outer_seen = true;
        } else if (tag == "label") {
            int id;
            if (!(ls >> id)) throw ParseError(lineno, "bad label line");
            std::string rest;
            std::getline(ls, rest);
            std::size_t start = rest.find_first_not_of(' ');
            doc.labels[id] = start == std::string::npos ? "" : rest.substr(start);
        } else {
            throw ParseError(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (g.n == -1) throw ParseError(lineno, "missing 'n' line");
    if (!outer_seen && g.n > 1) throw ParseError(lineno, "missing 'outer' line");
    ValidationReport rep = validate(g);
    if (!rep.ok) {
        std::string msg = "invalid plane graph:";
        for (auto& p : rep.problems) msg += " " + p + ";";
        throw ParseError(lineno, msg);
    }
    return doc;
}

inline GraphDocument parse_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GraphDocument doc;
    doc.graph.n = j.at("n").get<int>();
    doc.graph.rotation = j.at("rotation").get<std::vector<std::vector<Vertex>>>();
    if (j.contains("outer")) {
        doc.graph.outer.from = j["outer"].at(0).get<int>();
        doc.graph.outer.to = j["outer"].at(1).get<int>();
    }
    if (j.contains("labels"))
        for (auto& [k, v] : j["labels"].items())
            doc.labels[std::stoi(k)] = v.get<std::string>();
    ValidationReport rep = validate(doc.graph);
    if (!rep.ok) {
        std::string msg = "invalid plane graph:";
        for (auto& p : rep.problems) msg += " " + p + ";";
        throw ParseError(0, msg);
    }
    return doc;
}

inline GraphDocument parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
    }
    throw ParseError(0, "empty document");
}

inline std::string serialize_graph(const GraphDocument& doc) {
    std::ostringstream os;
    os << "n " << doc.graph.n << "\n";
    for (Vertex v = 0; v < doc.graph.n; ++v) {
        os << "v " << v << " :";
        for (Vertex w : doc.graph.rotation[v]) os << " " << w;
        os << "\n";
    }
    if (doc.graph.n > 1) os << "outer " << doc.graph.outer.from << " " << doc.graph.outer.to << "\n";
    for (auto& [id, text] : doc.labels) os << "label " << id << " " << text << "\n";
    return os.str();
}

struct DrawingDocument {
    int n = 0;
    Vertex root = 0;
    Vertex ref_child = -1;
    std::vector<Point> pos;
    std::vector<std::pair<Vertex, Vertex>> tree_edges;
    std::vector<std::pair<Vertex, Vertex>> nontree_edges;
    std::map<Vertex, std::string> labels;

    Coord width() const {
        Coord m = 0;
        for (auto& p : pos) m = std::max(m, p.x);
        return m;
    }
    Coord height() const {
        Coord m = 0;
        for (auto& p : pos) m = std::max(m, p.y);
        return m;
    }
};

inline DrawingDocument make_drawing_document(const GoodSpanningTree& t, const GridDrawing& d,
                                             const std::map<Vertex, std::string>& labels = {}) {
    DrawingDocument doc;
    doc.n = t.n;
    doc.root = t.root;
    doc.ref_child = t.ref_child;
    doc.pos = d.pos;
    for (Vertex v = 0; v < t.n; ++v)
        if (v != t.root) doc.tree_edges.push_back({t.parent[v], v});
    doc.nontree_edges = t.nontree_edges;
    doc.labels = labels;
    return doc;
}

inline std::string serialize_drawing(const DrawingDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["root"] = doc.root;
    j["reference_edge"] = {doc.root, doc.ref_child};
    auto pts = nlohmann::json::array();
    for (auto& p : doc.pos) pts.push_back({p.x, p.y});
    j["pos"] = pts;
    auto edges = nlohmann::json::array();
    for (auto& e : doc.tree_edges)
        edges.push_back({{"u", e.first}, {"v", e.second}, {"role", "tree"}});
    for (auto& e : doc.nontree_edges)
        edges.push_back({{"u", e.first}, {"v", e.second}, {"role", "nontree"}});
    j["edges"] = edges;
    j["bounds"] = {{"width", doc.width()}, {"height", doc.height()}};
    if (!doc.labels.empty()) {
        nlohmann::json lbl;
        for (auto& [k, v] : doc.labels) lbl[std::to_string(k)] = v;
        j["labels"] = lbl;
    }
    return j.dump(2) + "\n";
}

inline DrawingDocument parse_drawing(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DrawingDocument doc;
    doc.n = j.at("n").get<int>();
    doc.root = j.at("root").get<int>();
    doc.ref_child = j.at("reference_edge").at(1).get<int>();
    for (auto& p : j.at("pos")) doc.pos.push_back({p.at(0).get<Coord>(), p.at(1).get<Coord>()});
    for (auto& e : j.at("edges")) {
        std::pair<Vertex, Vertex> edge{e.at("u").get<int>(), e.at("v").get<int>()};
        if (e.at("role").get<std::string>() == "tree")
            doc.tree_edges.push_back(edge);
        else
            doc.nontree_edges.push_back(edge);
    }
    if (j.contains("labels"))
        for (auto& [k, v] : j["labels"].items()) doc.labels[std::stoi(k)] = v.get<std::string>();
    return doc;
}

// Rebuilds the spanning-tree view a drawing document carries, for re-running
// the checkers against an independently parsed graph.
inline GoodSpanningTree tree_from_drawing(const DrawingDocument& doc) {
    GoodSpanningTree t;
    t.n = doc.n;
    t.root = doc.root;
    t.ref_child = doc.ref_child;
    t.parent.assign(doc.n, -1);
    t.level.assign(doc.n, -1);
    t.children.resize(doc.n);
    std::vector<std::vector<Vertex>> adj(doc.n);
    for (auto& e : doc.tree_edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
        t.tree_edge_set.insert(edge_key(e.first, e.second));
    }
    std::deque<Vertex> q{t.root};
    t.level[t.root] = 0;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : adj[u])
            if (t.level[w] == -1) {
                t.level[w] = t.level[u] + 1;
                t.parent[w] = u;
                t.children[u].push_back(w);
                q.push_back(w);
            }
    }
    t.nontree_edges = doc.nontree_edges;
    return t;
}

struct SvgOptions {
    int unit = 20;    // pixels per grid step
    int margin = 10;  // outer margin in pixels
    bool labels = false;
};

// Tree edges solid, non-tree edges dashed; y axis flipped so larger y draws
// upward on screen.
inline std::string emit_svg(const DrawingDocument& doc, SvgOptions opt = {}) {
    Coord w = doc.width(), h = doc.height();
    long long width_px = w * opt.unit + 2 * opt.margin;
    long long height_px = h * opt.unit + 2 * opt.margin;
    auto X = [&](Coord x) { return x * opt.unit + opt.margin; };
    auto Y = [&](Coord y) { return (h - y) * opt.unit + opt.margin; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
       << height_px << "\" viewBox=\"0 0 " << width_px << " " << height_px << "\">\n";
    auto line = [&](std::pair<Vertex, Vertex> e, const char* extra) {
        os << "  <line x1=\"" << X(doc.pos[e.first].x) << "\" y1=\"" << Y(doc.pos[e.first].y)
           << "\" x2=\"" << X(doc.pos[e.second].x) << "\" y2=\"" << Y(doc.pos[e.second].y)
           << "\" stroke=\"black\" stroke-width=\"2\"" << extra << "/>\n";
    };
    for (auto& e : doc.tree_edges) line(e, "");
    for (auto& e : doc.nontree_edges) line(e, " stroke-dasharray=\"6 4\"");
    for (Vertex v = 0; v < doc.n; ++v) {
        os << "  <circle cx=\"" << X(doc.pos[v].x) << "\" cy=\"" << Y(doc.pos[v].y)
           << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        if (opt.labels) {
            std::string text = std::to_string(v);
            auto it = doc.labels.find(v);
            if (it != doc.labels.end() && !it->second.empty()) text = it->second;
            os << "  <text x=\"" << X(doc.pos[v].x) + 6 << "\" y=\"" << Y(doc.pos[v].y) - 6
               << "\" font-size=\"12\" font-family=\"monospace\">" << text << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace monodraw
