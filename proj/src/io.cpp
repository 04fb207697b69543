#include "stc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stc {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

ordered_json load(const std::string& text)
{
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        parse_error(e.what());
    }
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spill(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_error("cannot write " + path);
    out << text << '\n';
}

int as_index(const ordered_json& j, const char* what)
{
    if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

WeightedGraph parse_graph_json(const std::string& text)
{
    const ordered_json doc = load(text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) parse_error("expected vertices and edges");
    const auto& vs = doc["vertices"];
    const auto& es = doc["edges"];
    if (!vs.is_array() || !es.is_array()) parse_error("vertices and edges must be arrays");

    const int n = static_cast<int>(vs.size());
    std::vector<Point> coords(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int with_xy = 0;
    for (const auto& v : vs) {
        if (!v.is_object() || !v.contains("id")) parse_error("vertex without id");
        const int id = as_index(v["id"], "vertex id");
        if (id < 0 || id >= n || seen[static_cast<std::size_t>(id)]) parse_error("vertex ids must be 0..n-1 without repeats");
        seen[static_cast<std::size_t>(id)] = 1;
        const bool has_x = v.contains("x");
        if (has_x != v.contains("y")) parse_error("vertex " + std::to_string(id) + " has only one coordinate");
        if (has_x) {
            if (!v["x"].is_number() || !v["y"].is_number()) parse_error("coordinates must be numbers");
            coords[static_cast<std::size_t>(id)] = {v["x"].get<double>(), v["y"].get<double>()};
            ++with_xy;
        }
    }
    if (with_xy != 0 && with_xy != n) parse_error("either every vertex or none has coordinates");

    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v")) parse_error("edge without endpoints");
        Edge ed{as_index(e["u"], "edge endpoint"), as_index(e["v"], "edge endpoint"), 1.0};
        if (e.contains("w")) {
            if (!e["w"].is_number()) parse_error("edge weight must be a number");
            ed.w = e["w"].get<double>();
        }
        edges.push_back(ed);
    }
    WeightedGraph g(n, std::move(edges));
    if (with_xy == n && n > 0) g = g.with_coordinates(std::move(coords));
    return g;
}

std::string graph_to_json(const WeightedGraph& graph)
{
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (int v = 0; v < graph.vertex_count(); ++v) {
        ordered_json o;
        o["id"] = v;
        if (graph.has_coordinates()) {
            o["x"] = graph.coordinates()[static_cast<std::size_t>(v)].x;
            o["y"] = graph.coordinates()[static_cast<std::size_t>(v)].y;
        }
        doc["vertices"].push_back(std::move(o));
    }
    doc["edges"] = ordered_json::array();
    for (const Edge& e : graph.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
    return doc.dump();
}

WeightedGraph read_graph_file(const std::string& path) { return parse_graph_json(slurp(path)); }

void write_graph_file(const std::string& path, const WeightedGraph& graph) { spill(path, graph_to_json(graph)); }

SpanningTree parse_tree_json(const WeightedGraph& graph, const std::string& text)
{
    const ordered_json doc = load(text);
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) parse_error("expected an edges array");
    std::vector<EdgeId> ids;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2) parse_error("tree edges are [u,v] pairs");
        const int u = as_index(pair[0], "tree endpoint");
        const int v = as_index(pair[1], "tree endpoint");
        if (u < 0 || v < 0 || u >= graph.vertex_count() || v >= graph.vertex_count())
            throw Error(ErrorCode::TreeGraphMismatch, "tree vertex out of range");
        const EdgeId e = graph.find_edge(u, v);
        if (e == kNoEdge) throw Error(ErrorCode::TreeGraphMismatch, "no graph edge " + std::to_string(u) + "-" + std::to_string(v));
        ids.push_back(e);
    }
    return validate_tree(graph, ids);
}

std::string tree_to_json(const WeightedGraph& graph, const SpanningTree& tree)
{
    ordered_json doc;
    doc["edges"] = ordered_json::array();
    for (EdgeId e : tree.edge_ids()) doc["edges"].push_back({graph.edge(e).u, graph.edge(e).v});
    return doc.dump();
}

SpanningTree read_tree_file(const WeightedGraph& graph, const std::string& path)
{
    return parse_tree_json(graph, slurp(path));
}

void write_tree_file(const std::string& path, const WeightedGraph& graph, const SpanningTree& tree)
{
    spill(path, tree_to_json(graph, tree));
}

}  // namespace stc
