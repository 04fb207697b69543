#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "stc/families.hpp"
#include "stc/io.hpp"
#include "support/graphs.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidGraph;
}

}  // namespace

TEST_SUITE("io")
{
    TEST_CASE("graph json round trip keeps ids, weights and coordinates")
    {
        const WeightedGraph g = generate({.family = Family::Pu, .sizes = {25}, .seed = 3, .weights = WeightMode::Euclidean});
        const WeightedGraph h = parse_graph_json(graph_to_json(g));
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(h.edge(e).u == g.edge(e).u);
            CHECK(h.edge(e).v == g.edge(e).v);
            CHECK(h.edge(e).w == g.edge(e).w);
        }
        REQUIRE(h.has_coordinates());
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(h.coordinates()[static_cast<std::size_t>(v)].x == g.coordinates()[static_cast<std::size_t>(v)].x);
            CHECK(h.coordinates()[static_cast<std::size_t>(v)].y == g.coordinates()[static_cast<std::size_t>(v)].y);
        }
    }

    TEST_CASE("defaults and optional fields")
    {
        const WeightedGraph g = parse_graph_json(R"({"vertices":[{"id":1},{"id":0}],"edges":[{"u":0,"v":1}]})");
        CHECK(g.edge(0).w == 1.0);
        CHECK_FALSE(g.has_coordinates());
        CHECK(graph_to_json(g) == R"({"vertices":[{"id":0},{"id":1}],"edges":[{"u":0,"v":1,"w":1.0}]})");
    }

    TEST_CASE("malformed graphs")
    {
        CHECK(code_of([] { parse_graph_json("{"); }) == ErrorCode::Parse);
        CHECK(code_of([] { parse_graph_json(R"({"edges":[]})"); }) == ErrorCode::Parse);
        CHECK(code_of([] { parse_graph_json(R"({"vertices":[{"id":0},{"id":0}],"edges":[]})"); }) == ErrorCode::Parse);
        CHECK(code_of([] { parse_graph_json(R"({"vertices":[{"id":0,"x":1}],"edges":[]})"); }) == ErrorCode::Parse);
        CHECK(code_of([] {
                  parse_graph_json(R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1}],"edges":[{"u":0,"v":1}]})");
              }) == ErrorCode::Parse);
        CHECK(code_of([] { parse_graph_json(R"({"vertices":[{"id":0},{"id":1}],"edges":[{"u":0,"v":"1"}]})"); }) ==
              ErrorCode::Parse);
        CHECK(code_of([] { parse_graph_json(R"({"vertices":[{"id":0},{"id":1}],"edges":[{"u":0,"v":1,"w":0}]})"); }) ==
              ErrorCode::InvalidGraph);
        CHECK(code_of([] { read_graph_file("/nonexistent/graph.json"); }) == ErrorCode::Parse);
    }

    TEST_CASE("tree json")
    {
        const WeightedGraph c4 = square();
        const SpanningTree t = parse_tree_json(c4, R"({"edges":[[1,0],[2,1],[3,2]]})");
        CHECK(t.sorted_edge_ids() == std::vector<EdgeId>{0, 1, 2});
        CHECK(parse_tree_json(c4, tree_to_json(c4, t)).sorted_edge_ids() == t.sorted_edge_ids());
        CHECK(code_of([&] { parse_tree_json(c4, R"({"edges":[[0,2],[1,2],[2,3]]})"); }) == ErrorCode::TreeGraphMismatch);
        CHECK(code_of([&] { parse_tree_json(c4, R"({"edges":[[0,1],[1,2]]})"); }) == ErrorCode::WrongEdgeCount);
        CHECK(code_of([&] { parse_tree_json(c4, R"({"edges":[[0,1,2]]})"); }) == ErrorCode::Parse);
        CHECK(code_of([&] { parse_tree_json(c4, R"({"edges":[[0,9],[1,2],[2,3]]})"); }) == ErrorCode::TreeGraphMismatch);
    }

    TEST_CASE("files")
    {
        const auto dir = std::filesystem::temp_directory_path();
        const std::string gpath = (dir / "stc_io_graph.json").string();
        const std::string tpath = (dir / "stc_io_tree.json").string();
        const WeightedGraph g = bowtie(1, 2, 3);
        write_graph_file(gpath, g);
        const WeightedGraph h = read_graph_file(gpath);
        CHECK(h.edge_count() == 6);
        const SpanningTree t = validate_tree(h, std::vector<EdgeId>{1, 2, 4, 5});
        write_tree_file(tpath, h, t);
        CHECK(read_tree_file(h, tpath).sorted_edge_ids() == t.sorted_edge_ids());
        std::remove(gpath.c_str());
        std::remove(tpath.c_str());
    }
}
