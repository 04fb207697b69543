#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "stc/oracle.hpp"
#include "support/graphs.hpp"
#include "support/cut_oracle.hpp"

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
    return ErrorCode::Parse;
}

std::vector<EdgeId> ids(std::initializer_list<EdgeId> list) { return list; }

}  // namespace

TEST_SUITE("graph")
{
    TEST_CASE("graph construction checks its invariants")
    {
        CHECK(code_of([] { WeightedGraph(2, {{0, 0, 1.0}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 1.0}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph(2, {{0, 2, 1.0}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph(2, {{0, 1, 0.0}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph(2, {{0, 1, -1.0}}); }) == ErrorCode::InvalidGraph);

        const WeightedGraph multi(2, {{0, 1, 1.0}, {1, 0, 2.0}, {0, 0, 3.0}}, true);
        CHECK(multi.edge_count() == 3);
        CHECK(multi.degree(0) == 3);
        CHECK(multi.degree(1) == 2);
        CHECK(multi.check_incidence());
    }

    TEST_CASE("graph summary fields")
    {
        const WeightedGraph g = weighted_triangle();
        CHECK(g.total_weight() == 4.0);
        CHECK(g.min_weight() == 1.0);
        CHECK(g.max_weight() == 2.0);
        CHECK(g.integer_weights());
        CHECK_FALSE(g.unweighted());
        CHECK(g.weighted_degree(0) == 3.0);
        CHECK(g.find_edge(2, 0) == 2);
        CHECK(g.find_edge(0, 0) == kNoEdge);
        CHECK(g.connected());
        CHECK(square().unweighted());
        CHECK_FALSE(WeightedGraph(3, {{0, 1, 1.0}}).connected());
        CHECK_FALSE(WeightedGraph(2, {{0, 1, 0.5}}).integer_weights());
    }

    TEST_CASE("validate_tree accepts spanning trees and names the violated axiom")
    {
        const WeightedGraph c4 = square();
        const SpanningTree t = validate_tree(c4, ids({0, 1, 2}));
        CHECK(t.size() == 3);
        CHECK(t.contains(1));
        CHECK_FALSE(t.contains(3));
        CHECK(t.position(2) == 2);
        for (VertexId v = 1; v < 4; ++v) CHECK(t.parent(v) != kNoVertex);

        CHECK(code_of([&] { validate_tree(c4, ids({0, 1, 2, 3})); }) == ErrorCode::WrongEdgeCount);
        const WeightedGraph k4 = complete(4);
        // k4 ids: 01=0 02=1 03=2 12=3 13=4 23=5; {01, 12, 02} is a triangle.
        CHECK(code_of([&] { validate_tree(k4, ids({0, 3, 1})); }) == ErrorCode::ContainsCycle);
        CHECK(code_of([&] { validate_tree(k4, ids({0, 0, 1})); }) == ErrorCode::ContainsCycle);
    }

    TEST_CASE("tree_path walks the unique path")
    {
        const WeightedGraph c4 = square();
        const SpanningTree t = validate_tree(c4, ids({0, 1, 2}));
        CHECK(tree_path(t, 0, 3) == ids({0, 1, 2}));
        CHECK(tree_path(t, 3, 0) == ids({2, 1, 0}));
        CHECK(tree_path(t, 1, 2) == ids({1}));

        const WeightedGraph p3 = path3();
        CHECK(tree_path(validate_tree(p3, ids({0, 1})), 0, 2) == ids({0, 1}));

        const WeightedGraph star(3, {{2, 0, 1.0}, {2, 1, 1.0}});
        CHECK(tree_path(validate_tree(star, ids({0, 1})), 0, 1) == ids({0, 1}));
        CHECK(code_of([&] { tree_path(t, 2, 2); }) == ErrorCode::SameVertex);
    }

    TEST_CASE("tree_path is a simple path between its ends on random trees")
    {
        std::mt19937_64 rng(11);
        for (int round = 0; round < 50; ++round) {
            const WeightedGraph g = random_connected(9, 0.4, 1, rng);
            const SpanningTree t = random_spanning_tree(g, static_cast<std::uint64_t>(round));
            for (VertexId u = 0; u < 9; ++u)
                for (VertexId v = 0; v < 9; ++v) {
                    if (u == v) continue;
                    const auto path = tree_path(t, u, v);
                    VertexId at = u;
                    std::set<VertexId> seen{u};
                    for (EdgeId e : path) {
                        REQUIRE(t.contains(e));
                        const Edge& ed = g.edge(e);
                        REQUIRE((ed.u == at || ed.v == at));
                        at = ed.u == at ? ed.v : ed.u;
                        REQUIRE(seen.insert(at).second);
                    }
                    CHECK(at == v);
                }
        }
    }

    TEST_CASE("kruskal extremal trees and tie-break")
    {
        const WeightedGraph tri = weighted_triangle();
        const std::vector<double> key{1.0, 1.0, 2.0};
        CHECK(kruskal(tri, key, true).sorted_edge_ids() == ids({0, 1}));
        CHECK(kruskal(tri, key, false).sorted_edge_ids() == ids({0, 2}));

        const WeightedGraph k4 = complete(4);
        const std::vector<double> ones(6, 1.0);
        CHECK(kruskal(k4, ones, true).sorted_edge_ids() == ids({0, 1, 2}));

        const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        CHECK(code_of([&] { kruskal(split, std::vector<double>{1.0, 1.0}, true); }) == ErrorCode::Disconnected);
    }

    TEST_CASE("kruskal key sequence is coordinatewise minimal over all trees")
    {
        std::mt19937_64 rng(5);
        for (int round = 0; round < 40; ++round) {
            const int n = 4 + round % 5;
            const WeightedGraph g = random_connected(n, 0.5, 1, rng);
            std::vector<double> key(static_cast<std::size_t>(g.edge_count()));
            for (auto& k : key) k = std::uniform_int_distribution<int>(1, 6)(rng);
            auto sorted_keys = [&](std::span<const EdgeId> t) {
                std::vector<double> ks;
                for (EdgeId e : t) ks.push_back(key[static_cast<std::size_t>(e)]);
                std::sort(ks.begin(), ks.end());
                return ks;
            };
            const auto kt = sorted_keys(kruskal(g, key, true).edge_ids());
            enumerate_spanning_trees(g, 1e6, [&](std::span<const EdgeId> t) {
                const auto other = sorted_keys(t);
                for (std::size_t i = 0; i < kt.size(); ++i) REQUIRE(kt[i] <= other[i]);
            });
        }
    }

    TEST_CASE("random_spanning_tree is valid and seeded")
    {
        const WeightedGraph c4 = square();
        const auto a = random_spanning_tree(c4, 0).sorted_edge_ids();
        CHECK(a == random_spanning_tree(c4, 0).sorted_edge_ids());
        CHECK(a.size() == 3);

        const WeightedGraph k4 = complete(4);
        std::set<std::vector<EdgeId>> seen;
        for (std::uint64_t s = 0; s < 1000; ++s) {
            const SpanningTree t = random_spanning_tree(k4, s);
            validate_tree(k4, t.edge_ids());
            seen.insert(t.sorted_edge_ids());
        }
        CHECK(seen.size() >= 2);

        const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        CHECK(code_of([&] { random_spanning_tree(split, 1); }) == ErrorCode::Disconnected);
    }

    TEST_CASE("union find and hop metrics")
    {
        UnionFind uf(4);
        CHECK(uf.unite(0, 1));
        CHECK_FALSE(uf.unite(1, 0));
        CHECK(uf.components() == 3);
        CHECK(bfs_distances(square(), 0) == std::vector<int>{0, 1, 2, 1});
        CHECK(hop_diameter(square()) == 2);
        CHECK(hop_diameter(complete(5)) == 1);
    }
}
