#include "doctest.h"
#include "stc/families.hpp"
#include "stc/roc.hpp"
#include "support/graphs.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

PlanarEmbedding embed(Family f, std::vector<int> sizes, WeightMode w = WeightMode::Unit)
{
    return build_embedding(generate({.family = f, .sizes = std::move(sizes), .weights = w}));
}

}  // namespace

TEST_SUITE("roc")
{
    TEST_CASE("minimal_edge prefers the lightest candidate")
    {
        const WeightedGraph d(3, {{0, 2, 2.0}, {1, 2, 1.0}, {0, 1, 1.0}}, true);
        const std::vector<char> in_tree{1, 1, 0};
        CHECK(minimal_edge(d, std::vector<EdgeId>{0, 1}, in_tree) == 1);
    }

    TEST_CASE("minimal_edge then prefers the lower weighted-degree ratio")
    {
        // Cell 1 has ratio (1 + 3) / 2 = 2, cell 0 has ratio 1.
        const WeightedGraph d(4, {{1, 2, 1.0}, {1, 3, 3.0}, {0, 2, 1.0}, {0, 3, 1.0}}, true);
        const std::vector<char> in_tree{1, 1, 0, 0};
        CHECK(minimal_edge(d, std::vector<EdgeId>{0, 2}, in_tree) == 2);
    }

    TEST_CASE("minimal_edge then prefers the higher degree")
    {
        // Both ratios are 1; cell 0 has degree 3, cell 1 degree 2.
        const WeightedGraph d(4, {{1, 2, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 3, 1.0}}, true);
        const std::vector<char> in_tree{1, 1, 0, 0};
        CHECK(minimal_edge(d, std::vector<EdgeId>{0, 2}, in_tree) == 2);
    }

    TEST_CASE("minimal_edge falls back to the lowest index, then the lowest edge id")
    {
        const WeightedGraph d(3, {{1, 2, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, true);
        const std::vector<char> in_tree{1, 1, 0};
        CHECK(minimal_edge(d, std::vector<EdgeId>{0, 1, 2, 3}, in_tree) == 1);
        // With cell 1 ranked first the join order decides.
        const std::vector<int> rank{1, 0, -1};
        CHECK(minimal_edge(d, std::vector<EdgeId>{2, 0, 3, 1}, in_tree, rank) == 0);
        CHECK_THROWS_AS(minimal_edge(d, std::vector<EdgeId>{}, in_tree), Error);
    }

    TEST_CASE("grid values")
    {
        CHECK(roc(embed(Family::RectGrid, {40, 10}), Norm::infinity()).value == 11.0);
        CHECK(roc(embed(Family::HexRect, {20, 10}), Norm::infinity()).value == 11.0);
    }

    TEST_CASE("every root yields a spanning dual tree in one step per cell")
    {
        for (const auto& emb : {embed(Family::RectGrid, {5, 6}), embed(Family::TriGrid, {6}),
                                embed(Family::HexRect, {4, 3}, WeightMode::Minus),
                                build_embedding(generate({.family = Family::Pu, .sizes = {30}, .seed = 2}))}) {
            const DualGraph d = dual(emb);
            for (Norm p : {Norm::infinity(), Norm::finite(1), Norm::finite(3)})
                for (RocCandidates cand : {RocCandidates::MultiEdgeCells, RocCandidates::AllBoundaryCells})
                    for (int root = 0; root < d.graph.vertex_count(); ++root) {
                        const auto edges = roc_dual_tree(d, root, p, {.candidates = cand});
                        CHECK(edges.size() == static_cast<std::size_t>(d.graph.vertex_count() - 1));
                        const SpanningTree dt = validate_tree(d.graph, edges);
                        const SpanningTree primal = primal_tree(emb.graph, dt);
                        CHECK(primal.size() == emb.graph.vertex_count() - 1);
                    }
        }
    }

    TEST_CASE("roc is deterministic and thread-independent")
    {
        const auto emb = embed(Family::TriGrid, {8}, WeightMode::Plus);
        const auto a = roc(emb, Norm::finite(2));
        const auto b = roc(emb, Norm::finite(2));
        const auto c = roc(emb, Norm::finite(2), {.parallel = false});
        CHECK(a.tree.sorted_edge_ids() == b.tree.sorted_edge_ids());
        CHECK(a.tree.sorted_edge_ids() == c.tree.sorted_edge_ids());
        CHECK(a.value == c.value);
        CHECK(a.value == doctest::Approx(lp_norm(edge_congestions(emb.graph, a.tree).values, Norm::finite(2))));
    }

    TEST_CASE("index and loop options produce valid trees")
    {
        const auto emb = embed(Family::HexTri, {3});
        for (RocIndex idx : {RocIndex::JoinOrder, RocIndex::CellId})
            for (bool skip : {false, true}) {
                const auto r = roc(emb, Norm::finite(1), {.index = idx, .skip_loops = skip});
                CHECK(r.tree.size() == emb.graph.vertex_count() - 1);
                CHECK(r.value == doctest::Approx(lp_norm(edge_congestions(emb.graph, r.tree).values, Norm::finite(1))));
            }
    }
}
