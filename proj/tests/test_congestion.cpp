#include <cmath>
#include <random>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/oracle.hpp"
#include "support/cut_oracle.hpp"
#include "support/graphs.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

std::vector<double> congestions(const WeightedGraph& g, std::initializer_list<EdgeId> t)
{
    return edge_congestions(g, validate_tree(g, std::vector<EdgeId>(t))).values;
}

}  // namespace

TEST_SUITE("congestion")
{
    TEST_CASE("edge congestions of small trees")
    {
        CHECK(congestions(square(), {0, 1, 2}) == std::vector<double>{2, 2, 2});
        CHECK(congestions(weighted_triangle(), {0, 2}) == std::vector<double>{2, 3});
        CHECK(congestions(path3(), {0, 1}) == std::vector<double>{1, 1});
        // K_4 path 0-1-2-3: ids 01=0, 12=3, 23=5.
        CHECK(congestions(complete(4), {0, 3, 5}) == std::vector<double>{3, 4, 3});
    }

    TEST_CASE("the parallel evaluation agrees with the path accumulation")
    {
        std::mt19937_64 rng(3);
        for (int round = 0; round < 100; ++round) {
            const WeightedGraph g = random_connected(12, 0.3, round % 2 ? 7 : 1, rng);
            const SpanningTree t = random_spanning_tree(g, static_cast<std::uint64_t>(round));
            CHECK(edge_congestions_parallel(g, t).values == edge_congestions(g, t).values);
        }
    }

    TEST_CASE("congestion equals the cut definition and satisfies the sum identity")
    {
        std::mt19937_64 rng(4);
        for (int round = 0; round < 100; ++round) {
            const WeightedGraph g = random_connected(10, 0.35, 9, rng);
            const SpanningTree t = random_spanning_tree(g, static_cast<std::uint64_t>(round) * 7);
            const auto c = edge_congestions(g, t).values;
            CHECK(c == cut_congestions(g, t.edge_ids()));
            double lhs = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                CHECK(c[i] >= g.edge(t.edge_ids()[i]).w);
                lhs += c[i];
            }
            double rhs = 0.0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                rhs += g.edge(e).w *
                       (t.contains(e) ? 1.0 : static_cast<double>(tree_path(t, g.edge(e).u, g.edge(e).v).size()));
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("lp norms")
    {
        const std::vector<double> v{2, 2, 2};
        CHECK(lp_norm(v, Norm::finite(1)) == 6.0);
        CHECK(lp_norm(v, Norm::infinity()) == 2.0);
        CHECK(lp_norm(std::vector<double>{3, 4}, Norm::finite(2)) == doctest::Approx(5.0));
        CHECK_THROWS_AS(lp_norm(std::vector<double>{}, Norm::finite(1)), Error);
        CHECK(Norm::parse("inf").is_infinite());
        CHECK(Norm::parse("infinity").is_infinite());
        CHECK(Norm::parse("3").order() == 3);
        CHECK_THROWS_AS(Norm::parse("0"), Error);
        CHECK_THROWS_AS(Norm::parse("1.5"), Error);
        CHECK_THROWS_AS(Norm::parse("x"), Error);
    }

    TEST_CASE("swap update examples")
    {
        const WeightedGraph c4 = square();
        const SpanningTree t = validate_tree(c4, std::vector<EdgeId>{0, 1, 2});
        const auto r = swap_update(c4, t, edge_congestions(c4, t), 3, 0);
        CHECK(r.tree.sorted_edge_ids() == std::vector<EdgeId>{1, 2, 3});
        CHECK(r.congestion.values == std::vector<double>{2, 2, 2});
        CHECK(r.tree.edge_ids()[0] == 3);

        const WeightedGraph k4 = complete(4);
        const SpanningTree path = validate_tree(k4, std::vector<EdgeId>{0, 3, 5});
        const auto s = swap_update(k4, path, edge_congestions(k4, path), 1, 3);
        CHECK(s.congestion.values == edge_congestions(k4, s.tree).values);

        const WeightedGraph tri = weighted_triangle();
        const SpanningTree tt = validate_tree(tri, std::vector<EdgeId>{0, 1});
        const auto u = swap_update(tri, tt, edge_congestions(tri, tt), 2, 1);
        CHECK(u.tree.sorted_edge_ids() == std::vector<EdgeId>{0, 2});
        CHECK(u.congestion.values == std::vector<double>{2, 3});

        try {
            swap_update(c4, t, edge_congestions(c4, t), 1, 0);
            FAIL("expected InsertAlreadyInTree");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InsertAlreadyInTree);
        }
        const SpanningTree kt = validate_tree(k4, std::vector<EdgeId>{0, 1, 2});
        try {
            // 12 closes the cycle 0-1-2 which does not use 03.
            swap_update(k4, kt, edge_congestions(k4, kt), 3, 2);
            FAIL("expected RemoveNotOnCycle");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::RemoveNotOnCycle);
        }
    }

    TEST_CASE("raising one weight never lowers a congestion")
    {
        std::mt19937_64 rng(8);
        for (int round = 0; round < 50; ++round) {
            const WeightedGraph g = random_connected(8, 0.4, 5, rng);
            const SpanningTree t = random_spanning_tree(g, static_cast<std::uint64_t>(round));
            std::vector<double> w;
            for (const Edge& e : g.edges()) w.push_back(e.w);
            w[static_cast<std::size_t>(round % g.edge_count())] += 3.0;
            const WeightedGraph h = g.with_weights(w);
            const auto before = edge_congestions(g, t).values;
            const auto after = edge_congestions(h, validate_tree(h, t.edge_ids())).values;
            for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] >= before[i]);
        }
    }

    TEST_CASE("objective comparisons")
    {
        const Objective exact(Norm::finite(2), true, 100.0, 10);
        CHECK(exact.exact());
        const auto a = exact.aggregate(std::vector<double>{3, 4});
        const auto b = exact.aggregate(std::vector<double>{5});
        CHECK(exact.equal(a, b));
        CHECK_FALSE(exact.better(a, b));
        CHECK(exact.value(a) == doctest::Approx(5.0));
        CHECK(exact.better_mean(a, 2, b, 1));

        const Objective inf(Norm::infinity(), true, 100.0, 10);
        CHECK(inf.value(inf.aggregate(std::vector<double>{3, 7, 2})) == 7.0);

        const Objective flt(Norm::finite(1), false, 100.0, 10);
        CHECK_FALSE(flt.exact());
        const auto x = flt.aggregate(std::vector<double>{1.0});
        const auto y = flt.aggregate(std::vector<double>{1.0 + 1e-15});
        CHECK_FALSE(flt.better(x, y));
        CHECK(flt.equal(x, y));
    }
}
