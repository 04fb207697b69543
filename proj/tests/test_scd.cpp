#include <random>

#include "doctest.h"
#include "stc/families.hpp"
#include "stc/scd.hpp"
#include "support/cut_oracle.hpp"
#include "support/graphs.hpp"

using namespace stc;
using namespace stc::testing;

TEST_SUITE("scd")
{
    TEST_CASE("complete graph descends to a radial tree")
    {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto r = scd(complete(4), {.p = Norm::infinity(), .seed = seed, .restarts = 1});
            CHECK(r.best_value == 3.0);
        }
    }

    TEST_CASE("every tree of C_4 is already optimal for p = 1")
    {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto r = scd(square(), {.p = Norm::finite(1), .seed = seed, .restarts = 1});
            CHECK(r.best_value == 6.0);
            CHECK(r.accepted_swaps == 0);
            CHECK(r.congestion_history.size() == 1);
        }
    }

    TEST_CASE("initial tree is used by the first restart")
    {
        const WeightedGraph k5 = complete(5);
        const SpanningTree radial = validate_tree(k5, std::vector<EdgeId>{0, 1, 2, 3});
        const auto r = scd(k5, {.p = Norm::finite(1), .seed = 0, .restarts = 1, .initial_tree = radial});
        CHECK(r.accepted_swaps == 0);
        CHECK(r.best_tree.sorted_edge_ids() == radial.sorted_edge_ids());
        CHECK(r.best_value == 16.0);
    }

    TEST_CASE("descent is monotone, deterministic and ends in a local minimum")
    {
        std::mt19937_64 rng(21);
        for (int round = 0; round < 30; ++round) {
            const WeightedGraph g = random_connected(10, 0.4, round % 3 == 0 ? 1 : 6, rng);
            const Norm p = round % 2 ? Norm::finite(1 + round % 3) : Norm::infinity();
            const ScdOptions opt{.p = p, .seed = static_cast<std::uint64_t>(round), .restarts = 3};
            const auto a = scd(g, opt);
            const auto b = scd(g, opt);
            CHECK(a.best_tree.sorted_edge_ids() == b.best_tree.sorted_edge_ids());
            CHECK(a.congestion_history == b.congestion_history);
            CHECK(a.restart_values == b.restart_values);

            const auto& h = a.congestion_history;
            for (std::size_t i = 1; i < h.size(); ++i) {
                if (p.is_infinite())
                    CHECK(h[i] <= h[i - 1]);
                else
                    CHECK(h[i] < h[i - 1]);
            }
            CHECK(a.best_value == doctest::Approx(cut_lp(g, a.best_tree.edge_ids(), p)));
            CHECK_FALSE(find_improving_swap(g, a.best_tree, p).has_value());
        }
    }

    TEST_CASE("serial and parallel restarts agree")
    {
        std::mt19937_64 rng(2);
        const WeightedGraph g = random_connected(14, 0.3, 4, rng);
        ScdOptions opt{.p = Norm::finite(2), .seed = 9, .restarts = 4};
        const auto par = scd(g, opt);
        opt.parallel = false;
        const auto ser = scd(g, opt);
        CHECK(par.best_tree.sorted_edge_ids() == ser.best_tree.sorted_edge_ids());
        CHECK(par.restart_values == ser.restart_values);
        CHECK(par.best_restart == ser.best_restart);
    }

    TEST_CASE("deep variant tracks the best secondary norm on the path")
    {
        FamilySpec spec{.family = Family::Multipartite, .sizes = {3, 2, 2, 1}};
        const WeightedGraph g = generate(spec);
        const auto deep = scd_deep(g, Norm::finite(10), Norm::infinity(), 1, 10);
        const auto plain = scd(g, {.p = Norm::infinity(), .seed = 1, .restarts = 10});
        REQUIRE(deep.visited_q_best.has_value());
        CHECK(deep.visited_q_best->value <= plain.best_value);
        CHECK(deep.visited_q_best->value ==
              lp_norm(edge_congestions(g, deep.visited_q_best->tree).values, Norm::infinity()));

        std::mt19937_64 rng(6);
        const WeightedGraph h = random_connected(9, 0.5, 3, rng);
        const auto same = scd_deep(h, Norm::finite(2), Norm::finite(2), 4, 3);
        REQUIRE(same.visited_q_best.has_value());
        CHECK(same.visited_q_best->value == doctest::Approx(same.best_value));
    }

    TEST_CASE("disconnected input is rejected")
    {
        const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        CHECK_THROWS_AS(scd(split, {}), Error);
    }
}
