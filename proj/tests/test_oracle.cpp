#include <cmath>
#include <random>

#include "doctest.h"
#include "stc/families.hpp"
#include "stc/oracle.hpp"
#include "support/cut_oracle.hpp"
#include "support/graphs.hpp"

using namespace stc;
using namespace stc::testing;

TEST_SUITE("oracle")
{
    TEST_CASE("tree counts")
    {
        auto count = [](const WeightedGraph& g) { return enumerate_spanning_trees(g, 1e7, [](std::span<const EdgeId>) {}); };
        CHECK(count(square()) == 4);
        CHECK(count(complete(4)) == 16);
        CHECK(count(complete(5)) == 125);
        CHECK(count(path3()) == 1);
        CHECK(count(WeightedGraph(1, {})) == 1);
        CHECK(static_cast<long long>(matrix_tree_count_exact(complete(6))) == 1296);
        CHECK(matrix_tree_count(complete(6)) == doctest::Approx(1296.0));
    }

    TEST_CASE("enumeration agrees with the matrix-tree count and the subset scan")
    {
        std::mt19937_64 rng(41);
        for (int round = 0; round < 60; ++round) {
            const int n = 3 + round % 8;
            const WeightedGraph g = random_connected(n, 0.45, 1, rng);
            std::vector<std::vector<EdgeId>> seen;
            const auto c = enumerate_spanning_trees(g, 1e7, [&](std::span<const EdgeId> t) {
                seen.emplace_back(t.begin(), t.end());
            });
            CHECK(c == static_cast<std::uint64_t>(matrix_tree_count_exact(g)));
            CHECK(std::is_sorted(seen.begin(), seen.end()));
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            if (g.edge_count() <= 20) CHECK(c == subset_tree_count(g));
        }
    }

    TEST_CASE("multigraph counts include parallel edges")
    {
        const WeightedGraph d(2, {{0, 1, 1.0}, {0, 1, 1.0}, {0, 1, 2.0}, {1, 1, 1.0}}, true);
        CHECK(enumerate_spanning_trees(d, 100, [](std::span<const EdgeId>) {}) == 3);
        CHECK(static_cast<long long>(matrix_tree_count_exact(d)) == 3);
    }

    TEST_CASE("exact optima of small graphs")
    {
        CHECK(exact_lp_stc(square(), Norm::infinity()).value == 2.0);
        CHECK(exact_lp_stc(square(), Norm::finite(1)).value == 6.0);
        CHECK(exact_lp_stc(square(), Norm::infinity()).optimal.size() == 4);
        CHECK(exact_lp_stc(complete(5), Norm::infinity()).value == 4.0);
        const auto tri = exact_lp_stc(weighted_triangle(), Norm::finite(1));
        CHECK(tri.value == 5.0);
        CHECK(tri.witness.sorted_edge_ids() == std::vector<EdgeId>{0, 2});
        CHECK(tri.trees == 3);
    }

    TEST_CASE("table of classical values")
    {
        for (int n = 2; n <= 6; ++n) CHECK(exact_lp_stc(complete(n), Norm::infinity()).value == n - 1);
        for (int a = 2; a <= 3; ++a)
            for (int b = 2; b <= 3; ++b) CHECK(exact_lp_stc(complete_bipartite(a, b), Norm::infinity()).value == a + b - 2);
        CHECK(exact_lp_stc(generate({.family = Family::RectGrid, .sizes = {4, 4}}), Norm::infinity()).value == 4.0);
        CHECK(exact_lp_stc(generate({.family = Family::TriGrid, .sizes = {3}}), Norm::infinity()).value == 4.0);
    }

    TEST_CASE("cap and connectivity errors")
    {
        try {
            exact_lp_stc(complete(25), Norm::infinity());
            FAIL("expected CapExceeded");
        } catch (const CapExceededError& e) {
            CHECK(e.code() == ErrorCode::CapExceeded);
            CHECK(e.expected_count() == doctest::Approx(std::pow(25.0, 23.0)).epsilon(1e-6));
        }
        CHECK_THROWS_AS(exact_lp_stc(complete(5), Norm::infinity(), 100), CapExceededError);
        const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        try {
            enumerate_spanning_trees(split, 10, [](std::span<const EdgeId>) {});
            FAIL("expected Disconnected");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Disconnected);
        }
    }

    TEST_CASE("optimum matches the independent subset scan")
    {
        std::mt19937_64 rng(42);
        for (int round = 0; round < 40; ++round) {
            const WeightedGraph g = random_connected(4 + round % 4, 0.5, 5, rng);
            for (Norm p : {Norm::infinity(), Norm::finite(1), Norm::finite(2)}) {
                const auto r = exact_lp_stc(g, p);
                CHECK(r.value == doctest::Approx(subset_min_lp(g, p)));
                CHECK(cut_lp(g, r.witness.edge_ids(), p) == doctest::Approx(r.value));
                CHECK(r.optimal.front() == r.witness.sorted_edge_ids());
            }
        }
    }

    TEST_CASE("scaling every weight scales the optimum")
    {
        std::mt19937_64 rng(43);
        for (int round = 0; round < 20; ++round) {
            const WeightedGraph g = random_connected(6, 0.5, 4, rng);
            std::vector<double> w;
            for (const Edge& e : g.edges()) w.push_back(3.0 * e.w);
            const WeightedGraph h = g.with_weights(w);
            for (Norm p : {Norm::infinity(), Norm::finite(1), Norm::finite(3)}) {
                const auto a = exact_lp_stc(g, p);
                const auto b = exact_lp_stc(h, p);
                CHECK(b.value == doctest::Approx(3.0 * a.value));
                CHECK(a.optimal == b.optimal);
            }
        }
    }

    TEST_CASE("total stretch")
    {
        const WeightedGraph c4 = square();
        for (auto t : {std::vector<EdgeId>{0, 1, 2}, std::vector<EdgeId>{1, 2, 3}})
            CHECK(total_stretch(c4, validate_tree(c4, t)) == 3.0);
        const WeightedGraph tri = weighted_triangle();
        CHECK(total_stretch(tri, validate_tree(tri, std::vector<EdgeId>{0, 1})) == 1.0);
        CHECK(total_stretch(tri, validate_tree(tri, std::vector<EdgeId>{0, 2})) == 3.0);
        const WeightedGraph p3 = path3();
        CHECK(total_stretch(p3, validate_tree(p3, std::vector<EdgeId>{0, 1})) == 0.0);
        CHECK_THROWS_AS(total_stretch(complete(4), validate_tree(c4, std::vector<EdgeId>{0, 1, 2})), Error);
    }
}
