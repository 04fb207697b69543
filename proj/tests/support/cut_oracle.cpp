#include "support/cut_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stc::testing {

std::vector<double> cut_congestions(const WeightedGraph& graph, std::span<const EdgeId> tree_edges)
{
    const int n = graph.vertex_count();
    std::vector<double> out;
    out.reserve(tree_edges.size());
    std::vector<char> side(static_cast<std::size_t>(n));
    std::vector<VertexId> stack;
    for (EdgeId cut : tree_edges) {
        std::fill(side.begin(), side.end(), 0);
        side[static_cast<std::size_t>(graph.edge(cut).u)] = 1;
        stack.assign(1, graph.edge(cut).u);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId t : tree_edges) {
                if (t == cut) continue;
                const Edge& e = graph.edge(t);
                VertexId y = kNoVertex;
                if (e.u == x) y = e.v;
                else if (e.v == x) y = e.u;
                if (y != kNoVertex && !side[static_cast<std::size_t>(y)]) {
                    side[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        double total = 0.0;
        for (const Edge& e : graph.edges())
            if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) total += e.w;
        out.push_back(total);
    }
    return out;
}

double cut_lp(const WeightedGraph& graph, std::span<const EdgeId> tree_edges, Norm p)
{
    const auto c = cut_congestions(graph, tree_edges);
    if (p.is_infinite()) return *std::max_element(c.begin(), c.end());
    double s = 0.0;
    for (double x : c) s += std::pow(x, p.order());
    return std::pow(s, 1.0 / p.order());
}

namespace {

template <class Visit>
void for_each_subset_tree(const WeightedGraph& graph, Visit visit)
{
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    const int k = n - 1;
    std::vector<EdgeId> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (k > m) return;
    while (true) {
        UnionFind uf(n);
        bool ok = true;
        for (EdgeId e : pick)
            if (!uf.unite(graph.edge(e).u, graph.edge(e).v)) {
                ok = false;
                break;
            }
        if (ok) visit(std::span<const EdgeId>(pick));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

double subset_min_lp(const WeightedGraph& graph, Norm p)
{
    double best = INFINITY;
    for_each_subset_tree(graph, [&](std::span<const EdgeId> t) { best = std::min(best, cut_lp(graph, t, p)); });
    return best;
}

std::uint64_t subset_tree_count(const WeightedGraph& graph)
{
    std::uint64_t count = 0;
    for_each_subset_tree(graph, [&](std::span<const EdgeId>) { ++count; });
    return count;
}

WeightedGraph random_connected(int n, double density, int max_weight, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, std::max(1, max_weight));
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<Edge> edges;
    auto add = [&](int u, int v) {
        if (u == v || adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return;
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        edges.push_back({std::min(u, v), std::max(u, v), static_cast<double>(weight(rng))});
    };
    for (int v = 1; v < n; ++v) add(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) add(u, v);
    std::shuffle(edges.begin(), edges.end(), rng);
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph random_cactus(int n, int max_weight, std::mt19937_64& rng)
{
    // Blocks hang off existing vertices and their new vertices are inserted
    // right after the attachment vertex in a circular order, so the drawing
    // with vertices on a circle in that order has no crossings.
    std::uniform_int_distribution<int> weight(1, std::max(1, max_weight));
    std::vector<int> order{0};
    std::vector<Edge> edges;
    int count = 1;
    while (count < n) {
        const int v = std::uniform_int_distribution<int>(0, count - 1)(rng);
        const int room = n - count;
        const int size = std::uniform_int_distribution<int>(1, std::min(room, 5))(rng);
        std::vector<int> fresh;
        for (int i = 0; i < size; ++i) fresh.push_back(count++);
        if (size == 1) {
            edges.push_back({v, fresh[0], static_cast<double>(weight(rng))});
        } else {
            int prev = v;
            for (int x : fresh) {
                edges.push_back({prev, x, static_cast<double>(weight(rng))});
                prev = x;
            }
            edges.push_back({prev, v, static_cast<double>(weight(rng))});
        }
        const auto at = std::find(order.begin(), order.end(), v);
        order.insert(at + 1, fresh.begin(), fresh.end());
    }
    std::vector<Point> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * i / n;
        coords[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = {std::cos(a), std::sin(a)};
    }
    return WeightedGraph(n, std::move(edges)).with_coordinates(std::move(coords));
}

}  // namespace stc::testing
