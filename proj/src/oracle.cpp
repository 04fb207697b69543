#include "stc/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace stc {

namespace {

std::vector<std::vector<long double>> reduced_laplacian(const WeightedGraph& g)
{
    const int n = g.vertex_count();
    std::vector<std::vector<long double>> a(static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        a[e.u][e.u] += 1;
        a[e.v][e.v] += 1;
        a[e.u][e.v] -= 1;
        a[e.v][e.u] -= 1;
    }
    a.erase(a.begin());
    for (auto& row : a) row.erase(row.begin());
    return a;
}

// Union-find with undo for the enumeration recursion.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1)
    {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) const
    {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }
    void undo()
    {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }
    const std::vector<int>& parents() const { return parent_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class Enumerator {
public:
    Enumerator(const WeightedGraph& g, const std::function<void(std::span<const EdgeId>)>& visit)
        : g_(g), visit_(visit), dsu_(g.vertex_count())
    {
    }

    std::uint64_t run()
    {
        if (g_.vertex_count() == 1) {
            visit_({});
            return 1;
        }
        step(0);
        return count_;
    }

private:
    // Could the chosen forest plus edges >= from still span the graph?
    bool completable(int from) const
    {
        UnionFind uf(g_.vertex_count());
        const auto& par = dsu_.parents();
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (par[static_cast<std::size_t>(v)] != v) uf.unite(v, par[static_cast<std::size_t>(v)]);
        for (int e = from; e < g_.edge_count() && uf.components() > 1; ++e) uf.unite(g_.edge(e).u, g_.edge(e).v);
        return uf.components() == 1;
    }

    void step(int i)
    {
        if (static_cast<int>(chosen_.size()) == g_.vertex_count() - 1) {
            ++count_;
            visit_(chosen_);
            return;
        }
        if (i == g_.edge_count()) return;
        const Edge& e = g_.edge(i);
        if (dsu_.unite(e.u, e.v)) {
            chosen_.push_back(i);
            step(i + 1);
            chosen_.pop_back();
            dsu_.undo();
            if (completable(i + 1)) step(i + 1);
        } else {
            step(i + 1);
        }
    }

    const WeightedGraph& g_;
    const std::function<void(std::span<const EdgeId>)>& visit_;
    RollbackDsu dsu_;
    std::vector<EdgeId> chosen_;
    std::uint64_t count_ = 0;
};

}  // namespace

long double matrix_tree_count(const WeightedGraph& graph)
{
    if (graph.vertex_count() <= 1) return 1;
    auto a = reduced_laplacian(graph);
    const std::size_t n = a.size();
    long double det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (a[piv][c] == 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return std::round(det);
}

__int128 matrix_tree_count_exact(const WeightedGraph& graph)
{
    if (graph.vertex_count() <= 1) return 1;
    const auto l = reduced_laplacian(graph);
    const std::size_t n = l.size();
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = static_cast<__int128>(l[r][c]);
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[r], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::uint64_t enumerate_spanning_trees(const WeightedGraph& graph, double cap,
                                       const std::function<void(std::span<const EdgeId>)>& visit)
{
    if (!graph.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
    const long double expected = matrix_tree_count(graph);
    if (expected > cap) throw CapExceededError(static_cast<double>(expected), cap);
    return Enumerator(graph, visit).run();
}

OracleResult exact_lp_stc(const WeightedGraph& graph, Norm p, double cap)
{
    const Objective obj(graph, p);
    constexpr std::size_t kBatch = 4096;
    std::vector<std::vector<EdgeId>> batch;
    std::vector<Objective::Score> scores;
    OracleResult out;
    bool have = false;
    Objective::Score best{};

    auto flush = [&] {
        scores.assign(batch.size(), Objective::Score{});
        const long long count = static_cast<long long>(batch.size());
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < count; ++t) {
            const SpanningTree tree = validate_tree(graph, batch[static_cast<std::size_t>(t)]);
            scores[static_cast<std::size_t>(t)] = obj.aggregate(edge_congestions(graph, tree).values);
        }
        for (std::size_t t = 0; t < batch.size(); ++t) {
            if (!have || obj.better(scores[t], best)) {
                have = true;
                best = scores[t];
                out.optimal.assign(1, batch[t]);
            } else if (obj.equal(scores[t], best)) {
                out.optimal.push_back(batch[t]);
            }
        }
        batch.clear();
    };

    out.trees = enumerate_spanning_trees(graph, cap, [&](std::span<const EdgeId> ids) {
        batch.emplace_back(ids.begin(), ids.end());
        if (batch.size() == kBatch) flush();
    });
    flush();
    out.value = obj.value(best);
    out.witness = validate_tree(graph, out.optimal.front());
    return out;
}

double total_stretch(const WeightedGraph& graph, const SpanningTree& tree)
{
    if (tree.graph_edge_count() != graph.edge_count() || tree.vertex_count() != graph.vertex_count())
        throw Error(ErrorCode::TreeGraphMismatch, "tree does not belong to this graph");
    double total = 0.0;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (tree.contains(e)) continue;
        const Edge& ed = graph.edge(e);
        double len = 0.0;
        for (EdgeId f : tree_path(tree, ed.u, ed.v)) len += graph.edge(f).w;
        total += len / ed.w;
    }
    return total;
}

}  // namespace stc
