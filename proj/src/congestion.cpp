#include "stc/congestion.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stc {

Norm Norm::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return infinity();
    try {
        std::size_t used = 0;
        const int p = std::stoi(text, &used);
        if (used != text.size()) throw Error(ErrorCode::InvalidParams, "bad norm '" + text + "'");
        return finite(p);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidParams, "bad norm '" + text + "'");
    }
}

CongestionVector edge_congestions(const WeightedGraph& graph, const SpanningTree& tree)
{
    if (tree.graph_edge_count() != graph.edge_count() || tree.vertex_count() != graph.vertex_count())
        throw Error(ErrorCode::TreeGraphMismatch, "tree was built for a different graph");
    CongestionVector out;
    out.values.resize(static_cast<std::size_t>(tree.size()));
    const auto ids = tree.edge_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) out.values[i] = graph.edge(ids[i]).w;

    for (EdgeId f = 0; f < graph.edge_count(); ++f) {
        if (tree.contains(f)) continue;
        const Edge& ed = graph.edge(f);
        VertexId a = ed.u;
        VertexId b = ed.v;
        while (a != b) {
            if (tree.depth(a) < tree.depth(b)) std::swap(a, b);
            out.values[static_cast<std::size_t>(tree.position(tree.parent_edge(a)))] += ed.w;
            a = tree.parent(a);
        }
    }
    return out;
}

CongestionVector edge_congestions_parallel(const WeightedGraph& graph, const SpanningTree& tree)
{
    if (tree.graph_edge_count() != graph.edge_count() || tree.vertex_count() != graph.vertex_count())
        throw Error(ErrorCode::TreeGraphMismatch, "tree was built for a different graph");
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    std::vector<double> charge(static_cast<std::size_t>(n), 0.0);

#pragma omp parallel
    {
        std::vector<double> local(static_cast<std::size_t>(n), 0.0);
#pragma omp for schedule(static) nowait
        for (EdgeId f = 0; f < m; ++f) {
            if (tree.contains(f)) continue;
            const Edge& ed = graph.edge(f);
            VertexId a = ed.u;
            VertexId b = ed.v;
            while (a != b) {
                if (tree.depth(a) < tree.depth(b)) std::swap(a, b);
                a = tree.parent(a);
            }
            local[static_cast<std::size_t>(ed.u)] += ed.w;
            local[static_cast<std::size_t>(ed.v)] += ed.w;
            local[static_cast<std::size_t>(a)] -= 2.0 * ed.w;
        }
#pragma omp critical
        for (std::size_t i = 0; i < local.size(); ++i) charge[i] += local[i];
    }

    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return tree.depth(a) > tree.depth(b); });

    CongestionVector out;
    out.values.resize(static_cast<std::size_t>(tree.size()));
    for (VertexId v : order) {
        if (v == 0) continue;
        const EdgeId pe = tree.parent_edge(v);
        out.values[static_cast<std::size_t>(tree.position(pe))] = graph.edge(pe).w + charge[static_cast<std::size_t>(v)];
        charge[static_cast<std::size_t>(tree.parent(v))] += charge[static_cast<std::size_t>(v)];
    }
    return out;
}

double lp_norm(std::span<const double> values, Norm p)
{
    if (values.empty()) throw Error(ErrorCode::EmptyVector, "norm of an empty vector");
    if (p.is_infinite()) return *std::max_element(values.begin(), values.end());
    if (p.order() == 1) {
        long double s = 0;
        for (double v : values) s += v;
        return static_cast<double>(s);
    }
    long double s = 0;
    for (double v : values) s += std::pow(static_cast<long double>(v), p.order());
    return static_cast<double>(std::pow(s, 1.0L / p.order()));
}

SwapResult swap_update(const WeightedGraph& graph, const SpanningTree& tree, const CongestionVector& cong,
                       EdgeId insert, EdgeId remove)
{
    if (insert < 0 || insert >= graph.edge_count() || remove < 0 || remove >= graph.edge_count())
        throw Error(ErrorCode::TreeGraphMismatch, "edge id out of range");
    if (tree.contains(insert)) throw Error(ErrorCode::InsertAlreadyInTree, "edge " + std::to_string(insert));
    const Edge& chord = graph.edge(insert);
    const auto path = tree_path(tree, chord.u, chord.v);
    const auto it = std::find(path.begin(), path.end(), remove);
    if (it == path.end())
        throw Error(ErrorCode::RemoveNotOnCycle, "edge " + std::to_string(remove) + " is not on the cycle of " +
                                                     std::to_string(insert));
    const int removed = static_cast<int>(it - path.begin());

    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(graph.vertex_count()));
    for (EdgeId e : tree.edge_ids()) {
        adj[static_cast<std::size_t>(graph.edge(e).u)].push_back(e);
        adj[static_cast<std::size_t>(graph.edge(e).v)].push_back(e);
    }
    CycleExchange cx(graph);
    cx.load(insert, path, adj);

    std::vector<EdgeId> ids(tree.edge_ids().begin(), tree.edge_ids().end());
    const int slot = tree.position(remove);
    ids[static_cast<std::size_t>(slot)] = insert;

    SwapResult out{validate_tree(graph, ids), cong};
    const int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i) {
        if (i == removed) continue;
        out.congestion.values[static_cast<std::size_t>(tree.position(path[static_cast<std::size_t>(i)]))] =
            cx.congestion_after(removed, i);
    }
    out.congestion.values[static_cast<std::size_t>(slot)] = cx.congestion_after(removed, len);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Exact sums are kept below this so cross-multiplied mean comparisons with
// counts under 2^20 still fit in a signed 128-bit integer.
constexpr long double kExactLimit = 1.2676506002282294e30L;  // 2^100

__int128 ipow(__int128 base, int p)
{
    __int128 r = 1;
    for (int i = 0; i < p; ++i) r *= base;
    return r;
}

constexpr long double kRelativeMargin = 1e-12L;

}  // namespace

Objective::Objective(const WeightedGraph& graph, Norm p)
    : Objective(p, graph.integer_weights(), graph.total_weight(), std::max(1, graph.vertex_count() - 1))
{
}

Objective::Objective(Norm p, bool integer_weights, double total_weight, int terms) : norm_(p)
{
    if (!integer_weights) return;
    if (p.is_infinite()) {
        exact_ = true;
        return;
    }
    const long double bound = std::pow(static_cast<long double>(total_weight), p.order()) * terms;
    exact_ = bound < kExactLimit;
}

Objective::Score Objective::term(double c) const
{
    Score s;
    if (norm_.is_infinite()) {
        s.approx = c;
        if (exact_) s.exact = static_cast<__int128>(std::llround(c));
        return s;
    }
    s.approx = std::pow(static_cast<long double>(c), norm_.order());
    if (exact_) s.exact = ipow(static_cast<__int128>(std::llround(c)), norm_.order());
    return s;
}

void Objective::accumulate(Score& acc, double c) const
{
    const Score t = term(c);
    if (norm_.is_infinite()) {
        acc.approx = std::max(acc.approx, t.approx);
        acc.exact = std::max(acc.exact, t.exact);
    } else {
        acc.approx += t.approx;
        acc.exact += t.exact;
    }
}

Objective::Score Objective::aggregate(std::span<const double> values) const
{
    Score s;
    for (double v : values) accumulate(s, v);
    return s;
}

bool Objective::better(const Score& candidate, const Score& incumbent) const
{
    if (exact_) return candidate.exact < incumbent.exact;
    return candidate.approx < incumbent.approx - kRelativeMargin * std::fabs(incumbent.approx);
}

bool Objective::equal(const Score& a, const Score& b) const
{
    if (exact_) return a.exact == b.exact;
    return std::fabs(a.approx - b.approx) <= kRelativeMargin * std::max(std::fabs(a.approx), std::fabs(b.approx));
}

bool Objective::better_mean(const Score& cand, long long cand_count, const Score& inc, long long inc_count) const
{
    if (norm_.is_infinite()) return better(cand, inc);
    if (exact_) return cand.exact * inc_count < inc.exact * cand_count;
    const long double a = cand.approx / static_cast<long double>(cand_count);
    const long double b = inc.approx / static_cast<long double>(inc_count);
    return a < b - kRelativeMargin * std::fabs(b);
}

bool Objective::equal_mean(const Score& a, long long a_count, const Score& b, long long b_count) const
{
    if (norm_.is_infinite()) return equal(a, b);
    if (exact_) return a.exact * b_count == b.exact * a_count;
    const long double x = a.approx / static_cast<long double>(a_count);
    const long double y = b.approx / static_cast<long double>(b_count);
    return std::fabs(x - y) <= kRelativeMargin * std::max(std::fabs(x), std::fabs(y));
}

double Objective::value(const Score& s) const
{
    const long double raw = exact_ ? static_cast<long double>(s.exact) : s.approx;
    if (norm_.is_infinite() || norm_.order() == 1) return static_cast<double>(raw);
    return static_cast<double>(std::pow(raw, 1.0L / norm_.order()));
}

// ---------------------------------------------------------------------------

CycleExchange::CycleExchange(const WeightedGraph& graph)
    : graph_(&graph), comp_(static_cast<std::size_t>(graph.vertex_count()), -1)
{
}

void CycleExchange::load(EdgeId chord, std::span<const EdgeId> path, const std::vector<std::vector<EdgeId>>& tree_adj)
{
    const WeightedGraph& g = *graph_;
    path_len_ = static_cast<int>(path.size());
    const int k = path_len_ + 1;
    std::fill(comp_.begin(), comp_.end(), -1);

    // Path vertices w_0 = chord.u, ..., w_L = chord.v seed the components.
    VertexId w = g.edge(chord).u;
    std::vector<VertexId> seeds{w};
    for (EdgeId e : path) {
        w = g.other_end(e, w);
        seeds.push_back(w);
    }
    for (int c = 0; c < k; ++c) comp_[static_cast<std::size_t>(seeds[static_cast<std::size_t>(c)])] = c;
    for (int c = 0; c < k; ++c) {
        stack_.assign(1, seeds[static_cast<std::size_t>(c)]);
        while (!stack_.empty()) {
            const VertexId x = stack_.back();
            stack_.pop_back();
            for (EdgeId e : tree_adj[static_cast<std::size_t>(x)]) {
                const VertexId y = g.other_end(e, x);
                if (comp_[static_cast<std::size_t>(y)] >= 0) continue;  // path neighbours are pre-labelled
                comp_[static_cast<std::size_t>(y)] = c;
                stack_.push_back(y);
            }
        }
    }

    weight_.assign(static_cast<std::size_t>(k * k), 0.0);
    comp_deg_.assign(static_cast<std::size_t>(k), 0.0);
    for (const Edge& e : g.edges()) {
        const int a = comp_[static_cast<std::size_t>(e.u)];
        const int b = comp_[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        weight_[static_cast<std::size_t>(a * k + b)] += e.w;
        weight_[static_cast<std::size_t>(b * k + a)] += e.w;
        comp_deg_[static_cast<std::size_t>(a)] += e.w;
        comp_deg_[static_cast<std::size_t>(b)] += e.w;
    }

    const int d = 2 * k + 1;
    prefix_.assign(static_cast<std::size_t>(d * d), 0.0);
    for (int x = 0; x < 2 * k; ++x) {
        double row = 0.0;
        for (int y = 0; y < 2 * k; ++y) {
            row += weight_[static_cast<std::size_t>((x % k) * k + (y % k))];
            prefix_[static_cast<std::size_t>((x + 1) * d + (y + 1))] = prefix_[static_cast<std::size_t>(x * d + (y + 1))] + row;
        }
    }
}

double CycleExchange::interval_cut(int start, int len) const
{
    const int k = path_len_ + 1;
    const int d = 2 * k + 1;
    const int a = start;
    const int b = start + len;
    double deg = 0.0;
    for (int i = a; i < b; ++i) deg += comp_deg_[static_cast<std::size_t>(i % k)];
    const double square = prefix_[static_cast<std::size_t>(b * d + b)] - prefix_[static_cast<std::size_t>(a * d + b)] -
                          prefix_[static_cast<std::size_t>(b * d + a)] + prefix_[static_cast<std::size_t>(a * d + a)];
    return deg - square;
}

double CycleExchange::congestion_now(int i) const { return interval_cut(0, i + 1); }

double CycleExchange::congestion_after(int removed, int i) const
{
    const int start = removed + 1;
    if (i == path_len_) return interval_cut(start, path_len_ - removed);
    if (i > removed) return interval_cut(start, i - removed);
    return interval_cut(start, i - removed + path_len_ + 1);
}

}  // namespace stc
