#include "stc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stc/planar.hpp"

namespace stc {

namespace {

/// Unit-capacity max flow between s and t on an undirected graph. Each edge
/// is a pair of opposite arcs that serve as each other's residual.
int edge_disjoint_paths(const WeightedGraph& g, VertexId s, VertexId t)
{
    const int m = g.edge_count();
    std::vector<int> cap(static_cast<std::size_t>(2 * m), 1);
    auto tail = [&](int arc) { return (arc & 1) ? g.edge(arc / 2).v : g.edge(arc / 2).u; };
    std::vector<int> via(static_cast<std::size_t>(g.vertex_count()));
    int flow = 0;
    while (true) {
        std::fill(via.begin(), via.end(), -1);
        via[static_cast<std::size_t>(s)] = -2;
        std::vector<VertexId> queue{s};
        for (std::size_t head = 0; head < queue.size() && via[static_cast<std::size_t>(t)] == -1; ++head) {
            const VertexId x = queue[head];
            for (EdgeId e : g.incident(x)) {
                const int arc = g.edge(e).u == x ? 2 * e : 2 * e + 1;
                const VertexId y = g.other_end(e, x);
                if (cap[static_cast<std::size_t>(arc)] <= 0 || via[static_cast<std::size_t>(y)] != -1) continue;
                via[static_cast<std::size_t>(y)] = arc;
                queue.push_back(y);
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return flow;
        for (VertexId y = t; y != s;) {
            const int arc = via[static_cast<std::size_t>(y)];
            --cap[static_cast<std::size_t>(arc)];
            ++cap[static_cast<std::size_t>(arc ^ 1)];
            y = tail(arc);
        }
        ++flow;
    }
}

/// Greedy widest-path packing.
double widest_path_packing(const WeightedGraph& g, VertexId s, VertexId t)
{
    std::vector<char> gone(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<double> width(static_cast<std::size_t>(g.vertex_count()));
    std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()));
    double total = 0.0;
    while (true) {
        std::fill(width.begin(), width.end(), 0.0);
        std::fill(via.begin(), via.end(), kNoEdge);
        width[static_cast<std::size_t>(s)] = std::numeric_limits<double>::infinity();
        std::priority_queue<std::pair<double, VertexId>> heap;
        heap.push({width[static_cast<std::size_t>(s)], s});
        while (!heap.empty()) {
            const auto [w, x] = heap.top();
            heap.pop();
            if (w < width[static_cast<std::size_t>(x)]) continue;
            if (x == t) break;
            for (EdgeId e : g.incident(x)) {
                if (gone[static_cast<std::size_t>(e)]) continue;
                const VertexId y = g.other_end(e, x);
                const double nw = std::min(w, g.edge(e).w);
                if (nw > width[static_cast<std::size_t>(y)]) {
                    width[static_cast<std::size_t>(y)] = nw;
                    via[static_cast<std::size_t>(y)] = e;
                    heap.push({nw, y});
                }
            }
        }
        if (via[static_cast<std::size_t>(t)] == kNoEdge) return total;
        total += width[static_cast<std::size_t>(t)];
        for (VertexId y = t; y != s;) {
            const EdgeId e = via[static_cast<std::size_t>(y)];
            gone[static_cast<std::size_t>(e)] = 1;
            y = g.other_end(e, y);
        }
    }
}

WeightedGraph skeleton(const WeightedGraph& g)
{
    std::vector<double> ones(static_cast<std::size_t>(g.edge_count()), 1.0);
    return g.with_weights(ones);
}

void require_connected(const WeightedGraph& g)
{
    if (!g.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

}  // namespace

double m_bound(const WeightedGraph& graph, VertexId u, VertexId v, MMode mode)
{
    if (u == v) throw Error(ErrorCode::SameVertex, "m(u,u) is undefined");
    if (mode == MMode::Exact) {
        if (!graph.unweighted()) throw Error(ErrorCode::ExactModeOnWeighted, "exact m needs unit weights");
        return edge_disjoint_paths(graph, u, v);
    }
    return widest_path_packing(graph, u, v);
}

std::vector<double> m_keys(const WeightedGraph& graph, MMode mode)
{
    if (mode == MMode::Exact && !graph.unweighted())
        throw Error(ErrorCode::ExactModeOnWeighted, "exact m needs unit weights");
    std::vector<double> key(static_cast<std::size_t>(graph.edge_count()));
#pragma omp parallel for schedule(dynamic, 4)
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        key[static_cast<std::size_t>(e)] = m_bound(graph, graph.edge(e).u, graph.edge(e).v, mode);
    return key;
}

double max_m_bound(const WeightedGraph& graph, MMode mode)
{
    if (mode == MMode::Exact && !graph.unweighted())
        throw Error(ErrorCode::ExactModeOnWeighted, "exact m needs unit weights");
    const int n = graph.vertex_count();
    double best = 0.0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best)
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) best = std::max(best, m_bound(graph, u, v, mode));
    return best;
}

double max_m_bound_serial(const WeightedGraph& graph, MMode mode)
{
    double best = 0.0;
    for (VertexId u = 0; u < graph.vertex_count(); ++u)
        for (VertexId v = u + 1; v < graph.vertex_count(); ++v) best = std::max(best, m_bound(graph, u, v, mode));
    return best;
}

double kruskal_lower_bound(const WeightedGraph& graph, std::span<const double> key, Norm p)
{
    const SpanningTree t = kruskal(graph, key, true);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(t.size()));
    for (EdgeId e : t.edge_ids()) vals.push_back(key[static_cast<std::size_t>(e)]);
    if (vals.empty()) return 0.0;
    return lp_norm(vals, p);
}

double edge_count_lower_bound(const WeightedGraph& graph)
{
    std::vector<double> w(static_cast<std::size_t>(graph.edge_count()));
    for (EdgeId e = 0; e < graph.edge_count(); ++e) w[static_cast<std::size_t>(e)] = graph.edge(e).w;
    const SpanningTree t = kruskal(graph, w, false);
    double tree_weight = 0.0;
    for (EdgeId e : t.edge_ids()) tree_weight += graph.edge(e).w;
    return 2.0 * graph.total_weight() - tree_weight;
}

// ---------------------------------------------------------------------------

namespace {

struct CheegerScan {
    const WeightedGraph* g;
    std::vector<double> deg;
    CheegerResult res;

    explicit CheegerScan(const WeightedGraph& graph) : g(&graph)
    {
        const int n = graph.vertex_count();
        for (VertexId v = 0; v < n; ++v) deg.push_back(graph.weighted_degree(v));
        const double inf = std::numeric_limits<double>::infinity();
        res.phi = inf;
        res.phi_small_side = inf;
        res.per_edge.assign(static_cast<std::size_t>(graph.edge_count()), inf);
    }

    /// Visits Gray codes gray(i) for i in [begin, end); vertex n-1 stays in X^c.
    void run(std::uint64_t begin, std::uint64_t end)
    {
        const int n = g->vertex_count();
        std::vector<char> side(static_cast<std::size_t>(n), 0);
        const std::uint64_t start = begin ^ (begin >> 1);
        for (int v = 0; v + 1 < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<char>((start >> v) & 1U);
        for (std::uint64_t i = begin; i < end; ++i) {
            if (i != begin) {
                const int flip = __builtin_ctzll(i);
                side[static_cast<std::size_t>(flip)] ^= 1;
            }
            visit(side);
        }
    }

    void visit(const std::vector<char>& side)
    {
        const int n = g->vertex_count();
        double vol_x = 0.0;
        double vol_c = 0.0;
        int size_x = 0;
        for (int v = 0; v < n; ++v) {
            if (side[static_cast<std::size_t>(v)]) {
                vol_x += deg[static_cast<std::size_t>(v)];
                ++size_x;
            } else {
                vol_c += deg[static_cast<std::size_t>(v)];
            }
        }
        if (size_x == 0) return;
        double cut = 0.0;
        for (const Edge& e : g->edges())
            if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut += e.w;
        const double ratio = cut / std::min(vol_x, vol_c);
        res.phi = std::min(res.phi, ratio);
        if (2 * size_x <= n) res.phi_small_side = std::min(res.phi_small_side, cut / vol_x);
        if (2 * (n - size_x) <= n) res.phi_small_side = std::min(res.phi_small_side, cut / vol_c);
        for (EdgeId e = 0; e < g->edge_count(); ++e) {
            const Edge& ed = g->edge(e);
            if (side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)])
                res.per_edge[static_cast<std::size_t>(e)] = std::min(res.per_edge[static_cast<std::size_t>(e)], ratio);
        }
    }

    void merge(const CheegerResult& other)
    {
        res.phi = std::min(res.phi, other.phi);
        res.phi_small_side = std::min(res.phi_small_side, other.phi_small_side);
        for (std::size_t e = 0; e < res.per_edge.size(); ++e) res.per_edge[e] = std::min(res.per_edge[e], other.per_edge[e]);
    }
};

void check_cheeger_input(const WeightedGraph& graph)
{
    if (graph.vertex_count() > kCheegerMaxVertices)
        throw Error(ErrorCode::TooLarge, "Cheeger scan is capped at " + std::to_string(kCheegerMaxVertices) + " vertices");
    require_connected(graph);
}

CheegerResult finish(CheegerResult r, const WeightedGraph& graph)
{
    if (graph.vertex_count() == 1) {
        r.phi = 0.0;
        r.phi_small_side = 0.0;
    }
    return r;
}

}  // namespace

CheegerResult cheeger_bruteforce_serial(const WeightedGraph& graph)
{
    check_cheeger_input(graph);
    CheegerScan scan(graph);
    const std::uint64_t total = std::uint64_t{1} << (graph.vertex_count() - 1);
    scan.run(1, total);
    return finish(scan.res, graph);
}

CheegerResult cheeger_bruteforce(const WeightedGraph& graph)
{
    check_cheeger_input(graph);
    const std::uint64_t total = std::uint64_t{1} << (graph.vertex_count() - 1);
    CheegerScan global(graph);
    constexpr std::uint64_t kChunk = 1 << 12;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
#pragma omp parallel
    {
        CheegerScan local(graph);
#pragma omp for schedule(dynamic, 1) nowait
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t b = std::max<std::uint64_t>(1, c * kChunk);
            const std::uint64_t e = std::min(total, (c + 1) * kChunk);
            if (b < e) local.run(b, e);
        }
#pragma omp critical
        global.merge(local.res);
    }
    return finish(global.res, graph);
}

double cheeger_prefactor(const WeightedGraph& graph, CheegerPrefactor variant)
{
    const int n = graph.vertex_count();
    double delta_w = std::numeric_limits<double>::infinity();
    int max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        delta_w = std::min(delta_w, graph.weighted_degree(v));
        max_deg = std::max(max_deg, graph.degree(v));
    }
    const int diam = hop_diameter(graph);
    if (variant == CheegerPrefactor::EdgeCut) return delta_w;
    if (variant == CheegerPrefactor::Proposition)
        return delta_w * std::max(static_cast<double>(n - 1) / max_deg, std::floor(diam / 2.0));
    return delta_w / max_deg * std::max(static_cast<double>(n - 1), diam / 2.0);
}

double cheeger_lp_bound(const WeightedGraph& graph, const CheegerResult& cheeger, Norm p, CheegerPrefactor variant)
{
    return cheeger_prefactor(graph, variant) * kruskal_lower_bound(graph, cheeger.per_edge, p);
}

// ---------------------------------------------------------------------------

double BoundReport::best_lower() const
{
    double best = 0.0;
    for (const auto& e : entries)
        if (e.lower && e.counted) best = std::max(best, e.value);
    return best;
}

const BoundEntry* BoundReport::find(const std::string& name) const
{
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

BoundReport generic_bounds(const WeightedGraph& graph)
{
    require_connected(graph);
    const WeightedGraph unit = skeleton(graph);
    const bool counted = graph.unweighted();
    const int n = graph.vertex_count();
    const int m = graph.edge_count();

    BoundReport r;
    r.p = Norm::infinity();
    if (n > 1) r.entries.push_back({"edge_density", 2.0 * m / (n - 1) - 1.0, true, false, counted});
    r.entries.push_back({"cyclomatic_upper", static_cast<double>(m - n + 2), false, false, counted});
    if (n > 1) r.entries.push_back({"max_m", max_m_bound(unit, MMode::Exact), true, false, counted});
    if (n > 1 && n <= kCheegerMaxVertices) {
        const CheegerResult ch = cheeger_bruteforce(unit);
        int min_deg = m;
        int max_deg = 0;
        for (VertexId v = 0; v < n; ++v) {
            min_deg = std::min(min_deg, unit.degree(v));
            max_deg = std::max(max_deg, unit.degree(v));
        }
        const double factor = std::max(static_cast<double>(n - 1) / max_deg, std::floor(hop_diameter(unit) / 2.0));
        r.entries.push_back({"cheeger_classic", min_deg * ch.phi_small_side * factor, true, false, counted});
    }
    return r;
}

BoundReport all_bounds(const WeightedGraph& graph, Norm p, const BoundOptions& options)
{
    BoundReport r = generic_bounds(graph);
    r.p = p;
    const int n = graph.vertex_count();
    if (n == 1) return r;
    const bool unweighted = graph.unweighted();
    const MMode mode = unweighted ? MMode::Exact : MMode::Heuristic;

    if (!unweighted) r.entries.push_back({"max_m_weighted", max_m_bound(graph, mode), true, true, true});
    r.entries.push_back({"m_kruskal", kruskal_lower_bound(graph, m_keys(graph, mode), p), true, !unweighted, true});

    const double b1 = edge_count_lower_bound(graph);
    const double holder = p.is_infinite() ? static_cast<double>(n - 1)
                                          : std::pow(static_cast<double>(n - 1), 1.0 - 1.0 / p.order());
    r.entries.push_back({"edge_count", b1 / holder, true, false, true});

    if (options.cheeger && n <= kCheegerMaxVertices) {
        const CheegerResult ch = cheeger_bruteforce(graph);
        r.entries.push_back({"cheeger_global",
                             cheeger_prefactor(graph, CheegerPrefactor::InlineDisplay) * ch.phi, true, false, true});
        r.entries.push_back({"cheeger_local", cheeger_lp_bound(graph, ch, p, CheegerPrefactor::EdgeCut), true, false, true});
        r.entries.push_back(
            {"cheeger_local_scaled", cheeger_lp_bound(graph, ch, p, options.prefactor), true, false, false});
    }

    if (options.cycle_rank && graph.has_coordinates()) {
        try {
            const PlanarEmbedding emb = build_embedding(graph);
            const auto ranks = weighted_cycle_ranks(emb);
            r.entries.push_back({"cycle_rank_max", *std::max_element(ranks.begin(), ranks.end()), true, false, true});
            r.entries.push_back({"cycle_rank_kruskal", kruskal_lower_bound(graph, ranks, p), true, false, true});
        } catch (const Error&) {
            // Not a straight-line planar drawing; the planar bounds do not apply.
        }
    }
    return r;
}

}  // namespace stc
