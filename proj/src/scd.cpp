#include "stc/scd.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace stc {

namespace {

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void drop(std::vector<EdgeId>& list, EdgeId e)
{
    list.erase(std::find(list.begin(), list.end(), e));
}

}  // namespace

DescentTrace descend(const WeightedGraph& graph, const SpanningTree& start, Norm p, std::uint64_t seed,
                     std::optional<Norm> q)
{
    const Objective obj(graph, p);
    const int m = graph.edge_count();
    const int n = graph.vertex_count();

    SpanningTree tree = start;
    CongestionVector cong = edge_congestions(graph, tree);
    Objective::Score score = obj.aggregate(cong.values);

    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
    for (EdgeId e : tree.edge_ids()) {
        adj[static_cast<std::size_t>(graph.edge(e).u)].push_back(e);
        adj[static_cast<std::size_t>(graph.edge(e).v)].push_back(e);
    }
    std::vector<EdgeId> ids(tree.edge_ids().begin(), tree.edge_ids().end());

    DescentTrace trace;
    trace.congestion_history.push_back(obj.value(score));
    auto visit = [&] {
        if (!q) return;
        const double v = lp_norm(cong.values, *q);
        if (!trace.visited_q_best || v < trace.visited_q_best->value) trace.visited_q_best = VisitedBest{tree, v};
    };
    visit();

    std::mt19937_64 rng(mix(seed));
    std::vector<EdgeId> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    CycleExchange cx(graph);
    std::vector<double> fresh;

    bool improved = true;
    while (improved) {
        improved = false;
        ++trace.iterations;
        std::shuffle(order.begin(), order.end(), rng);
        for (EdgeId f : order) {
            if (tree.contains(f)) continue;
            ++trace.chord_scans;
            const Edge& chord = graph.edge(f);
            const auto path = tree_path(tree, chord.u, chord.v);
            const int len = static_cast<int>(path.size());
            cx.load(f, path, adj);

            Objective::Score old_local = obj.zero();
            for (EdgeId e : path) obj.accumulate(old_local, cong.values[static_cast<std::size_t>(tree.position(e))]);

            int best = -1;
            Objective::Score best_local;
            for (int r = 0; r < len; ++r) {
                Objective::Score local = obj.zero();
                for (int i = 0; i <= len; ++i)
                    if (i != r) obj.accumulate(local, cx.congestion_after(r, i));
                bool take = false;
                if (best < 0) {
                    take = true;
                } else if (obj.better(local, best_local)) {
                    take = true;
                } else if (obj.equal(local, best_local) && path[static_cast<std::size_t>(r)] < path[static_cast<std::size_t>(best)]) {
                    take = true;
                }
                if (take) {
                    best = r;
                    best_local = local;
                }
            }
            if (!obj.better(best_local, old_local)) continue;

            const EdgeId removed = path[static_cast<std::size_t>(best)];
            const int slot = tree.position(removed);
            fresh.assign(static_cast<std::size_t>(len + 1), 0.0);
            for (int i = 0; i <= len; ++i)
                if (i != best) fresh[static_cast<std::size_t>(i)] = cx.congestion_after(best, i);

            ids[static_cast<std::size_t>(slot)] = f;
            const Edge& gone = graph.edge(removed);
            drop(adj[static_cast<std::size_t>(gone.u)], removed);
            drop(adj[static_cast<std::size_t>(gone.v)], removed);
            adj[static_cast<std::size_t>(chord.u)].push_back(f);
            adj[static_cast<std::size_t>(chord.v)].push_back(f);
            const std::vector<int> positions = [&] {
                std::vector<int> pos(static_cast<std::size_t>(len));
                for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(i)] = tree.position(path[static_cast<std::size_t>(i)]);
                return pos;
            }();
            tree = validate_tree(graph, ids);

            if (obj.exact()) {
                for (int i = 0; i < len; ++i)
                    if (i != best) cong.values[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = fresh[static_cast<std::size_t>(i)];
                cong.values[static_cast<std::size_t>(slot)] = fresh[static_cast<std::size_t>(len)];
            } else {
                // Prefix-table differences accumulate rounding; resync exactly.
                cong = edge_congestions(graph, tree);
            }
            score = obj.aggregate(cong.values);
            ++trace.accepted_swaps;
            trace.congestion_history.push_back(obj.value(score));
            visit();
            improved = true;
        }
    }

    trace.best_tree = tree;
    trace.best_value = obj.value(score);
    trace.restart_values.push_back(trace.best_value);
    return trace;
}

DescentTrace scd(const WeightedGraph& graph, const ScdOptions& options)
{
    if (options.restarts < 1) throw Error(ErrorCode::InvalidParams, "restarts must be at least 1");
    if (!graph.connected()) throw Error(ErrorCode::Disconnected, "sCD needs a connected graph");
    if (options.initial_tree) validate_tree(graph, options.initial_tree->edge_ids());

    const int runs = options.restarts;
    std::vector<DescentTrace> traces(static_cast<std::size_t>(runs));
    auto run = [&](int r) {
        const std::uint64_t s = options.seed + static_cast<std::uint64_t>(r);
        const SpanningTree start = (r == 0 && options.initial_tree) ? *options.initial_tree
                                                                     : random_spanning_tree(graph, mix(s ^ 0x5bd1e995ULL));
        traces[static_cast<std::size_t>(r)] = descend(graph, start, options.p, s, options.q);
    };

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < runs; ++r) run(r);
    } else {
        for (int r = 0; r < runs; ++r) run(r);
    }

    int best = 0;
    for (int r = 1; r < runs; ++r)
        if (traces[static_cast<std::size_t>(r)].best_value < traces[static_cast<std::size_t>(best)].best_value) best = r;

    DescentTrace out = std::move(traces[static_cast<std::size_t>(best)]);
    out.best_restart = best;
    out.restart_values.clear();
    std::optional<VisitedBest> deep;
    for (int r = 0; r < runs; ++r) {
        const DescentTrace& t = r == best ? out : traces[static_cast<std::size_t>(r)];
        out.restart_values.push_back(t.best_value);
        if (t.visited_q_best && (!deep || t.visited_q_best->value < deep->value)) deep = t.visited_q_best;
    }
    out.visited_q_best = deep;
    return out;
}

DescentTrace scd_deep(const WeightedGraph& graph, Norm p, Norm q, std::uint64_t seed, int restarts)
{
    ScdOptions options;
    options.p = p;
    options.q = q;
    options.seed = seed;
    options.restarts = restarts;
    return scd(graph, options);
}

std::optional<Swap> find_improving_swap(const WeightedGraph& graph, const SpanningTree& tree, Norm p)
{
    const Objective obj(graph, p);
    const CongestionVector cong = edge_congestions(graph, tree);
    const Objective::Score total = obj.aggregate(cong.values);
    std::vector<EdgeId> ids(tree.edge_ids().begin(), tree.edge_ids().end());

    for (EdgeId f = 0; f < graph.edge_count(); ++f) {
        if (tree.contains(f)) continue;
        const auto path = tree_path(tree, graph.edge(f).u, graph.edge(f).v);
        Objective::Score old_local = obj.zero();
        for (EdgeId e : path) obj.accumulate(old_local, cong.values[static_cast<std::size_t>(tree.position(e))]);
        for (EdgeId r : path) {
            std::vector<EdgeId> next = ids;
            const int slot = tree.position(r);
            next[static_cast<std::size_t>(slot)] = f;
            const SpanningTree t2 = validate_tree(graph, next);
            const CongestionVector c2 = edge_congestions(graph, t2);
            bool gain = false;
            if (p.is_infinite()) {
                Objective::Score local = obj.term(c2.values[static_cast<std::size_t>(slot)]);
                for (EdgeId e : path)
                    if (e != r) obj.accumulate(local, c2.values[static_cast<std::size_t>(t2.position(e))]);
                gain = obj.better(local, old_local);
            } else {
                gain = obj.better(obj.aggregate(c2.values), total);
            }
            if (gain) return Swap{f, r};
        }
    }
    return std::nullopt;
}

}  // namespace stc
