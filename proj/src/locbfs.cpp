#include "stc/locbfs.hpp"

#include <algorithm>
#include <map>

#include "detail/growing_tree.hpp"

namespace stc {

namespace {

/// Computable congestions of a growing dual tree, aggregated under a norm.
/// Finite p keeps the sum of p-th powers; p = inf keeps a value histogram so
/// the maximum survives removals.
class Tally {
public:
    explicit Tally(const Objective& obj) : obj_(&obj) {}

    void add(double c)
    {
        const auto t = obj_->term(c);
        sum_.exact += t.exact;
        sum_.approx += t.approx;
        ++hist_[c];
        ++count_;
    }

    void remove(double c)
    {
        const auto t = obj_->term(c);
        sum_.exact -= t.exact;
        sum_.approx -= t.approx;
        auto it = hist_.find(c);
        if (--it->second == 0) hist_.erase(it);
        --count_;
    }

    long long count() const noexcept { return count_; }

    Objective::Score score() const
    {
        if (!obj_->norm().is_infinite()) return sum_;
        return hist_.empty() ? Objective::Score{} : obj_->term(hist_.rbegin()->first);
    }

    /// Score after replacing `out` (values currently present) by `in`.
    Objective::Score score_after(const std::vector<double>& out, const std::vector<double>& in) const
    {
        if (!obj_->norm().is_infinite()) {
            Objective::Score s = sum_;
            for (double c : out) {
                const auto t = obj_->term(c);
                s.exact -= t.exact;
                s.approx -= t.approx;
            }
            for (double c : in) obj_->accumulate(s, c);
            return s;
        }
        Objective::Score s{};
        for (double c : in) obj_->accumulate(s, c);
        for (auto it = hist_.rbegin(); it != hist_.rend(); ++it) {
            const long long gone = std::count(out.begin(), out.end(), it->first);
            if (it->second > gone) {
                obj_->accumulate(s, it->first);
                break;
            }
        }
        return s;
    }

private:
    const Objective* obj_;
    Objective::Score sum_{};
    std::map<double, int> hist_;
    long long count_ = 0;
};

struct Evaluated {
    Objective::Score score;
    long long count = 0;
};

/// Aggregate of the computable congestions of a partial dual tree.
Evaluated evaluate_partial(const WeightedGraph& dg, const std::vector<EdgeId>& tree_edges, int root, const Objective& obj)
{
    const int n = dg.vertex_count();
    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
    std::vector<char> in_tree(static_cast<std::size_t>(dg.edge_count()), 0);
    for (EdgeId e : tree_edges) {
        adj[static_cast<std::size_t>(dg.edge(e).u)].push_back(e);
        adj[static_cast<std::size_t>(dg.edge(e).v)].push_back(e);
        in_tree[static_cast<std::size_t>(e)] = 1;
    }
    detail::GrowingTree t(dg, root);
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (EdgeId e : adj[static_cast<std::size_t>(x)]) {
            const VertexId y = dg.other_end(e, x);
            if (t.contains(y)) {
                if (t.parent_edge[static_cast<std::size_t>(x)] != e)
                    throw Error(ErrorCode::InvalidParams, "partial dual tree contains a cycle");
                continue;
            }
            t.attach(y, e);
            queue.push_back(y);
        }
    }
    if (queue.size() != tree_edges.size() + 1) throw Error(ErrorCode::InvalidParams, "partial dual tree is not connected to the root");

    Evaluated out;
    for (EdgeId f = 0; f < dg.edge_count(); ++f) {
        if (in_tree[static_cast<std::size_t>(f)]) continue;
        const Edge& fe = dg.edge(f);
        if (!t.contains(fe.u) || !t.contains(fe.v)) continue;
        obj.accumulate(out.score, fe.w + t.distance(fe.u, fe.v));
        ++out.count;
    }
    return out;
}

}  // namespace

double relative_congestion(const PlanarEmbedding& embedding, const PartialDualTree& tree, int root, Norm p)
{
    const DualGraph d = dual(embedding);
    const Objective obj(d.graph, p);
    const Evaluated ev = evaluate_partial(d.graph, tree.edges, root, obj);
    if (ev.count == 0) throw Error(ErrorCode::NoBoundaryEdges, "no computable dual edges");
    const long double raw = obj.exact() ? static_cast<long double>(ev.score.exact) : ev.score.approx;
    if (p.is_infinite()) return static_cast<double>(raw);
    return static_cast<double>(raw / static_cast<long double>(ev.count));
}

std::vector<EdgeId> locbfs_dual_tree(const PlanarEmbedding& embedding, const DualGraph& d, int root, Norm p)
{
    (void)embedding;
    const WeightedGraph& dg = d.graph;
    const Objective obj(dg, p);
    const auto level = bfs_distances(dg, root);
    const int depth_max = *std::max_element(level.begin(), level.end());
    std::vector<std::vector<VertexId>> by_level(static_cast<std::size_t>(depth_max + 1));
    for (VertexId c = 0; c < dg.vertex_count(); ++c) by_level[static_cast<std::size_t>(level[static_cast<std::size_t>(c)])].push_back(c);

    detail::GrowingTree t(dg, root);
    Tally tally(obj);
    std::vector<double> value(static_cast<std::size_t>(dg.edge_count()), 0.0);
    auto congestion = [&](EdgeId f) {
        const Edge& fe = dg.edge(f);
        return fe.w + t.distance(fe.u, fe.v);
    };
    auto level_of = [&](VertexId c) { return level[static_cast<std::size_t>(c)]; };

    // Loops at the root are computable from the start.
    for (EdgeId f : dg.incident(root))
        if (dg.edge(f).u == dg.edge(f).v) {
            value[static_cast<std::size_t>(f)] = congestion(f);
            tally.add(value[static_cast<std::size_t>(f)]);
        }

    std::vector<std::vector<EdgeId>> back(static_cast<std::size_t>(dg.vertex_count()));
    std::vector<std::vector<EdgeId>> side(static_cast<std::size_t>(dg.vertex_count()));
    std::vector<double> out_vals;
    std::vector<double> in_vals;

    for (int k = 1; k <= depth_max; ++k) {
        const auto& frontier = by_level[static_cast<std::size_t>(k)];
        for (VertexId u : frontier) {
            for (EdgeId f : dg.incident(u)) {
                const VertexId x = dg.other_end(f, u);
                if (x == u) continue;
                if (level_of(x) == k - 1) back[static_cast<std::size_t>(u)].push_back(f);
                else if (level_of(x) == k) side[static_cast<std::size_t>(u)].push_back(f);
            }
            std::sort(back[static_cast<std::size_t>(u)].begin(), back[static_cast<std::size_t>(u)].end());
            t.attach(u, back[static_cast<std::size_t>(u)].front());
        }
        // Newly computable: other back edges, same-level edges (once), loops.
        for (VertexId u : frontier) {
            for (EdgeId f : back[static_cast<std::size_t>(u)])
                if (f != t.parent_edge[static_cast<std::size_t>(u)]) {
                    value[static_cast<std::size_t>(f)] = congestion(f);
                    tally.add(value[static_cast<std::size_t>(f)]);
                }
            for (EdgeId f : side[static_cast<std::size_t>(u)])
                if (dg.other_end(f, u) > u) {
                    value[static_cast<std::size_t>(f)] = congestion(f);
                    tally.add(value[static_cast<std::size_t>(f)]);
                }
            for (EdgeId f : dg.incident(u))
                if (dg.edge(f).u == dg.edge(f).v) {
                    value[static_cast<std::size_t>(f)] = congestion(f);
                    tally.add(value[static_cast<std::size_t>(f)]);
                }
        }

        bool moved = true;
        while (moved) {
            moved = false;
            for (VertexId u : frontier) {
                const auto& be = back[static_cast<std::size_t>(u)];
                if (be.size() < 2) continue;
                const EdgeId current = t.parent_edge[static_cast<std::size_t>(u)];
                for (EdgeId e : be) {
                    if (e == current) continue;
                    const VertexId a = dg.other_end(e, u);
                    const double we = dg.edge(e).w;
                    out_vals.clear();
                    in_vals.clear();
                    for (EdgeId f : be) {
                        if (f != current) out_vals.push_back(value[static_cast<std::size_t>(f)]);
                        if (f != e) in_vals.push_back(dg.edge(f).w + we + t.distance(a, dg.other_end(f, u)));
                    }
                    for (EdgeId f : side[static_cast<std::size_t>(u)]) {
                        out_vals.push_back(value[static_cast<std::size_t>(f)]);
                        in_vals.push_back(dg.edge(f).w + we + t.distance(a, dg.other_end(f, u)));
                    }
                    if (!obj.better(tally.score_after(out_vals, in_vals), tally.score())) continue;

                    for (double c : out_vals) tally.remove(c);
                    t.attach(u, e);
                    for (EdgeId f : be)
                        if (f != e) value[static_cast<std::size_t>(f)] = congestion(f);
                    for (EdgeId f : side[static_cast<std::size_t>(u)]) value[static_cast<std::size_t>(f)] = congestion(f);
                    for (EdgeId f : be)
                        if (f != e) tally.add(value[static_cast<std::size_t>(f)]);
                    for (EdgeId f : side[static_cast<std::size_t>(u)]) tally.add(value[static_cast<std::size_t>(f)]);
                    moved = true;
                    break;
                }
                if (moved) break;
            }
        }
    }
    return t.edges();
}

PlanarResult locbfs(const PlanarEmbedding& embedding, Norm p, const LocBfsOptions& options)
{
    const DualGraph d = dual(embedding);
    const int cells = d.graph.vertex_count();
    const Objective obj(embedding.graph, p);
    std::vector<Objective::Score> scores(static_cast<std::size_t>(cells));

    // Only scores are kept per root; the winning tree is rebuilt afterwards.
    auto grow = [&](int root) {
        return primal_tree(embedding.graph, validate_tree(d.graph, locbfs_dual_tree(embedding, d, root, p)));
    };
    auto run = [&](int root) {
        scores[static_cast<std::size_t>(root)] = obj.aggregate(edge_congestions(embedding.graph, grow(root)).values);
    };
    if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < cells; ++r) run(r);
    } else {
        for (int r = 0; r < cells; ++r) run(r);
    }

    PlanarResult out;
    for (int r = 0; r < cells; ++r) {
        out.per_root.push_back({r, obj.value(scores[static_cast<std::size_t>(r)])});
        if (r == 0 || obj.better(scores[static_cast<std::size_t>(r)], scores[static_cast<std::size_t>(out.best_root)])) out.best_root = r;
    }
    out.tree = grow(out.best_root);
    out.value = obj.value(scores[static_cast<std::size_t>(out.best_root)]);
    return out;
}

bool is_switch_stable(const PlanarEmbedding& embedding, const std::vector<EdgeId>& dual_tree_edges, int root, Norm p)
{
    const DualGraph d = dual(embedding);
    const WeightedGraph& dg = d.graph;
    const Objective obj(dg, p);
    const auto level = bfs_distances(dg, root);
    const int depth_max = *std::max_element(level.begin(), level.end());

    std::vector<EdgeId> parent_of(static_cast<std::size_t>(dg.vertex_count()), kNoEdge);
    for (EdgeId e : dual_tree_edges) {
        const Edge& ed = dg.edge(e);
        const int lu = level[static_cast<std::size_t>(ed.u)];
        const int lv = level[static_cast<std::size_t>(ed.v)];
        if (std::abs(lu - lv) != 1) return false;  // not a BFS tree
        parent_of[static_cast<std::size_t>(lu > lv ? ed.u : ed.v)] = e;
    }

    for (int k = 1; k <= depth_max; ++k) {
        std::vector<EdgeId> base;
        for (EdgeId e : dual_tree_edges) {
            const Edge& ed = dg.edge(e);
            if (std::max(level[static_cast<std::size_t>(ed.u)], level[static_cast<std::size_t>(ed.v)]) <= k) base.push_back(e);
        }
        const Evaluated now = evaluate_partial(dg, base, root, obj);
        for (VertexId u = 0; u < dg.vertex_count(); ++u) {
            if (level[static_cast<std::size_t>(u)] != k) continue;
            for (EdgeId e : dg.incident(u)) {
                const VertexId x = dg.other_end(e, u);
                if (x == u || level[static_cast<std::size_t>(x)] != k - 1 || e == parent_of[static_cast<std::size_t>(u)]) continue;
                std::vector<EdgeId> alt = base;
                *std::find(alt.begin(), alt.end(), parent_of[static_cast<std::size_t>(u)]) = e;
                const Evaluated cand = evaluate_partial(dg, alt, root, obj);
                if (obj.better_mean(cand.score, std::max(1LL, cand.count), now.score, std::max(1LL, now.count))) return false;
            }
        }
    }
    return true;
}

}  // namespace stc
