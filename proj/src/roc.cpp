#include "stc/roc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail/growing_tree.hpp"

namespace stc {

EdgeId minimal_edge(const WeightedGraph& dual, std::span<const EdgeId> candidates, const std::vector<char>& in_tree,
                    std::span<const int> rank)
{
    if (candidates.empty()) throw Error(ErrorCode::EmptyCandidates, "no candidate edges");
    auto inside = [&](EdgeId e) {
        const Edge& ed = dual.edge(e);
        return in_tree[static_cast<std::size_t>(ed.u)] ? ed.u : ed.v;
    };
    auto index = [&](VertexId v) { return rank.empty() ? v : rank[static_cast<std::size_t>(v)]; };
    auto less = [&](EdgeId a, EdgeId b) {
        const double wa = dual.edge(a).w;
        const double wb = dual.edge(b).w;
        if (wa != wb) return wa < wb;
        const VertexId x = inside(a);
        const VertexId y = inside(b);
        const double dx = dual.degree(x);
        const double dy = dual.degree(y);
        const double rx = dual.weighted_degree(x) * dy;
        const double ry = dual.weighted_degree(y) * dx;
        if (rx != ry) return rx < ry;
        if (dx != dy) return dx > dy;
        if (index(x) != index(y)) return index(x) < index(y);
        return a < b;
    };
    return *std::min_element(candidates.begin(), candidates.end(), less);
}

namespace {

// Congestions made computable by attaching a boundary cell through one of
// its connecting edges. Tree distances between grown cells never change, so
// these stay valid until the cell gains another connecting edge.
struct Option {
    EdgeId edge;
    Objective::Score local;
    long long count;
};

}  // namespace

std::vector<EdgeId> roc_dual_tree(const DualGraph& d, int root, Norm p, const RocOptions& options)
{
    const WeightedGraph& dg = d.graph;
    const int cells = dg.vertex_count();
    const Objective obj(dg, p);
    detail::GrowingTree t(dg, root);
    std::vector<char> in_tree(static_cast<std::size_t>(cells), 0);
    std::vector<int> rank(static_cast<std::size_t>(cells));
    if (options.index == RocIndex::CellId) std::iota(rank.begin(), rank.end(), 0);
    int joined = 0;
    std::vector<std::vector<EdgeId>> se(static_cast<std::size_t>(cells));
    std::vector<std::vector<Option>> opts(static_cast<std::size_t>(cells));
    std::set<VertexId> frontier;
    Objective::Score total{};
    long long count = 0;
    std::vector<EdgeId> order;

    auto add_loops = [&](VertexId v, Objective::Score& s, long long& c) {
        if (options.skip_loops) return;
        for (EdgeId f : dg.incident(v))
            if (dg.edge(f).u == dg.edge(f).v) {
                obj.accumulate(s, dg.edge(f).w);
                ++c;
            }
    };

    auto evaluate = [&](VertexId u) {
        auto& out = opts[static_cast<std::size_t>(u)];
        out.clear();
        const auto& cand = se[static_cast<std::size_t>(u)];
        for (EdgeId e : cand) {
            const VertexId a = dg.other_end(e, u);
            Option o{e, obj.zero(), 0};
            for (EdgeId f : cand) {
                if (f == e) continue;
                obj.accumulate(o.local, dg.edge(f).w + dg.edge(e).w + t.distance(a, dg.other_end(f, u)));
                ++o.count;
            }
            add_loops(u, o.local, o.count);
            out.push_back(o);
        }
    };

    auto join = [&](VertexId v, EdgeId via) {
        if (via != kNoEdge) {
            for (const Option& o : opts[static_cast<std::size_t>(v)]) {
                if (o.edge != via) continue;
                if (p.is_infinite())
                    total = obj.better(total, o.local) ? o.local : total;
                else {
                    total.exact += o.local.exact;
                    total.approx += o.local.approx;
                }
                count += o.count;
            }
            t.attach(v, via);
            order.push_back(via);
            frontier.erase(v);
        } else {
            add_loops(v, total, count);
        }
        in_tree[static_cast<std::size_t>(v)] = 1;
        if (options.index == RocIndex::JoinOrder) rank[static_cast<std::size_t>(v)] = joined;
        ++joined;
        std::vector<VertexId> touched;
        for (EdgeId f : dg.incident(v)) {
            const VertexId x = dg.other_end(f, v);
            if (x == v || in_tree[static_cast<std::size_t>(x)]) continue;
            se[static_cast<std::size_t>(x)].push_back(f);
            frontier.insert(x);
            touched.push_back(x);
        }
        for (VertexId x : touched) evaluate(x);
    };

    join(root, kNoEdge);
    std::vector<EdgeId> ties;
    while (!frontier.empty()) {
        bool multi = false;
        for (VertexId u : frontier)
            if (se[static_cast<std::size_t>(u)].size() > 1) multi = true;

        ties.clear();
        if (!multi) {
            for (VertexId u : frontier) ties.push_back(se[static_cast<std::size_t>(u)].front());
        } else {
            bool have = false;
            Objective::Score best{};
            long long best_count = 1;
            for (VertexId u : frontier) {
                if (se[static_cast<std::size_t>(u)].size() < 2 && options.candidates == RocCandidates::MultiEdgeCells) continue;
                for (const Option& o : opts[static_cast<std::size_t>(u)]) {
                    Objective::Score s = total;
                    if (p.is_infinite()) {
                        if (obj.better(s, o.local)) s = o.local;
                    } else {
                        s.exact += o.local.exact;
                        s.approx += o.local.approx;
                    }
                    const long long c = std::max(1LL, count + o.count);
                    if (!have || obj.better_mean(s, c, best, best_count)) {
                        have = true;
                        best = s;
                        best_count = c;
                        ties.assign(1, o.edge);
                    } else if (obj.equal_mean(s, c, best, best_count)) {
                        ties.push_back(o.edge);
                    }
                }
            }
        }
        const EdgeId e = minimal_edge(dg, ties, in_tree, rank);
        const Edge& ed = dg.edge(e);
        join(in_tree[static_cast<std::size_t>(ed.u)] ? ed.v : ed.u, e);
    }
    return order;
}

PlanarResult roc(const PlanarEmbedding& embedding, Norm p, const RocOptions& options)
{
    const DualGraph d = dual(embedding);
    const int cells = d.graph.vertex_count();
    const Objective obj(embedding.graph, p);
    std::vector<Objective::Score> scores(static_cast<std::size_t>(cells));

    // Only scores are kept per root; the winning tree is rebuilt afterwards.
    auto grow = [&](int root) {
        return primal_tree(embedding.graph, validate_tree(d.graph, roc_dual_tree(d, root, p, options)));
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

}  // namespace stc
