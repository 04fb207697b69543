#include "stc/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace stc {

namespace {

constexpr double kEps = 1e-9;

double orient(Point a, Point b, Point c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Sign of orient(a, b, c); collinear when the sine of the angle at a is
// below 1e-12, so the test does not depend on the coordinate scale.
int orient_sign(Point a, Point b, Point c)
{
    const double o = orient(a, b, c);
    const double tol = 1e-12 * std::hypot(b.x - a.x, b.y - a.y) * std::hypot(c.x - a.x, c.y - a.y);
    if (o > tol) return 1;
    if (o < -tol) return -1;
    return 0;
}

bool within_box(Point a, Point b, Point c)
{
    return c.x >= std::min(a.x, b.x) - kEps && c.x <= std::max(a.x, b.x) + kEps &&
           c.y >= std::min(a.y, b.y) - kEps && c.y <= std::max(a.y, b.y) + kEps;
}

bool edges_conflict(const WeightedGraph& g, std::span<const Point> pts, EdgeId i, EdgeId j)
{
    const Edge& a = g.edge(i);
    const Edge& b = g.edge(j);
    const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    if (!share) return segments_conflict(pts[a.u], pts[a.v], pts[b.u], pts[b.v], false);
    // Orient both segments away from the shared vertex.
    const VertexId s = (a.u == b.u || a.u == b.v) ? a.u : a.v;
    const VertexId x = a.u == s ? a.v : a.u;
    const VertexId y = b.u == s ? b.v : b.u;
    return segments_conflict(pts[s], pts[x], pts[s], pts[y], true);
}

/// Dual-tree adjacency walk helper: weighted tree distance by LCA climbing.
double tree_path_weight(const WeightedGraph& g, const SpanningTree& t, VertexId a, VertexId b)
{
    double s = 0.0;
    while (a != b) {
        if (t.depth(a) < t.depth(b)) std::swap(a, b);
        s += g.edge(t.parent_edge(a)).w;
        a = t.parent(a);
    }
    return s;
}

}  // namespace

bool segments_conflict(Point a, Point b, Point c, Point d, bool share_endpoint)
{
    if (share_endpoint) {
        // a == c is the shared vertex.
        if (orient_sign(a, b, d) != 0) return false;
        return (b.x - a.x) * (d.x - a.x) + (b.y - a.y) * (d.y - a.y) > 0.0;
    }
    const int o1 = orient_sign(a, b, c);
    const int o2 = orient_sign(a, b, d);
    const int o3 = orient_sign(c, d, a);
    const int o4 = orient_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within_box(a, b, c)) return true;
    if (o2 == 0 && within_box(a, b, d)) return true;
    if (o3 == 0 && within_box(c, d, a)) return true;
    if (o4 == 0 && within_box(c, d, b)) return true;
    return false;
}

std::optional<std::pair<EdgeId, EdgeId>> find_crossing(const WeightedGraph& graph)
{
    const auto pts = graph.coordinates();
    const int m = graph.edge_count();
    for (EdgeId i = 0; i < m; ++i)
        for (EdgeId j = i + 1; j < m; ++j)
            if (edges_conflict(graph, pts, i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<std::pair<EdgeId, EdgeId>> find_crossing_parallel(const WeightedGraph& graph)
{
    const auto pts = graph.coordinates();
    const int m = graph.edge_count();
    long long best = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (EdgeId i = 0; i < m; ++i) {
        for (EdgeId j = i + 1; j < m; ++j) {
            if (edges_conflict(graph, pts, i, j)) {
                best = std::min(best, static_cast<long long>(i) * m + j);
                break;
            }
        }
    }
    if (best == std::numeric_limits<long long>::max()) return std::nullopt;
    return std::make_pair(static_cast<EdgeId>(best / m), static_cast<EdgeId>(best % m));
}

VertexId PlanarEmbedding::origin(int h) const
{
    const Edge& e = graph.edge(edge_of(h));
    return (h & 1) ? e.v : e.u;
}

int PlanarEmbedding::next(int h) const
{
    const int t = twin(h);
    const auto& rot = rotation[static_cast<std::size_t>(origin(t))];
    const int k = static_cast<int>(rot.size());
    const int i = rotation_index[static_cast<std::size_t>(t)];
    return rot[static_cast<std::size_t>((i - 1 + k) % k)];
}

PlanarEmbedding build_embedding(const WeightedGraph& graph)
{
    const auto pts = graph.coordinates();
    if (!graph.connected()) throw Error(ErrorCode::Disconnected, "embedding needs a connected graph");
    if (graph.is_multigraph()) throw Error(ErrorCode::InvalidGraph, "embedding needs a simple graph");
    if (auto hit = find_crossing_parallel(graph))
        throw Error(ErrorCode::EdgesCross, "edges " + std::to_string(hit->first) + " and " + std::to_string(hit->second) +
                                               " cross");

    PlanarEmbedding emb;
    emb.graph = graph;
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    emb.rotation.assign(static_cast<std::size_t>(n), {});
    emb.rotation_index.assign(static_cast<std::size_t>(2 * m), 0);
    std::vector<double> angle(static_cast<std::size_t>(2 * m));
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = graph.edge(e);
        const Point a = pts[static_cast<std::size_t>(ed.u)];
        const Point b = pts[static_cast<std::size_t>(ed.v)];
        angle[static_cast<std::size_t>(half_edge(e, 0))] = std::atan2(b.y - a.y, b.x - a.x);
        angle[static_cast<std::size_t>(half_edge(e, 1))] = std::atan2(a.y - b.y, a.x - b.x);
        emb.rotation[static_cast<std::size_t>(ed.u)].push_back(half_edge(e, 0));
        emb.rotation[static_cast<std::size_t>(ed.v)].push_back(half_edge(e, 1));
    }
    for (auto& rot : emb.rotation) {
        std::sort(rot.begin(), rot.end(), [&](int x, int y) {
            const double ax = angle[static_cast<std::size_t>(x)];
            const double ay = angle[static_cast<std::size_t>(y)];
            return ax != ay ? ax < ay : x < y;
        });
        for (std::size_t i = 0; i < rot.size(); ++i) emb.rotation_index[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
    }

    emb.face_of.assign(static_cast<std::size_t>(2 * m), -1);
    if (m == 0) {
        emb.faces.push_back({});
        emb.face_area.push_back(0.0);
        emb.outer_face = 0;
        return emb;
    }
    for (int h0 = 0; h0 < 2 * m; ++h0) {
        if (emb.face_of[static_cast<std::size_t>(h0)] >= 0) continue;
        const int id = emb.face_count();
        std::vector<int> walk;
        double area = 0.0;
        int h = h0;
        do {
            emb.face_of[static_cast<std::size_t>(h)] = id;
            walk.push_back(h);
            const Point a = pts[static_cast<std::size_t>(emb.origin(h))];
            const Point b = pts[static_cast<std::size_t>(emb.target(h))];
            area += a.x * b.y - b.x * a.y;
            h = emb.next(h);
        } while (h != h0);
        emb.faces.push_back(std::move(walk));
        emb.face_area.push_back(area / 2.0);
    }
    if (n - m + emb.face_count() != 2)
        throw Error(ErrorCode::NotPlanar, "face count violates Euler's formula");
    emb.outer_face = static_cast<int>(std::min_element(emb.face_area.begin(), emb.face_area.end()) - emb.face_area.begin());
    return emb;
}

DualGraph dual(const PlanarEmbedding& embedding)
{
    const WeightedGraph& g = embedding.graph;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        edges.push_back(Edge{embedding.face_of[static_cast<std::size_t>(half_edge(e, 0))],
                             embedding.face_of[static_cast<std::size_t>(half_edge(e, 1))], g.edge(e).w});
    }
    return DualGraph{WeightedGraph(embedding.face_count(), std::move(edges), true)};
}

SpanningTree dual_tree(const DualGraph& dual, const SpanningTree& tree)
{
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < dual.graph.edge_count(); ++e)
        if (!tree.contains(e)) ids.push_back(e);
    try {
        return validate_tree(dual.graph, ids);
    } catch (const Error& err) {
        throw Error(ErrorCode::NotSpanningDual, err.what());
    }
}

SpanningTree primal_tree(const WeightedGraph& primal, const SpanningTree& dual_tree)
{
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < primal.edge_count(); ++e)
        if (!dual_tree.contains(e)) ids.push_back(e);
    return validate_tree(primal, ids);
}

CongestionVector congestion_via_dual(const PlanarEmbedding& embedding, const SpanningTree& tree)
{
    const DualGraph d = dual(embedding);
    const SpanningTree dt = dual_tree(d, tree);
    CongestionVector out;
    out.values.reserve(static_cast<std::size_t>(tree.size()));
    for (EdgeId e : tree.edge_ids()) {
        const Edge& de = d.graph.edge(e);
        out.values.push_back(embedding.graph.edge(e).w + tree_path_weight(d.graph, dt, de.u, de.v));
    }
    return out;
}

namespace {

double cycle_rank_in(const WeightedGraph& dg, EdgeId e)
{
    const Edge& de = dg.edge(e);
    if (de.u == de.v) return de.w;
    std::vector<double> dist(static_cast<std::size_t>(dg.vertex_count()), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(de.u)] = 0.0;
    heap.push({0.0, de.u});
    while (!heap.empty()) {
        const auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(x)]) continue;
        if (x == de.v) break;
        for (EdgeId f : dg.incident(x)) {
            if (f == e) continue;
            const VertexId y = dg.other_end(f, x);
            const double nd = d + dg.edge(f).w;
            if (nd < dist[static_cast<std::size_t>(y)]) {
                dist[static_cast<std::size_t>(y)] = nd;
                heap.push({nd, y});
            }
        }
    }
    return de.w + dist[static_cast<std::size_t>(de.v)];
}

}  // namespace

double weighted_cycle_rank(const PlanarEmbedding& embedding, EdgeId e)
{
    return cycle_rank_in(dual(embedding).graph, e);
}

std::vector<double> weighted_cycle_ranks(const PlanarEmbedding& embedding)
{
    const DualGraph d = dual(embedding);
    const int m = d.graph.edge_count();
    std::vector<double> out(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic, 8)
    for (EdgeId e = 0; e < m; ++e) out[static_cast<std::size_t>(e)] = cycle_rank_in(d.graph, e);
    return out;
}

bool is_cactus(const WeightedGraph& graph)
{
    if (!graph.connected()) return false;
    // Fundamental cycles of any spanning tree are pairwise edge-disjoint
    // exactly when every edge lies on at most one cycle.
    std::vector<double> unit(static_cast<std::size_t>(graph.edge_count()), 1.0);
    const SpanningTree t = kruskal(graph, unit, true);
    std::vector<char> used(static_cast<std::size_t>(graph.edge_count()), 0);
    for (EdgeId f = 0; f < graph.edge_count(); ++f) {
        if (t.contains(f)) continue;
        for (EdgeId e : tree_path(t, graph.edge(f).u, graph.edge(f).v)) {
            if (used[static_cast<std::size_t>(e)]) return false;
            used[static_cast<std::size_t>(e)] = 1;
        }
    }
    return true;
}

SpanningTree cactus_optimum(const PlanarEmbedding& embedding)
{
    if (!is_cactus(embedding.graph)) throw Error(ErrorCode::NotCactus, "some edge lies on two cycles");
    const DualGraph d = dual(embedding);
    std::vector<double> key(static_cast<std::size_t>(d.graph.edge_count()));
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) key[static_cast<std::size_t>(e)] = d.graph.edge(e).w;
    return primal_tree(embedding.graph, kruskal(d.graph, key, true));
}

}  // namespace stc
