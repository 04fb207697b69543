#include "stc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace stc {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorCode::ContainsCycle: return "ContainsCycle";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TreeGraphMismatch: return "TreeGraphMismatch";
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::RemoveNotOnCycle: return "RemoveNotOnCycle";
    case ErrorCode::InsertAlreadyInTree: return "InsertAlreadyInTree";
    case ErrorCode::EdgesCross: return "EdgesCross";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::NotSpanningDual: return "NotSpanningDual";
    case ErrorCode::NotCactus: return "NotCactus";
    case ErrorCode::NoBoundaryEdges: return "NoBoundaryEdges";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::ExactModeOnWeighted: return "ExactModeOnWeighted";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DisconnectedSample: return "DisconnectedSample";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::KindFamilyMismatch: return "KindFamilyMismatch";
    case ErrorCode::NoFormula: return "NoFormula";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

// Integers up to this magnitude stay exact through the sums and powers the
// exact comparison paths perform.
constexpr double kExactIntegerLimit = 1 << 26;

std::uint64_t pair_key(VertexId a, VertexId b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges, bool multigraph)
    : vertex_count_(vertex_count), edges_(std::move(edges)), multigraph_(multigraph)
{
    if (vertex_count_ <= 0) throw Error(ErrorCode::InvalidGraph, "vertex count must be positive");

    std::unordered_set<std::uint64_t> seen;
    if (!multigraph_) seen.reserve(edges_.size() * 2);
    min_weight_ = edges_.empty() ? 0.0 : edges_.front().w;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(i) + " has an endpoint out of range");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(i) + " has a non-positive weight");
        if (!multigraph_) {
            if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
            if (!seen.insert(pair_key(e.u, e.v)).second)
                throw Error(ErrorCode::InvalidGraph, "parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        total_weight_ += e.w;
        min_weight_ = std::min(min_weight_, e.w);
        max_weight_ = std::max(max_weight_, e.w);
        if (e.w != std::floor(e.w) || e.w > kExactIntegerLimit) integer_weights_ = false;
        if (e.w != 1.0) unweighted_ = false;
    }

    offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        if (e.v != e.u) ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(static_cast<std::size_t>(offsets_.back()));
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        incidence_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = static_cast<EdgeId>(i);
        if (e.v != e.u) incidence_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = static_cast<EdgeId>(i);
    }
}

std::span<const EdgeId> WeightedGraph::incident(VertexId v) const
{
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return std::span<const EdgeId>(incidence_).subspan(b, e - b);
}

VertexId WeightedGraph::other_end(EdgeId e, VertexId v) const
{
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
}

double WeightedGraph::weighted_degree(VertexId v) const
{
    double s = 0.0;
    for (EdgeId e : incident(v)) s += edge(e).w;
    return s;
}

bool WeightedGraph::connected() const
{
    const auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

EdgeId WeightedGraph::find_edge(VertexId u, VertexId v) const
{
    const VertexId a = degree(u) <= degree(v) ? u : v;
    const VertexId b = a == u ? v : u;
    for (EdgeId e : incident(a))
        if (other_end(e, a) == b) return e;
    return kNoEdge;
}

std::span<const Point> WeightedGraph::coordinates() const
{
    if (!coords_) throw Error(ErrorCode::MissingCoordinates, "graph has no vertex coordinates");
    return *coords_;
}

WeightedGraph WeightedGraph::with_coordinates(std::vector<Point> coords) const
{
    if (static_cast<int>(coords.size()) != vertex_count_)
        throw Error(ErrorCode::MissingCoordinates, "coordinate count does not match vertex count");
    WeightedGraph g = *this;
    g.coords_ = std::move(coords);
    return g;
}

WeightedGraph WeightedGraph::with_weights(std::span<const double> weights) const
{
    if (static_cast<int>(weights.size()) != edge_count())
        throw Error(ErrorCode::InvalidParams, "weight count does not match edge count");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
    WeightedGraph g(vertex_count_, std::move(edges), multigraph_);
    g.coords_ = coords_;
    return g;
}

bool WeightedGraph::check_incidence() const
{
    std::vector<int> count(edges_.size(), 0);
    for (VertexId v = 0; v < vertex_count_; ++v) {
        for (EdgeId e : incident(v)) {
            const Edge& ed = edge(e);
            if (ed.u != v && ed.v != v) return false;
            ++count[static_cast<std::size_t>(e)];
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const int expected = edges_[i].u == edges_[i].v ? 1 : 2;
        if (count[i] != expected) return false;
    }
    return true;
}

std::vector<EdgeId> SpanningTree::sorted_edge_ids() const
{
    std::vector<EdgeId> ids(edge_ids_.begin(), edge_ids_.end());
    std::sort(ids.begin(), ids.end());
    return ids;
}

SpanningTree validate_tree(const WeightedGraph& graph, std::span<const EdgeId> edge_ids)
{
    const int n = graph.vertex_count();
    if (static_cast<int>(edge_ids.size()) != n - 1)
        throw Error(ErrorCode::WrongEdgeCount, "expected " + std::to_string(n - 1) + " edges, got " +
                                                   std::to_string(edge_ids.size()));
    UnionFind uf(n);
    for (EdgeId e : edge_ids) {
        if (e < 0 || e >= graph.edge_count())
            throw Error(ErrorCode::TreeGraphMismatch, "edge id " + std::to_string(e) + " not in graph");
        const Edge& ed = graph.edge(e);
        if (!uf.unite(ed.u, ed.v))
            throw Error(ErrorCode::ContainsCycle, "edge " + std::to_string(e) + " closes a cycle");
    }
    // n-1 acyclic edges always span; kept for clarity of the axiom being checked.
    if (uf.components() != 1) throw Error(ErrorCode::NotSpanning, "edges do not reach every vertex");

    SpanningTree t;
    t.edge_ids_.assign(edge_ids.begin(), edge_ids.end());
    t.position_.assign(static_cast<std::size_t>(graph.edge_count()), -1);
    for (std::size_t i = 0; i < edge_ids.size(); ++i) t.position_[static_cast<std::size_t>(edge_ids[i])] = static_cast<int>(i);

    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
    for (EdgeId e : edge_ids) {
        adj[static_cast<std::size_t>(graph.edge(e).u)].push_back(e);
        adj[static_cast<std::size_t>(graph.edge(e).v)].push_back(e);
    }
    t.parent_.assign(static_cast<std::size_t>(n), kNoVertex);
    t.parent_edge_.assign(static_cast<std::size_t>(n), kNoEdge);
    t.depth_.assign(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> queue{0};
    t.depth_[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (EdgeId e : adj[static_cast<std::size_t>(x)]) {
            const VertexId y = graph.other_end(e, x);
            if (t.depth_[static_cast<std::size_t>(y)] >= 0) continue;
            t.depth_[static_cast<std::size_t>(y)] = t.depth_[static_cast<std::size_t>(x)] + 1;
            t.parent_[static_cast<std::size_t>(y)] = x;
            t.parent_edge_[static_cast<std::size_t>(y)] = e;
            queue.push_back(y);
        }
    }
    if (static_cast<int>(queue.size()) != n) throw Error(ErrorCode::NotSpanning, "parent array misses a vertex");
    return t;
}

std::vector<EdgeId> tree_path(const SpanningTree& tree, VertexId u, VertexId v)
{
    if (u == v) throw Error(ErrorCode::SameVertex, "path endpoints coincide");
    std::vector<EdgeId> head;
    std::vector<EdgeId> tail;
    while (tree.depth(u) > tree.depth(v)) {
        head.push_back(tree.parent_edge(u));
        u = tree.parent(u);
    }
    while (tree.depth(v) > tree.depth(u)) {
        tail.push_back(tree.parent_edge(v));
        v = tree.parent(v);
    }
    while (u != v) {
        head.push_back(tree.parent_edge(u));
        u = tree.parent(u);
        tail.push_back(tree.parent_edge(v));
        v = tree.parent(v);
    }
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
}

SpanningTree kruskal(const WeightedGraph& graph, std::span<const double> key, bool minimize)
{
    if (static_cast<int>(key.size()) != graph.edge_count())
        throw Error(ErrorCode::InvalidParams, "key length does not match edge count");
    std::vector<EdgeId> order(static_cast<std::size_t>(graph.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const double ka = key[static_cast<std::size_t>(a)];
        const double kb = key[static_cast<std::size_t>(b)];
        return minimize ? ka < kb : ka > kb;
    });
    UnionFind uf(graph.vertex_count());
    std::vector<EdgeId> chosen;
    chosen.reserve(static_cast<std::size_t>(graph.vertex_count() - 1));
    for (EdgeId e : order) {
        if (uf.unite(graph.edge(e).u, graph.edge(e).v)) chosen.push_back(e);
    }
    if (uf.components() != 1) throw Error(ErrorCode::Disconnected, "graph is not connected");
    return validate_tree(graph, chosen);
}

SpanningTree random_spanning_tree(const WeightedGraph& graph, std::uint64_t seed)
{
    std::vector<EdgeId> order(static_cast<std::size_t>(graph.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    UnionFind uf(graph.vertex_count());
    std::vector<EdgeId> chosen;
    for (EdgeId e : order) {
        if (uf.unite(graph.edge(e).u, graph.edge(e).v)) chosen.push_back(e);
    }
    if (uf.components() != 1) throw Error(ErrorCode::Disconnected, "graph is not connected");
    return validate_tree(graph, chosen);
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n)
{
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x)
{
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

bool UnionFind::unite(int a, int b)
{
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --components_;
    return true;
}

std::vector<int> bfs_distances(const WeightedGraph& graph, VertexId source)
{
    std::vector<int> dist(static_cast<std::size_t>(graph.vertex_count()), -1);
    std::vector<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (EdgeId e : graph.incident(x)) {
            const VertexId y = graph.other_end(e, x);
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

int hop_diameter(const WeightedGraph& graph)
{
    int best = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const auto d = bfs_distances(graph, v);
        for (int x : d) {
            if (x < 0) throw Error(ErrorCode::Disconnected, "graph is not connected");
            best = std::max(best, x);
        }
    }
    return best;
}

}  // namespace stc
