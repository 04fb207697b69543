#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stc/error.hpp"

namespace stc {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr VertexId kNoVertex = -1;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double w = 1.0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Undirected edge-weighted graph with dense vertex ids 0..n-1 and dense edge
/// ids 0..m-1 in insertion order. Immutable once built.
///
/// Simple graphs reject loops and parallel edges; multigraphs (used for planar
/// duals) accept both. A loop appears once in the incidence list of its vertex.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int vertex_count, std::vector<Edge> edges, bool multigraph = false);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    bool is_multigraph() const noexcept { return multigraph_; }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const;
    VertexId other_end(EdgeId e, VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
    double weighted_degree(VertexId v) const;
    double total_weight() const noexcept { return total_weight_; }
    double min_weight() const noexcept { return min_weight_; }
    double max_weight() const noexcept { return max_weight_; }

    /// True when every weight is an integer small enough for exact arithmetic.
    bool integer_weights() const noexcept { return integer_weights_; }
    /// True when every weight equals 1.
    bool unweighted() const noexcept { return unweighted_; }
    bool connected() const;

    /// Edge id joining u and v, or kNoEdge. Simple graphs only.
    EdgeId find_edge(VertexId u, VertexId v) const;

    bool has_coordinates() const noexcept { return coords_.has_value(); }
    std::span<const Point> coordinates() const;
    WeightedGraph with_coordinates(std::vector<Point> coords) const;
    WeightedGraph with_weights(std::span<const double> weights) const;

    /// Round-trip check of the incidence index against the edge list.
    bool check_incidence() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<EdgeId> incidence_;
    std::optional<std::vector<Point>> coords_;
    bool multigraph_ = false;
    bool integer_weights_ = true;
    bool unweighted_ = true;
    double total_weight_ = 0.0;
    double min_weight_ = 0.0;
    double max_weight_ = 0.0;
};

/// Spanning tree as a list of edge ids of its parent graph, indexed for path
/// queries by parent/depth arrays rooted at vertex 0.
class SpanningTree {
public:
    SpanningTree() = default;

    std::span<const EdgeId> edge_ids() const noexcept { return edge_ids_; }
    int size() const noexcept { return static_cast<int>(edge_ids_.size()); }
    int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }
    int graph_edge_count() const noexcept { return static_cast<int>(position_.size()); }

    bool contains(EdgeId e) const { return position_[static_cast<std::size_t>(e)] >= 0; }
    /// Index of e in edge_ids(), or -1.
    int position(EdgeId e) const { return position_[static_cast<std::size_t>(e)]; }

    VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
    EdgeId parent_edge(VertexId v) const { return parent_edge_[static_cast<std::size_t>(v)]; }
    int depth(VertexId v) const { return depth_[static_cast<std::size_t>(v)]; }

    /// Edge ids sorted ascending; convenient for set comparisons.
    std::vector<EdgeId> sorted_edge_ids() const;

    friend SpanningTree validate_tree(const WeightedGraph& graph, std::span<const EdgeId> edge_ids);

private:
    std::vector<EdgeId> edge_ids_;
    std::vector<int> position_;
    std::vector<VertexId> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<int> depth_;
};

/// Throws WrongEdgeCount, ContainsCycle or NotSpanning.
SpanningTree validate_tree(const WeightedGraph& graph, std::span<const EdgeId> edge_ids);

/// Unique tree path from u to v as edge ids in walking order.
std::vector<EdgeId> tree_path(const SpanningTree& tree, VertexId u, VertexId v);

/// Kruskal tree extremal for `key`; ties broken by lowest edge id.
SpanningTree kruskal(const WeightedGraph& graph, std::span<const double> key, bool minimize);

/// Seeded random edge permutation accepted through union-find. Deterministic
/// for a given seed; not uniform over spanning trees.
SpanningTree random_spanning_tree(const WeightedGraph& graph, std::uint64_t seed);

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);
    int components() const noexcept { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

/// Hop distances from `source` (-1 when unreachable).
std::vector<int> bfs_distances(const WeightedGraph& graph, VertexId source);
/// Unweighted diameter; graph must be connected.
int hop_diameter(const WeightedGraph& graph);

}  // namespace stc
