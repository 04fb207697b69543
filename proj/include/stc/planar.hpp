#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc {

/// Half-edge 2e runs u -> v of edge e, half-edge 2e+1 runs v -> u.
inline constexpr int half_edge(EdgeId e, int dir) { return 2 * e + dir; }
inline constexpr EdgeId edge_of(int h) { return h / 2; }
inline constexpr int twin(int h) { return h ^ 1; }

/// Straight-line embedding of a connected graph: counterclockwise rotation
/// system and the face walks it induces. Bounded faces are traversed with
/// positive signed area; the outer face is the one with the most negative.
struct PlanarEmbedding {
    WeightedGraph graph;
    /// Outgoing half-edges of each vertex sorted by angle, counterclockwise.
    std::vector<std::vector<int>> rotation;
    /// Position of every half-edge inside its origin's rotation.
    std::vector<int> rotation_index;
    /// Face id of every half-edge (the face on its left).
    std::vector<int> face_of;
    /// Closed half-edge walk of every face, face ids in discovery order.
    std::vector<std::vector<int>> faces;
    std::vector<double> face_area;
    int outer_face = 0;

    int face_count() const noexcept { return static_cast<int>(faces.size()); }
    VertexId origin(int h) const;
    VertexId target(int h) const { return origin(twin(h)); }
    /// Successor of h along its face.
    int next(int h) const;
};

/// Throws MissingCoordinates, Disconnected or EdgesCross.
PlanarEmbedding build_embedding(const WeightedGraph& graph);

/// First crossing pair (lowest ids) of segments that meet anywhere but at a
/// shared endpoint, including touching and collinear overlap.
std::optional<std::pair<EdgeId, EdgeId>> find_crossing(const WeightedGraph& graph);
/// OpenMP variant; returns the same pair.
std::optional<std::pair<EdgeId, EdgeId>> find_crossing_parallel(const WeightedGraph& graph);

/// True when the closed segments ab and cd meet at a point other than a
/// shared endpoint. Orientation tests use an absolute tolerance of 1e-9.
bool segments_conflict(Point a, Point b, Point c, Point d, bool share_endpoint);

/// Dual multigraph over faces. Dual edge e* has the same id and weight as
/// primal edge e and joins the faces on its two sides; bridges become loops.
struct DualGraph {
    WeightedGraph graph;
};

DualGraph dual(const PlanarEmbedding& embedding);

/// Dual edges of the non-tree primal edges. Throws NotSpanningDual if they
/// fail to form a spanning tree of the dual.
SpanningTree dual_tree(const DualGraph& dual, const SpanningTree& tree);

/// Inverse of dual_tree: primal edges whose duals are not in `dual_tree`.
SpanningTree primal_tree(const WeightedGraph& primal, const SpanningTree& dual_tree);

/// Congestion of each tree edge as its weight plus the dual-tree path weight
/// between the two faces it separates.
CongestionVector congestion_via_dual(const PlanarEmbedding& embedding, const SpanningTree& tree);

/// Lightest dual cycle through e*: w(e) plus the shortest path between the
/// ends of e* in the dual with e* removed. Bridges have rank w(e).
double weighted_cycle_rank(const PlanarEmbedding& embedding, EdgeId e);
std::vector<double> weighted_cycle_ranks(const PlanarEmbedding& embedding);

/// Every edge lies on at most one cycle.
bool is_cactus(const WeightedGraph& graph);

/// Complement of the minimum weight spanning tree of the dual. Throws NotCactus.
SpanningTree cactus_optimum(const PlanarEmbedding& embedding);

}  // namespace stc
