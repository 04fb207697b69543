#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc {

inline constexpr double kDefaultTreeCap = 1e7;

/// Kirchhoff count of spanning trees (edge multiplicities counted, loops
/// ignored) from a pivoted elimination of the reduced Laplacian.
long double matrix_tree_count(const WeightedGraph& graph);
/// Same count by fraction-free elimination; exact while it fits 128 bits.
__int128 matrix_tree_count_exact(const WeightedGraph& graph);

/// Calls `visit` with the sorted edge ids of every spanning tree, in
/// lexicographic order of those id lists. Returns the number visited.
/// Throws Disconnected, CapExceeded (count estimated before enumerating).
std::uint64_t enumerate_spanning_trees(const WeightedGraph& graph, double cap,
                                       const std::function<void(std::span<const EdgeId>)>& visit);

struct OracleResult {
    double value = 0.0;
    SpanningTree witness;                      // lexicographically least optimum
    std::vector<std::vector<EdgeId>> optimal;  // every optimum, sorted ids
    std::uint64_t trees = 0;
};

/// Exact minimum of C_p over all spanning trees. Congestions of each batch of
/// enumerated trees are evaluated on OpenMP threads; the reduction runs in
/// enumeration order.
OracleResult exact_lp_stc(const WeightedGraph& graph, Norm p, double cap = kDefaultTreeCap);

/// Sum over non-tree edges e of w(tree path of e) / w(e). Throws TreeGraphMismatch.
double total_stretch(const WeightedGraph& graph, const SpanningTree& tree);

}  // namespace stc
