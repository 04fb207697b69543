#pragma once

#include <vector>

#include "stc/congestion.hpp"
#include "stc/planar.hpp"

namespace stc {

/// Result of growing one dual tree from every root cell.
struct RootResult {
    int root = 0;
    double value = 0.0;
};

struct PlanarResult {
    SpanningTree tree;   // primal spanning tree
    double value = 0.0;  // C_p of `tree`
    int best_root = 0;
    std::vector<RootResult> per_root;
};

/// Partial dual tree given by the dual edge ids it contains (all joining
/// cells inside the tree).
struct PartialDualTree {
    std::vector<EdgeId> edges;
};

/// Relative congestion of a partial dual tree: over the dual edges outside
/// the tree with both ends among its cells, the max congestion for p = inf,
/// the mean of p-th powers otherwise. A single cell counts as a tree.
/// Throws NoBoundaryEdges when that edge set is empty.
double relative_congestion(const PlanarEmbedding& embedding, const PartialDualTree& tree, int root, Norm p);

struct LocBfsOptions {
    bool parallel = true;
};

/// Locally optimal BFS dual trees over all root cells; the primal tree with
/// the least C_p is returned (ties to the lowest root).
PlanarResult locbfs(const PlanarEmbedding& embedding, Norm p, const LocBfsOptions& options = {});

/// Dual tree grown from one root, as dual edge ids; exposes the per-root
/// process for tests.
std::vector<EdgeId> locbfs_dual_tree(const PlanarEmbedding& embedding, const DualGraph& dual, int root, Norm p);

/// Exhaustive switch scan: true when no single switch at any level strictly
/// lowers the relative congestion of that level's subtree.
bool is_switch_stable(const PlanarEmbedding& embedding, const std::vector<EdgeId>& dual_tree_edges, int root, Norm p);

}  // namespace stc
