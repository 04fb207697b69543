#pragma once

#include <span>
#include <vector>

#include "stc/locbfs.hpp"

namespace stc {

/// Tie-break for attaching a boundary cell: least dual weight, then least
/// weighted-degree/degree ratio of the endpoint w inside the tree, then
/// highest degree of w, then lowest index of w, then lowest edge id.
/// `in_tree[c]` marks the cells already grown. The index of w is `rank[w]`
/// (the order in which cells joined the tree) or the cell id when `rank` is
/// empty. Throws EmptyCandidates.
EdgeId minimal_edge(const WeightedGraph& dual, std::span<const EdgeId> candidates, const std::vector<char>& in_tree,
                    std::span<const int> rank = {});

enum class RocCandidates {
    /// Only boundary cells joined to the tree by several edges compete.
    MultiEdgeCells,
    /// Every boundary cell competes; single-edge cells add no congestion.
    AllBoundaryCells,
};

enum class RocIndex {
    /// Cells are indexed by the order in which they joined the tree.
    JoinOrder,
    /// Cells are indexed by their dual vertex id.
    CellId,
};

struct RocOptions {
    RocCandidates candidates = RocCandidates::MultiEdgeCells;
    RocIndex index = RocIndex::JoinOrder;
    /// Leave dual loops out of the relative congestion, as the array-based
    /// formulation that only appends edges between a new cell and the tree.
    bool skip_loops = false;
    bool parallel = true;
};

PlanarResult roc(const PlanarEmbedding& embedding, Norm p, const RocOptions& options = {});

/// Dual tree grown from one root, as dual edge ids in attachment order.
std::vector<EdgeId> roc_dual_tree(const DualGraph& dual, int root, Norm p, const RocOptions& options = {});

}  // namespace stc
