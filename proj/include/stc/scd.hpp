#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc {

struct ScdOptions {
    Norm p = Norm::infinity();
    /// Secondary norm for the deep variant; C_q is evaluated at every tree on
    /// the descent path and the minimum is reported in visited_q_best.
    std::optional<Norm> q;
    std::uint64_t seed = 0;
    int restarts = 10;
    /// Starting tree for restart 0; later restarts start from random trees.
    std::optional<SpanningTree> initial_tree;
    /// Run restarts on OpenMP threads. Results are identical either way.
    bool parallel = true;
};

struct VisitedBest {
    SpanningTree tree;
    double value = 0.0;
};

struct DescentTrace {
    long long iterations = 0;       // outer passes over the edge list
    long long chord_scans = 0;      // cycles evaluated
    long long accepted_swaps = 0;
    /// C_p after the start and after every accepted swap. Strictly decreasing
    /// for finite p; for p = infinity the global maximum never increases.
    std::vector<double> congestion_history;
    SpanningTree best_tree;
    double best_value = 0.0;
    std::optional<VisitedBest> visited_q_best;
    int best_restart = 0;
    /// best_value reached by each restart, in restart order.
    std::vector<double> restart_values;
};

/// One descent from `start` until a full pass accepts no swap.
DescentTrace descend(const WeightedGraph& graph, const SpanningTree& start, Norm p, std::uint64_t seed,
                     std::optional<Norm> q = std::nullopt);

/// Best descent over `restarts` starts (restart r uses seed + r).
DescentTrace scd(const WeightedGraph& graph, const ScdOptions& options);

DescentTrace scd_deep(const WeightedGraph& graph, Norm p, Norm q, std::uint64_t seed, int restarts);

struct Swap {
    EdgeId insert = kNoEdge;
    EdgeId remove = kNoEdge;
};

/// Exhaustive check by full recomputation: returns a single exchange that the
/// descent would accept from `tree`, if any. For finite p that is a strict drop
/// of the sum of p-th powers; for p = infinity a strict drop of the maximum
/// over the exchanged cycle.
std::optional<Swap> find_improving_swap(const WeightedGraph& graph, const SpanningTree& tree, Norm p);

}  // namespace stc
