#pragma once

#include <span>
#include <string>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

/// Norm exponent p in {1, 2, ...} or infinity.
class Norm {
public:
    static constexpr Norm infinity() { return Norm(0); }
    static Norm finite(int p)
    {
        if (p < 1) throw Error(ErrorCode::InvalidParams, "norm exponent must be a positive integer");
        return Norm(p);
    }
    /// Parses "inf", "infinity" or a positive integer.
    static Norm parse(const std::string& text);

    constexpr bool is_infinite() const noexcept { return p_ == 0; }
    /// Exponent for finite norms; 0 for infinity.
    constexpr int order() const noexcept { return p_; }
    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

    friend constexpr bool operator==(Norm a, Norm b) noexcept { return a.p_ == b.p_; }

private:
    constexpr explicit Norm(int p) : p_(p) {}
    int p_;
};

/// Per-tree-edge congestions indexed like SpanningTree::edge_ids().
struct CongestionVector {
    std::vector<double> values;
};

/// Congestion of every tree edge: its own weight plus the weight of each
/// non-tree edge whose tree path crosses it. Non-tree edges are accumulated in
/// ascending id order so float results are reproducible.
CongestionVector edge_congestions(const WeightedGraph& graph, const SpanningTree& tree);

/// Same values via subtree sums of endpoint/LCA charges, evaluated with an
/// OpenMP reduction over edges. Bit-identical to edge_congestions() for
/// integer weights; within rounding otherwise.
CongestionVector edge_congestions_parallel(const WeightedGraph& graph, const SpanningTree& tree);

double lp_norm(std::span<const double> values, Norm p);

struct SwapResult {
    SpanningTree tree;
    CongestionVector congestion;
};

/// Exchange `remove` (on the tree cycle of `insert`) for `insert`. Only the
/// cycle entries are recomputed; `insert` takes the position of `remove`.
SwapResult swap_update(const WeightedGraph& graph, const SpanningTree& tree, const CongestionVector& cong,
                       EdgeId insert, EdgeId remove);

/// Comparable aggregate of congestion values under a norm: the sum of p-th
/// powers for finite p (no root), the maximum for p = infinity. With integer
/// weights whose powers fit, sums are carried exactly in 128-bit integers.
class Objective {
public:
    struct Score {
        __int128 exact = 0;
        long double approx = 0;
    };

    Objective(const WeightedGraph& graph, Norm p);
    Objective(Norm p, bool integer_weights, double total_weight, int terms);

    Norm norm() const noexcept { return norm_; }
    bool exact() const noexcept { return exact_; }

    Score zero() const { return Score{}; }
    Score term(double c) const;
    Score aggregate(std::span<const double> values) const;
    void accumulate(Score& acc, double c) const;

    /// Strict improvement test. Exact mode compares integers; float mode
    /// demands a relative margin so rounding noise cannot cycle a descent.
    bool better(const Score& candidate, const Score& incumbent) const;
    bool equal(const Score& a, const Score& b) const;
    /// candidate_sum / candidate_count < incumbent_sum / incumbent_count.
    bool better_mean(const Score& cand, long long cand_count, const Score& inc, long long inc_count) const;
    bool equal_mean(const Score& a, long long a_count, const Score& b, long long b_count) const;

    /// Norm value for a full-tree aggregate (takes the p-th root).
    double value(const Score& s) const;

private:
    Norm norm_;
    bool exact_ = false;
};

/// Evaluates every exchange on the tree cycle of one non-tree edge at once.
///
/// Deleting the cycle path splits the tree into components A_0..A_L strung
/// along the path; after removing path edge j and inserting the chord, every
/// cycle edge separates a cyclic interval of those components. Interval cuts
/// come from a 2D prefix table of the inter-component weight matrix, so all L
/// exchanges cost O(n + m + L^2).
class CycleExchange {
public:
    explicit CycleExchange(const WeightedGraph& graph);

    /// `path` is tree_path(chord.u, chord.v); `tree_adj` the current tree
    /// adjacency (vertex -> incident tree edge ids).
    void load(EdgeId chord, std::span<const EdgeId> path, const std::vector<std::vector<EdgeId>>& tree_adj);

    int path_length() const noexcept { return path_len_; }
    /// New congestion of path edge i (i != removed) after removing path edge
    /// `removed`; i == path_length() addresses the chord.
    double congestion_after(int removed, int i) const;
    /// Congestion of path edge i in the current tree.
    double congestion_now(int i) const;

private:
    double interval_cut(int start, int len) const;

    const WeightedGraph* graph_;
    int path_len_ = 0;
    std::vector<int> comp_;
    std::vector<VertexId> stack_;
    std::vector<double> weight_;   // (L+1)x(L+1)
    std::vector<double> prefix_;   // (2K+1)x(2K+1) over the doubled cyclic order
    std::vector<double> comp_deg_;
};

}  // namespace stc
