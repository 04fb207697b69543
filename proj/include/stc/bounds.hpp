#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc {

enum class MMode { Exact, Heuristic };

/// Edge-disjoint u-v path bound. Exact: maximum number of edge-disjoint
/// paths by unit-capacity augmenting paths (unweighted graphs only).
/// Heuristic: repeatedly take a widest path, add its bottleneck and delete
/// its edges; a lower bound on the congestion of any tree edge separating
/// u and v. Throws SameVertex, ExactModeOnWeighted.
double m_bound(const WeightedGraph& graph, VertexId u, VertexId v, MMode mode);

/// m_bound over the endpoints of every edge (the per-edge key).
std::vector<double> m_keys(const WeightedGraph& graph, MMode mode);

/// max over all vertex pairs; pairs run on OpenMP threads.
double max_m_bound(const WeightedGraph& graph, MMode mode);
double max_m_bound_serial(const WeightedGraph& graph, MMode mode);

/// L^p norm of `key` over the key-minimal Kruskal tree.
double kruskal_lower_bound(const WeightedGraph& graph, std::span<const double> key, Norm p);

/// 2 w(G) - w(T*) with T* a maximum weight spanning tree; bounds C_1.
double edge_count_lower_bound(const WeightedGraph& graph);

struct CheegerResult {
    double phi = 0.0;               // min over cuts of e(X,X^c) / min(vol X, vol X^c)
    std::vector<double> per_edge;   // same, over cuts separating the edge's ends
    double phi_small_side = 0.0;    // min over |X| <= n/2 of e(X,X^c) / vol X
};

/// Exhaustive scan of all 2^(n-1) - 1 bipartitions in Gray-code order,
/// chunked over OpenMP threads. Throws TooLarge above 22 vertices.
CheegerResult cheeger_bruteforce(const WeightedGraph& graph);
CheegerResult cheeger_bruteforce_serial(const WeightedGraph& graph);

inline constexpr int kCheegerMaxVertices = 22;

enum class CheegerPrefactor {
    /// delta_w * max((n-1)/Delta, floor(diam/2))
    Proposition,
    /// (delta_w/Delta) * max(n-1, diam/2), the variant displayed before it
    InlineDisplay,
    /// delta_w alone. Both sides of any tree edge have volume at least
    /// delta_w, so this is the factor that holds edge by edge.
    EdgeCut,
};

double cheeger_prefactor(const WeightedGraph& graph, CheegerPrefactor variant);

/// Kruskal bound with the localized Cheeger key, scaled by the prefactor.
double cheeger_lp_bound(const WeightedGraph& graph, const CheegerResult& cheeger, Norm p,
                        CheegerPrefactor variant = CheegerPrefactor::Proposition);

struct BoundEntry {
    std::string name;
    double value = 0.0;
    bool lower = true;       // false for upper bounds
    bool heuristic = false;  // computed by a heuristic rather than exactly
    /// Part of the reported maximum. Bounds stated only for unweighted graphs
    /// are listed but not counted on weighted inputs.
    bool counted = true;
};

struct BoundReport {
    Norm p = Norm::infinity();
    std::vector<BoundEntry> entries;
    /// Largest counted lower bound, or 0 when none applies.
    double best_lower() const;
    const BoundEntry* find(const std::string& name) const;
};

/// 2|E|/(|V|-1) - 1, |E| - |V| + 2, max m(u,v), and the classical Cheeger
/// bound, all for C_inf of the unweighted skeleton.
BoundReport generic_bounds(const WeightedGraph& graph);

struct BoundOptions {
    bool cheeger = true;   // skipped above kCheegerMaxVertices regardless
    /// Prefactor of the uncounted "cheeger_local_scaled" entry. The counted
    /// "cheeger_local" entry always uses EdgeCut: the scaled forms bound the
    /// most balanced tree edge only, and fail edge by edge (weights 3,1,3,3
    /// on C_4 give 4.5 against an optimum of 4).
    CheegerPrefactor prefactor = CheegerPrefactor::Proposition;
    bool cycle_rank = true;  // needs coordinates
};

/// Every bound that applies to (graph, p).
BoundReport all_bounds(const WeightedGraph& graph, Norm p, const BoundOptions& options = {});

}  // namespace stc
