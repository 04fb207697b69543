#pragma once

#include <cstdint>
#include <string>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc::cli {

struct AlgRun {
    std::string alg;
    Norm p = Norm::infinity();
    std::optional<Norm> q;
    std::uint64_t seed = 1;
    int restarts = 10;
};

struct AlgOutcome {
    double value = 0.0;  // C_q for scd-deep, C_p otherwise
    SpanningTree tree;
    double seconds = 0.0;
};

/// Runs scd, scd-deep, locbfs or roc. Planar algorithms need coordinates.
AlgOutcome run_algorithm(const WeightedGraph& graph, const AlgRun& run);

/// log(seconds) / log(m), the machine-bound complexity indicator.
double empirical_degree(double seconds, int edges);

inline constexpr const char* kCsvHeader = "graph,n,m,alg,p,value,seconds,empirical_degree,seed,tree_file";

/// Reproduces one of table2..table5 as CSV on `out`. Budget: small, medium
/// or full. Returns false for an unknown table or budget.
bool run_table(const std::string& name, const std::string& budget, std::ostream& out);

}  // namespace stc::cli
