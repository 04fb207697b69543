#include "commands.hpp"

#include <chrono>
#include <cmath>

#include "stc/locbfs.hpp"
#include "stc/planar.hpp"
#include "stc/roc.hpp"
#include "stc/scd.hpp"

namespace stc::cli {

AlgOutcome run_algorithm(const WeightedGraph& graph, const AlgRun& run)
{
    const auto start = std::chrono::steady_clock::now();
    AlgOutcome out;
    if (run.alg == "scd" || run.alg == "scd-deep") {
        ScdOptions o;
        o.p = run.p;
        o.seed = run.seed;
        o.restarts = run.restarts;
        if (run.alg == "scd-deep") o.q = run.q.value_or(Norm::infinity());
        const DescentTrace t = scd(graph, o);
        if (o.q) {
            out.value = t.visited_q_best->value;
            out.tree = t.visited_q_best->tree;
        } else {
            out.value = t.best_value;
            out.tree = t.best_tree;
        }
    } else if (run.alg == "locbfs" || run.alg == "roc") {
        if (!graph.has_coordinates()) throw Error(ErrorCode::NotPlanar, run.alg + " needs vertex coordinates");
        const PlanarEmbedding emb = build_embedding(graph);
        const PlanarResult r = run.alg == "locbfs" ? locbfs(emb, run.p) : roc(emb, run.p);
        out.value = r.value;
        out.tree = r.tree;
    } else {
        throw Error(ErrorCode::InvalidParams, "unknown algorithm '" + run.alg + "'");
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

double empirical_degree(double seconds, int edges)
{
    if (edges < 2 || seconds <= 0.0) return 0.0;
    return std::log(seconds) / std::log(static_cast<double>(edges));
}

}  // namespace stc::cli
