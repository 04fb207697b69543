#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/graph.hpp"

namespace stc {

enum class Family {
    Complete,      // K_n                      sizes {n}
    Multipartite,  // K_{n_1,...,n_k}          sizes {n_1 >= ... >= n_k}
    Hypercube,     // H_d                      sizes {d}
    RectGrid,      // R_{m,n}, m x n nodes     sizes {m, n}
    TriGrid,       // T_n, n nodes per side    sizes {n}
    HexTri,        // Hex_n                    sizes {n}
    HexRect,       // Hex_{m,n}                sizes {m, n}
    Torus2,        // Z_m x Z_n                sizes {m, n}
    Torus3,        // Z_k^3                    sizes {k}
    CubeGrid,      // C_{k,k,k}                sizes {k}
    Gnp,           // G(n, p)                  sizes {n}, probability
    Pu,            // PU_n                     sizes {n}
};

enum class WeightMode { Unit, Plus, Minus, Euclidean };

struct FamilySpec {
    Family family = Family::Complete;
    std::vector<int> sizes;
    double probability = 0.0;
    std::uint64_t seed = 0;
    WeightMode weights = WeightMode::Unit;

    /// Display name such as "K_{25,25}" or "R^{w-}_{20,10}".
    std::string name() const;
};

std::string to_string(Family f);
std::string to_string(WeightMode w);
/// Accepts the long names of to_string() plus short aliases (k, kmn, h, r, t, ...).
Family parse_family(const std::string& text);
WeightMode parse_weight_mode(const std::string& text);

bool is_planar_family(Family f);

/// Builds the graph. Planar families and PU carry straight-line coordinates
/// with vertex ids in lexicographic (x, y) order. Throws InvalidParams,
/// DisconnectedSample, ZeroWeight.
///
/// Geometry: R_{m,n} has nodes (i, j), 0 <= i < m, 0 <= j < n. T_n has rows
/// i = 0..n-1 of i+1 nodes at (j - i/2, i*sqrt(3)/2), each unit triangle
/// bounded by three edges. Hexagons are pointy-top with unit circumradius:
/// Hex_{m,n} stacks n rows of m hexagons with odd rows shifted right by half
/// a hexagon; Hex_n stacks rows of n, n-1, ..., 1 hexagons, each row shifted
/// by half a hexagon. Shared corners are merged.
WeightedGraph generate(const FamilySpec& spec);

/// Seed actually used for G(n,p) after rejecting disconnected samples.
struct GnpSample {
    WeightedGraph graph;
    std::uint64_t seed_used = 0;
    int rejected = 0;
};
GnpSample sample_gnp(int n, double p, std::uint64_t seed);

/// omega_+(uv) = l(u) + l(v), omega_-(uv) = |l(u) - l(v)|. With no labels the
/// vertex ids are used. Throws ZeroWeight.
WeightedGraph label_weights(const WeightedGraph& graph, WeightMode mode, std::span<const double> labels = {});

enum class TreeKind { Radial, TStar, TS, TM, HypercubeDoubling };

struct TreeRequest {
    TreeKind kind = TreeKind::Radial;
    int vertex = 0;  // radial centre
    int i = 0;       // part indices, 1-based, j < i
    int j = 0;
};

/// Named spanning trees of the family graphs. In K_{n_1..n_k} the hub of
/// T_S(i,j) and T_M(i,j) is the first vertex of X_i; the exceptional vertex
/// of T_S(i,j) is the last vertex of X_j, and T_M matches the rest of X_i to
/// the first vertices of X_j. Throws KindFamilyMismatch.
SpanningTree named_tree(const FamilySpec& spec, const WeightedGraph& graph, const TreeRequest& request);

enum class FormulaRole { Exact, UpperBound, Conjecture };
std::string to_string(FormulaRole r);

struct FormulaValue {
    double value = 0.0;
    FormulaRole role = FormulaRole::Exact;
};

/// Closed-form C_p for the family. Throws NoFormula.
FormulaValue closed_form(const FamilySpec& spec, Norm p);

/// C_p of T_S(i,j) and T_M(i,j) in K_{n_1..n_k} from the closed displays.
double multipartite_ts_value(std::span<const int> parts, int i, int j, Norm p);
double multipartite_tm_value(std::span<const int> parts, int i, int j, Norm p);

}  // namespace stc
