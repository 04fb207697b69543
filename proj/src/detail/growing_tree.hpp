#pragma once

#include <vector>

#include "stc/graph.hpp"

namespace stc::detail {

/// Rooted tree grown one cell at a time inside the dual graph.
struct GrowingTree {
    const WeightedGraph* g = nullptr;
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<int> depth;

    GrowingTree(const WeightedGraph& graph, VertexId root)
        : g(&graph),
          parent(static_cast<std::size_t>(graph.vertex_count()), kNoVertex),
          parent_edge(static_cast<std::size_t>(graph.vertex_count()), kNoEdge),
          depth(static_cast<std::size_t>(graph.vertex_count()), -1)
    {
        depth[static_cast<std::size_t>(root)] = 0;
    }

    bool contains(VertexId v) const { return depth[static_cast<std::size_t>(v)] >= 0; }

    void attach(VertexId v, EdgeId e)
    {
        const VertexId a = g->other_end(e, v);
        parent[static_cast<std::size_t>(v)] = a;
        parent_edge[static_cast<std::size_t>(v)] = e;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(a)] + 1;
    }

    /// Weighted length of the tree path between two cells of the tree.
    double distance(VertexId a, VertexId b) const
    {
        double s = 0.0;
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
            s += g->edge(parent_edge[static_cast<std::size_t>(a)]).w;
            a = parent[static_cast<std::size_t>(a)];
        }
        return s;
    }

    std::vector<EdgeId> edges() const
    {
        std::vector<EdgeId> out;
        for (EdgeId e : parent_edge)
            if (e != kNoEdge) out.push_back(e);
        return out;
    }
};

}  // namespace stc::detail
