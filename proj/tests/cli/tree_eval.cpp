// Reads a graph and a tree file, revalidates the tree and prints C_p.

#include <cstdio>
#include <exception>
#include <string>

#include "stc/congestion.hpp"
#include "stc/io.hpp"

int main(int argc, char** argv)
{
    if (argc != 4) {
        std::fprintf(stderr, "usage: tree_eval graph.json tree.json p\n");
        return 2;
    }
    try {
        const stc::WeightedGraph g = stc::read_graph_file(argv[1]);
        const stc::SpanningTree t = stc::read_tree_file(g, argv[2]);
        const double v = stc::lp_norm(stc::edge_congestions(g, t).values, stc::Norm::parse(argv[3]));
        std::printf("%.12g\n", v);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    }
    return 0;
}
