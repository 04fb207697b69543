#pragma once

#include <string>

#include "stc/graph.hpp"

namespace stc {

/// Graph JSON: {"vertices":[{"id":0,"x":0.0,"y":0.0}],"edges":[{"u":0,"v":1,"w":1.0}]}.
/// x and y are optional but all-or-none; w defaults to 1. Throws Parse.
WeightedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const WeightedGraph& graph);
WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedGraph& graph);

/// Tree JSON: {"edges":[[u,v],...]}. Endpoint pairs are matched against the
/// graph; throws Parse, TreeGraphMismatch and the validate_tree errors.
SpanningTree parse_tree_json(const WeightedGraph& graph, const std::string& text);
std::string tree_to_json(const WeightedGraph& graph, const SpanningTree& tree);
SpanningTree read_tree_file(const WeightedGraph& graph, const std::string& path);
void write_tree_file(const std::string& path, const WeightedGraph& graph, const SpanningTree& tree);

}  // namespace stc
