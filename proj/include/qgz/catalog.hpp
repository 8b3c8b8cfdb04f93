#pragma once

#include <random>
#include <vector>

#include "qgz/graph.hpp"

namespace qgz {

/// All connected simple graphs on exactly n labeled vertices (edge-subset
/// enumeration; duplicates up to isomorphism are kept).  n <= 6.
std::vector<Graph> all_connected_graphs(int n);

/// Random connected graph on n vertices: random spanning tree plus each
/// remaining edge with the given probability.
Graph random_connected_graph(std::mt19937& rng, int n,
                             double extra_edge_prob = 0.3);

/// Random tree on n vertices (uniform attachment).
Graph random_tree(std::mt19937& rng, int n);

}  // namespace qgz
