#include "qgz/catalog.hpp"

#include <utility>

#include "qgz/errors.hpp"

namespace qgz {

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 2 || n > 6) {
    throw DomainError("exhaustive catalog supports 2 <= n <= 6");
  }
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);

  std::vector<Graph> out;
  const unsigned total = 1u << all_edges.size();
  for (unsigned mask = 1; mask < total; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t e = 0; e < all_edges.size(); ++e) {
      if (mask & (1u << e)) pairs.push_back(all_edges[e]);
    }
    try {
      Graph g = Graph::from_edge_list(pairs);
      if (g.vertex_count() == n) out.push_back(std::move(g));
    } catch (const DisconnectedError&) {
      // skip
    }
  }
  return out;
}

Graph random_tree(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    pairs.emplace_back(pick(rng), v);
  }
  return Graph::from_edge_list(pairs);
}

Graph random_connected_graph(std::mt19937& rng, int n, double extra_edge_prob) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    pairs.emplace_back(u, v);
    present[u][v] = present[v][u] = 1;
  }
  std::bernoulli_distribution coin(extra_edge_prob);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[u][v] && coin(rng)) {
        pairs.emplace_back(u, v);
        present[u][v] = present[v][u] = 1;
      }
    }
  }
  return Graph::from_edge_list(pairs);
}

}  // namespace qgz
