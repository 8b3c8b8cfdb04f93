#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qgz {

/// A finite simple connected undirected graph with dense 0-based vertex
/// indices.  Edges keep the orientation in which they were given (first
/// vertex is the x=0 end of the corresponding metric edge); no result
/// depends on that orientation.  Immutable after construction.
class Graph {
 public:
  /// Builds a graph from a list of (u,v) pairs.  The vertex count is
  /// max index + 1.  Rejects self-loops, duplicate edges, empty input
  /// and disconnected graphs.
  static Graph from_edge_list(const std::vector<std::pair<int, int>>& pairs);

  /// K_{m,p}: parts {0..m-1} and {m..m+p-1}, all mp edges oriented
  /// first part -> second part.
  static Graph complete_bipartite(int m, int p);

  /// Star with the given number of edges; vertex 0 is the center.
  /// Equals K_{1,edge_count} up to relabeling.
  static Graph star(int edge_count);

  /// Cycle C_n, n >= 3.
  static Graph cycle(int n);

  /// Edge-list text format: one edge per line, two whitespace-separated
  /// 0-based integers; '#' lines and blank lines are ignored.
  static Graph parse_edge_list(std::istream& in);
  static Graph load_edge_list(const std::string& path);

  int vertex_count() const { return static_cast<int>(degrees_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  /// First Betti number beta = E - V + 1 (graph is connected).
  int betti_number() const { return edge_count() - vertex_count() + 1; }

  /// True iff a 2-coloring exists (breadth-first 2-coloring).
  bool is_bipartite() const;

 private:
  Graph() = default;

  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace qgz
