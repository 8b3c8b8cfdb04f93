#include "qgz/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "qgz/errors.hpp"

namespace qgz {

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) {
    throw EmptyGraphError("edge list is empty");
  }

  int max_vertex = 0;
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0) {
      throw GraphError("negative vertex index in edge (" + std::to_string(u) +
                       "," + std::to_string(v) + ")");
    }
    if (u == v) {
      throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    }
    max_vertex = std::max({max_vertex, u, v});
  }

  Graph g;
  g.edges_ = pairs;
  const int n = max_vertex + 1;
  g.degrees_.assign(n, 0);
  g.adj_.assign(n, {});
  for (const auto& [u, v] : pairs) {
    ++g.degrees_[u];
    ++g.degrees_[v];
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }

  // connectivity (BFS from 0)
  std::vector<char> reached(n, 0);
  std::queue<int> q;
  q.push(0);
  reached[0] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj_[u]) {
      if (!reached[w]) {
        reached[w] = 1;
        q.push(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!reached[v]) {
      throw DisconnectedError("vertex " + std::to_string(v) +
                              " is not reachable from vertex 0");
    }
  }
  return g;
}

Graph Graph::complete_bipartite(int m, int p) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(m) * p);
  for (int u = 0; u < m; ++u) {
    for (int w = 0; w < p; ++w) {
      pairs.emplace_back(u, m + w);
    }
  }
  return from_edge_list(pairs);
}

Graph Graph::star(int edge_count) { return complete_bipartite(1, edge_count); }

Graph Graph::cycle(int n) {
  if (n < 3) {
    throw GraphError("cycle needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    pairs.emplace_back(i, (i + 1) % n);
  }
  return from_edge_list(pairs);
}

Graph Graph::parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) {
      throw GraphError("cannot parse edge on line " + std::to_string(lineno) +
                       ": '" + line + "'");
    }
    pairs.emplace_back(u, v);
  }
  return from_edge_list(pairs);
}

Graph Graph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphError("cannot open edge-list file '" + path + "'");
  }
  return parse_edge_list(in);
}

bool Graph::is_bipartite() const {
  const int n = vertex_count();
  std::vector<int> color(n, -1);
  std::queue<int> q;
  q.push(0);
  color[0] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        q.push(w);
      } else if (color[w] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qgz
