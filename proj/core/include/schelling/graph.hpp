#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace schelling {

// Simple undirected graph on vertices 0..n-1. Edges are stored canonically
// (u < v, sorted lexicographically); construction rejects self-loops,
// duplicates and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;

  // Connected components, largest first; ties broken by smallest contained
  // vertex. Vertices inside a component are ascending.
  std::vector<std::vector<int>> components() const;

  // Subgraph induced by `vertices`; `out_to_original` receives the map from
  // new vertex ids (positions) back to the originals.
  Graph induced(const std::vector<int>& vertices,
                std::vector<int>* out_to_original = nullptr) const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace schelling
