#include "schelling/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schelling {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count_, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(vertex_count_, false);
  for (int start = 0; start < vertex_count_; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::vector<int> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return result;
}

Graph Graph::induced(const std::vector<int>& vertices,
                     std::vector<int>* out_to_original) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> to_new(vertex_count_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= vertex_count_) {
      throw std::invalid_argument("induced vertex out of range");
    }
    to_new[sorted[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> new_edges;
  for (auto [u, v] : edges_) {
    if (to_new[u] >= 0 && to_new[v] >= 0) {
      new_edges.emplace_back(to_new[u], to_new[v]);
    }
  }
  if (out_to_original) *out_to_original = sorted;
  return Graph(static_cast<int>(sorted.size()), std::move(new_edges));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

}  // namespace schelling
