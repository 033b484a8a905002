#include "schelling/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "schelling/welfare.hpp"

namespace schelling {

namespace {

// First `count` vertices in breadth-first order from `start`, neighbors
// visited ascending.
std::vector<int> bfs_prefix(const Graph& graph, int start, int count) {
  std::vector<int> order;
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<int> queue = {start};
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    if (static_cast<int>(order.size()) == count) return order;
    for (int w : graph.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  throw std::logic_error("bfs_prefix ran out of vertices");
}

}  // namespace

std::int64_t direct_placement_threshold(int max_degree, int reds, int blues) {
  std::int64_t d = max_degree;
  return (d + 1) * static_cast<std::int64_t>(reds) *
         (1 + d * static_cast<std::int64_t>(blues));
}

Kernelization kernelize(const Instance& instance) {
  if (instance.num_types() != 2) {
    throw std::invalid_argument("kernelization needs exactly two agent types");
  }
  const Graph& graph = instance.graph();
  int reds = instance.type_counts()[0];
  int blues = instance.type_counts()[1];
  auto components = graph.components();
  const auto& largest = components.front();

  std::int64_t threshold =
      direct_placement_threshold(graph.max_degree(), reds, blues);
  if (reds >= 2 && blues >= 2 &&
      static_cast<std::int64_t>(largest.size()) >= threshold) {
    Assignment direct(graph.vertex_count());
    std::vector<int> red_set = bfs_prefix(graph, largest.front(), reds);
    for (int v : red_set) direct.place(v, 0);

    // Candidate blue territory: the largest component minus the closed
    // neighborhood of the red cluster.
    std::vector<bool> excluded(graph.vertex_count(), false);
    for (int v : red_set) {
      excluded[v] = true;
      for (int w : graph.neighbors(v)) excluded[w] = true;
    }
    std::vector<int> remainder;
    for (int v : largest) {
      if (!excluded[v]) remainder.push_back(v);
    }
    std::vector<int> to_original;
    Graph territory = graph.induced(remainder, &to_original);
    for (const auto& component : territory.components()) {
      if (static_cast<int>(component.size()) < blues) continue;
      std::vector<int> blue_set =
          bfs_prefix(territory, component.front(), blues);
      for (int v : blue_set) direct.place(to_original[v], 1);
      Kernelization result;
      result.direct = std::move(direct);
      return result;
    }
    // The threshold guarantees a big enough far-away component.
    throw std::logic_error("direct placement found no blue territory");
  }

  int keep = std::min<int>(reds + blues, static_cast<int>(components.size()));
  std::vector<int> kept_vertices;
  for (int i = 0; i < keep; ++i) {
    kept_vertices.insert(kept_vertices.end(), components[i].begin(),
                         components[i].end());
  }
  Kernelization result;
  Graph reduced_graph = graph.induced(kept_vertices, &result.to_original);
  result.reduced = Instance(std::move(reduced_graph), instance.type_counts());
  return result;
}

WelfareOptimum solve_via_kernel(const Instance& instance,
                                std::optional<std::uint64_t> budget) {
  Kernelization kernel = kernelize(instance);
  if (kernel.is_direct()) {
    return WelfareOptimum{social_welfare(instance, *kernel.direct),
                          *kernel.direct};
  }
  WelfareOptimum inner = max_social_welfare(*kernel.reduced, budget);
  Assignment lifted(instance.graph().vertex_count());
  for (int v = 0; v < inner.assignment.size(); ++v) {
    if (inner.assignment.occupied(v)) {
      lifted.place(kernel.to_original[v], inner.assignment.type_at(v));
    }
  }
  return WelfareOptimum{inner.welfare, std::move(lifted)};
}

}  // namespace schelling
