#include "schelling/perfect_xp.hpp"

#include <algorithm>
#include <stdexcept>

#include "schelling/welfare.hpp"

namespace schelling {

namespace {

// First `count` vertices of a BFS that never leaves `component`. The prefix
// induces a connected subgraph, so with count >= 2 every prefix vertex keeps
// a neighbor inside the prefix.
std::vector<int> bfs_prefix_within(const Graph& graph,
                                   const std::vector<int>& component, int count) {
  std::vector<bool> allowed(graph.vertex_count(), false);
  for (int v : component) allowed[v] = true;
  std::vector<int> order;
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<int> queue = {component.front()};
  seen[component.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    if (static_cast<int>(order.size()) == count) break;
    for (int w : graph.neighbors(v)) {
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return order;
}

bool connected_without(const Graph& graph, const std::vector<int>& component,
                       int removed) {
  if (component.size() <= 1) return false;
  std::vector<bool> allowed(graph.vertex_count(), false);
  for (int v : component) allowed[v] = true;
  allowed[removed] = false;
  int start = -1;
  for (int v : component) {
    if (v != removed) {
      start = v;
      break;
    }
  }
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : graph.neighbors(v)) {
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return visited == static_cast<int>(component.size()) - 1;
}

// Places `reds` type-0 agents on the usable components (original vertex ids,
// every component of size >= 2, sorted largest first). Fails only when no
// placement with all-friendly neighborhoods exists.
bool place_reds(const Graph& graph,
                const std::vector<std::vector<int>>& usable, int reds,
                Assignment& assignment) {
  std::vector<const std::vector<int>*> filled;
  int remaining = reds;
  for (const auto& component : usable) {
    if (remaining == 0) break;
    int size = static_cast<int>(component.size());
    if (remaining >= size) {
      for (int v : component) assignment.place(v, 0);
      filled.push_back(&component);
      remaining -= size;
      continue;
    }
    if (remaining >= 2) {
      for (int v : bfs_prefix_within(graph, component, remaining)) {
        assignment.place(v, 0);
      }
      remaining = 0;
      continue;
    }
    // One agent left over: it would sit alone in this component, so pull a
    // companion out of an earlier fully-filled component that stays connected
    // without it.
    int donor = -1;
    for (const auto* full : filled) {
      if (full->size() < 3) continue;
      for (int v : *full) {
        if (connected_without(graph, *full, v)) {
          donor = v;
          break;
        }
      }
      if (donor != -1) break;
    }
    if (donor == -1) return false;
    assignment.clear(donor);
    int lone = component.front();
    assignment.place(lone, 0);
    for (int w : graph.neighbors(lone)) {
      // The companion must stay inside this component; other neighbors of
      // `lone` border the second type's set.
      if (std::binary_search(component.begin(), component.end(), w) &&
          !assignment.occupied(w)) {
        assignment.place(w, 0);
        break;
      }
    }
    remaining = 0;
  }
  return remaining == 0;
}

}  // namespace

std::optional<Assignment> find_perfect_two_types(const Instance& instance) {
  if (instance.num_types() != 2) {
    throw std::invalid_argument("perfect search needs exactly two agent types");
  }
  const Graph& graph = instance.graph();
  int n = graph.vertex_count();
  int reds = instance.type_counts()[0];
  int blues = instance.type_counts()[1];
  // A type with a single agent can never see a friend.
  if (reds < 2 || blues < 2) return std::nullopt;

  std::vector<int> pick(blues);
  for (int i = 0; i < blues; ++i) pick[i] = i;
  while (true) {
    // Every agent of the second type needs a same-type neighbor, and nothing
    // else may touch the set, so its induced components must all have >= 2
    // vertices.
    std::vector<int> to_original;
    Graph blue_graph = graph.induced(pick, &to_original);
    bool blues_fine = true;
    for (const auto& component : blue_graph.components()) {
      if (component.size() < 2) {
        blues_fine = false;
        break;
      }
    }
    if (blues_fine) {
      std::vector<bool> forbidden(n, false);
      for (int v : pick) {
        forbidden[v] = true;
        for (int w : graph.neighbors(v)) forbidden[w] = true;
      }
      std::vector<int> territory;
      for (int v = 0; v < n; ++v) {
        if (!forbidden[v]) territory.push_back(v);
      }
      std::vector<int> territory_map;
      Graph territory_graph = graph.induced(territory, &territory_map);
      std::vector<std::vector<int>> usable;
      int capacity = 0;
      for (const auto& component : territory_graph.components()) {
        if (component.size() < 2) continue;
        std::vector<int> original;
        for (int v : component) original.push_back(territory_map[v]);
        capacity += static_cast<int>(original.size());
        usable.push_back(std::move(original));
      }
      if (capacity >= reds) {
        Assignment assignment(n);
        for (int v : pick) assignment.place(v, 1);
        if (place_reds(graph, usable, reds, assignment)) {
          if (!is_perfect(instance, assignment)) {
            throw std::logic_error("constructed assignment is not perfect");
          }
          return assignment;
        }
      }
    }
    // Next combination in lexicographic order.
    int i = blues - 1;
    while (i >= 0 && pick[i] == n - blues + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < blues; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace schelling
