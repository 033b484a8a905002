#include "schelling/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schelling {

namespace {

std::string bag_to_string(const std::vector<int>& bag) {
  std::string s = "{";
  for (std::size_t i = 0; i < bag.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(bag[i]);
  }
  return s + "}";
}

// Greedy elimination order; min-fill counts missing edges among current
// neighbors, min-degree counts the neighbors. Ties go to the smallest vertex.
std::vector<int> greedy_elimination(const Graph& graph, bool min_fill) {
  int n = graph.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : graph.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> eliminated(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int round = 0; round < n; ++round) {
    int best = -1;
    long long best_score = std::numeric_limits<long long>::max();
    for (int v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      long long score = 0;
      if (min_fill) {
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!adj[nb[i]].count(nb[j])) ++score;
          }
        }
      } else {
        score = static_cast<long long>(adj[v].size());
      }
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    for (int w : nb) adj[w].erase(best);
    adj[best].clear();
    eliminated[best] = true;
    order.push_back(best);
  }
  return order;
}

// Exact treewidth by dynamic programming over vertex subsets: the best width
// achievable when S is the set already eliminated, minimized over the last
// eliminated vertex. The bag of v after eliminating S is every vertex outside
// reachable from v through S.
std::vector<int> exact_elimination(const Graph& graph) {
  int n = graph.vertex_count();
  if (n > 12) {
    throw std::invalid_argument(
        "exact_small strategy handles at most 12 vertices, got " +
        std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : graph.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  auto bag_after = [&](int v, std::uint32_t through) {
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t result = 0;
    while (frontier) {
      int w = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = adj[w] & ~seen;
      seen |= fresh;
      frontier |= fresh & through;
      result |= fresh & ~through;
    }
    return result & ~(1u << v);
  };
  std::uint32_t full = n == 0 ? 0 : ((1u << n) - 1);
  std::vector<std::int8_t> width(full + 1, 0);
  std::vector<std::int8_t> choice(full + 1, -1);
  width[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::int8_t best = std::numeric_limits<std::int8_t>::max();
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = s & ~(1u << v);
      int candidate = std::max<int>(width[prev],
                                    std::popcount(bag_after(v, prev)));
      if (candidate < best) {
        best = static_cast<std::int8_t>(candidate);
        choice[s] = static_cast<std::int8_t>(v);
      }
    }
    width[s] = best;
  }
  std::vector<int> order;
  order.reserve(n);
  for (std::uint32_t s = full; s;) {
    int v = choice[s];
    order.push_back(v);
    s &= ~(1u << v);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

TreeDecomposition from_elimination_order(const Graph& graph,
                                         const std::vector<int>& order) {
  int n = graph.vertex_count();
  if (n == 0) {
    return TreeDecomposition{{{}}, {-1}};
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : graph.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    std::vector<int> bag = nb;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    if (!nb.empty()) {
      int earliest = nb.front();
      for (int w : nb) {
        if (position[w] < position[earliest]) earliest = w;
      }
      td.parent[i] = position[earliest];
    }
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    }
    for (int w : nb) adj[w].erase(v);
    adj[v].clear();
  }
  return td;
}

}  // namespace

int TreeDecomposition::width() const {
  int best = -1;
  for (const auto& bag : bags) {
    best = std::max(best, static_cast<int>(bag.size()) - 1);
  }
  return best;
}

std::optional<DecompositionStrategy> strategy_from_name(std::string_view name) {
  if (name == "min_fill") return DecompositionStrategy::MinFill;
  if (name == "min_degree") return DecompositionStrategy::MinDegree;
  if (name == "exact_small") return DecompositionStrategy::ExactSmall;
  return std::nullopt;
}

const char* strategy_name(DecompositionStrategy strategy) {
  switch (strategy) {
    case DecompositionStrategy::MinFill: return "min_fill";
    case DecompositionStrategy::MinDegree: return "min_degree";
    case DecompositionStrategy::ExactSmall: return "exact_small";
  }
  return "?";
}

TreeDecomposition decompose(const Graph& graph, DecompositionStrategy strategy) {
  std::vector<int> order;
  switch (strategy) {
    case DecompositionStrategy::MinFill:
      order = greedy_elimination(graph, true);
      break;
    case DecompositionStrategy::MinDegree:
      order = greedy_elimination(graph, false);
      break;
    case DecompositionStrategy::ExactSmall:
      order = exact_elimination(graph);
      break;
  }
  return from_elimination_order(graph, order);
}

int NiceTreeDecomposition::width() const {
  int best = -1;
  for (const auto& bag : bags) {
    best = std::max(best, static_cast<int>(bag.size()) - 1);
  }
  return best;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
  std::vector<int> result;
  result.reserve(node_count());
  std::vector<std::pair<int, bool>> stack;
  if (root >= 0) stack.emplace_back(root, false);
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      result.push_back(node);
      continue;
    }
    stack.emplace_back(node, true);
    const auto& kids = children[node];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.emplace_back(*it, false);
    }
  }
  return result;
}

ValidationReport validate_decomposition(const Graph& graph,
                                        const TreeDecomposition& td) {
  int n = graph.vertex_count();
  std::size_t nodes = td.node_count();
  if (td.parent.size() != nodes) {
    return {false, "parent array size mismatch"};
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    int p = td.parent[i];
    if (p != -1 && (p < 0 || static_cast<std::size_t>(p) >= nodes)) {
      return {false, "node " + std::to_string(i) + " has invalid parent"};
    }
    const auto& bag = td.bags[i];
    for (int v : bag) {
      if (v < 0 || v >= n) {
        return {false, "bag " + std::to_string(i) + " contains out-of-range vertex " +
                           std::to_string(v)};
      }
    }
    auto sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return {false, "bag " + std::to_string(i) + " contains a duplicate vertex"};
    }
    if (sorted != bag) {
      return {false, "bag " + std::to_string(i) + " is not sorted"};
    }
  }
  // Parent pointers must describe a forest.
  {
    std::vector<int> state(nodes, 0);
    for (std::size_t i = 0; i < nodes; ++i) {
      int v = static_cast<int>(i);
      std::vector<int> trail;
      while (v != -1 && state[v] == 0) {
        state[v] = 1;
        trail.push_back(v);
        v = td.parent[v];
      }
      if (v != -1 && state[v] == 1) {
        return {false, "parent pointers contain a cycle through node " +
                           std::to_string(v)};
      }
      for (int t : trail) state[t] = 2;
    }
  }
  std::vector<char> covered(n, 0);
  for (const auto& bag : td.bags) {
    for (int v : bag) covered[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!covered[v]) {
      return {false, "vertex " + std::to_string(v) + " is in no bag"};
    }
  }
  for (auto [u, v] : graph.edges()) {
    bool found = false;
    for (const auto& bag : td.bags) {
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        found = true;
        break;
      }
    }
    if (!found) {
      return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is covered by no bag"};
    }
  }
  // Occurrences of each vertex must form one connected subtree.
  for (int v = 0; v < n; ++v) {
    int occurrences = 0;
    int links = 0;
    for (std::size_t i = 0; i < nodes; ++i) {
      if (!std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) continue;
      ++occurrences;
      int p = td.parent[i];
      if (p != -1 &&
          std::binary_search(td.bags[p].begin(), td.bags[p].end(), v)) {
        ++links;
      }
    }
    if (links != occurrences - 1) {
      return {false, "occurrences of vertex " + std::to_string(v) +
                         " are not connected"};
    }
  }
  return {true, ""};
}

NiceTreeDecomposition make_nice(const Graph& graph, const TreeDecomposition& td) {
  ValidationReport report = validate_decomposition(graph, td);
  if (!report.ok) {
    throw std::invalid_argument("invalid tree decomposition: " + report.diagnostic);
  }

  NiceTreeDecomposition out;
  auto add = [&out](std::vector<int> bag, NodeKind kind, int acted,
                    const std::vector<int>& kids) {
    int id = static_cast<int>(out.bags.size());
    out.bags.push_back(std::move(bag));
    out.kinds.push_back(kind);
    out.acted_vertex.push_back(acted);
    out.children.push_back(kids);
    out.parent.push_back(-1);
    for (int c : kids) out.parent[c] = id;
    return id;
  };

  std::size_t nodes = td.node_count();
  std::vector<std::vector<int>> kids(nodes);
  std::vector<int> roots;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (td.parent[i] == -1) {
      roots.push_back(static_cast<int>(i));
    } else {
      kids[td.parent[i]].push_back(static_cast<int>(i));
    }
  }

  // Grows a chain on top of `top` (whose bag is `from`) until its bag is `to`:
  // forget what disappears, introduce what appears, both ascending.
  auto morph = [&](int top, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> bag = from;
    for (int v : from) {
      if (!std::binary_search(to.begin(), to.end(), v)) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        top = add(bag, NodeKind::Forget, v, {top});
      }
    }
    for (int v : to) {
      if (!std::binary_search(from.begin(), from.end(), v)) {
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        top = add(bag, NodeKind::Introduce, v, {top});
      }
    }
    return top;
  };

  std::vector<int> built(nodes, -1);  // nice node whose bag equals td bag
  std::vector<int> component_tops;
  for (int root : roots) {
    // Iterative postorder over this component.
    std::vector<std::pair<int, bool>> stack = {{root, false}};
    while (!stack.empty()) {
      auto [node, expanded] = stack.back();
      stack.pop_back();
      if (!expanded) {
        stack.emplace_back(node, true);
        for (auto it = kids[node].rbegin(); it != kids[node].rend(); ++it) {
          stack.emplace_back(*it, false);
        }
        continue;
      }
      const auto& bag = td.bags[node];
      std::vector<int> branches;
      for (int child : kids[node]) {
        branches.push_back(morph(built[child], td.bags[child], bag));
      }
      int top;
      if (branches.empty()) {
        top = add({}, NodeKind::Leaf, -1, {});
        top = morph(top, {}, bag);
      } else {
        top = branches.front();
        for (std::size_t j = 1; j < branches.size(); ++j) {
          top = add(bag, NodeKind::Join, -1, {top, branches[j]});
        }
      }
      built[node] = top;
    }
    component_tops.push_back(morph(built[root], td.bags[root], {}));
  }

  int final_top;
  if (component_tops.empty()) {
    final_top = add({}, NodeKind::Leaf, -1, {});
  } else {
    final_top = component_tops.front();
    for (std::size_t j = 1; j < component_tops.size(); ++j) {
      final_top = add({}, NodeKind::Join, -1, {final_top, component_tops[j]});
    }
  }
  out.root = final_top;
  return out;
}

ValidationReport validate_nice(const Graph& graph,
                               const NiceTreeDecomposition& ntd) {
  std::size_t nodes = ntd.node_count();
  if (ntd.parent.size() != nodes || ntd.children.size() != nodes ||
      ntd.kinds.size() != nodes || ntd.acted_vertex.size() != nodes) {
    return {false, "structure arrays disagree on node count"};
  }
  if (nodes == 0) {
    return {false, "no nodes"};
  }
  if (ntd.root < 0 || static_cast<std::size_t>(ntd.root) >= nodes) {
    return {false, "root out of range"};
  }
  if (ntd.parent[ntd.root] != -1) {
    return {false, "root has a parent"};
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    for (int c : ntd.children[i]) {
      if (c < 0 || static_cast<std::size_t>(c) >= nodes) {
        return {false, "node " + std::to_string(i) + " has out-of-range child"};
      }
      if (ntd.parent[c] != static_cast<int>(i)) {
        return {false, "parent/children arrays disagree at node " +
                           std::to_string(c)};
      }
    }
    if (static_cast<int>(i) != ntd.root && ntd.parent[i] == -1) {
      return {false, "node " + std::to_string(i) + " is a second root"};
    }
  }
  // Reachability from the root (also rules out cycles).
  {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack = {ntd.root};
    seen[ntd.root] = 1;
    std::size_t visited = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++visited;
      for (int c : ntd.children[v]) {
        if (seen[c]) {
          return {false, "node " + std::to_string(c) + " reached twice"};
        }
        seen[c] = 1;
        stack.push_back(c);
      }
    }
    if (visited != nodes) {
      return {false, "tree has unreachable nodes"};
    }
  }
  if (!ntd.bags[ntd.root].empty()) {
    return {false, "root bag is not empty"};
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto& bag = ntd.bags[i];
    auto sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bag ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      return {false, "bag " + std::to_string(i) + " is not sorted and unique"};
    }
    for (int v : bag) {
      if (v < 0 || v >= graph.vertex_count()) {
        return {false, "bag " + std::to_string(i) + " has out-of-range vertex"};
      }
    }
    const auto& kids = ntd.children[i];
    switch (ntd.kinds[i]) {
      case NodeKind::Leaf:
        if (!kids.empty()) return {false, "leaf node " + std::to_string(i) + " has children"};
        if (!bag.empty()) return {false, "leaf node " + std::to_string(i) + " has a non-empty bag"};
        break;
      case NodeKind::Introduce: {
        if (kids.size() != 1) return {false, "introduce node " + std::to_string(i) + " needs one child"};
        int v = ntd.acted_vertex[i];
        const auto& child = ntd.bags[kids[0]];
        if (v < 0 || !std::binary_search(bag.begin(), bag.end(), v) ||
            std::binary_search(child.begin(), child.end(), v)) {
          return {false, "introduce node " + std::to_string(i) + " does not add its vertex"};
        }
        std::vector<int> expect = child;
        expect.insert(std::upper_bound(expect.begin(), expect.end(), v), v);
        if (expect != bag) {
          return {false, "introduce node " + std::to_string(i) + ": bag " +
                             bag_to_string(bag) + " is not child bag plus vertex"};
        }
        break;
      }
      case NodeKind::Forget: {
        if (kids.size() != 1) return {false, "forget node " + std::to_string(i) + " needs one child"};
        int v = ntd.acted_vertex[i];
        const auto& child = ntd.bags[kids[0]];
        if (v < 0 || !std::binary_search(child.begin(), child.end(), v) ||
            std::binary_search(bag.begin(), bag.end(), v)) {
          return {false, "forget node " + std::to_string(i) + " does not drop its vertex"};
        }
        std::vector<int> expect = child;
        expect.erase(std::find(expect.begin(), expect.end(), v));
        if (expect != bag) {
          return {false, "forget node " + std::to_string(i) + ": bag " +
                             bag_to_string(bag) + " is not child bag minus vertex"};
        }
        break;
      }
      case NodeKind::Join:
        if (kids.size() != 2) return {false, "join node " + std::to_string(i) + " needs two children"};
        if (ntd.bags[kids[0]] != bag || ntd.bags[kids[1]] != bag) {
          return {false, "join node " + std::to_string(i) + " has mismatched child bags"};
        }
        break;
    }
  }
  TreeDecomposition flat{ntd.bags, ntd.parent};
  ValidationReport base = validate_decomposition(graph, flat);
  if (!base.ok) return base;
  return {true, ""};
}

TreeDecomposition read_pace(std::istream& in, int* vertex_count) {
  std::string line;
  long bag_count = -1;
  long declared_bag_size = -1;
  long declared_vertices = -1;
  std::vector<std::vector<int>> bags;
  std::vector<char> bag_seen;
  std::vector<std::pair<int, int>> links;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "c") continue;
    if (head == "s") {
      std::string kind;
      if (bag_count != -1 || !(fields >> kind) || kind != "td" ||
          !(fields >> bag_count >> declared_bag_size >> declared_vertices) ||
          bag_count < 0 || declared_bag_size < 0 || declared_vertices < 0) {
        throw std::runtime_error("td line " + std::to_string(line_number) +
                                 ": malformed or repeated solution line");
      }
      bags.assign(bag_count, {});
      bag_seen.assign(bag_count, 0);
      continue;
    }
    if (bag_count == -1) {
      throw std::runtime_error("td line " + std::to_string(line_number) +
                               ": content before the solution line");
    }
    if (head == "b") {
      long id = 0;
      if (!(fields >> id) || id < 1 || id > bag_count) {
        throw std::runtime_error("td line " + std::to_string(line_number) +
                                 ": bad bag id");
      }
      if (bag_seen[id - 1]) {
        throw std::runtime_error("td line " + std::to_string(line_number) +
                                 ": bag " + std::to_string(id) + " repeated");
      }
      bag_seen[id - 1] = 1;
      long v;
      while (fields >> v) {
        if (v < 1 || v > declared_vertices) {
          throw std::runtime_error("td line " + std::to_string(line_number) +
                                   ": vertex " + std::to_string(v) + " out of range");
        }
        bags[id - 1].push_back(static_cast<int>(v - 1));
      }
      if (!fields.eof()) {
        throw std::runtime_error("td line " + std::to_string(line_number) +
                                 ": trailing garbage");
      }
      std::sort(bags[id - 1].begin(), bags[id - 1].end());
      bags[id - 1].erase(std::unique(bags[id - 1].begin(), bags[id - 1].end()),
                         bags[id - 1].end());
      continue;
    }
    // An edge between bags: two 1-based ids, the first already in `head`.
    long u = 0, v = 0;
    try {
      u = std::stol(head);
    } catch (const std::exception&) {
      throw std::runtime_error("td line " + std::to_string(line_number) +
                               ": unknown line type '" + head + "'");
    }
    if (!(fields >> v) || u < 1 || u > bag_count || v < 1 || v > bag_count || u == v) {
      throw std::runtime_error("td line " + std::to_string(line_number) +
                               ": bad tree edge");
    }
    links.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (bag_count == -1) {
    throw std::runtime_error("td input has no solution line");
  }
  for (long i = 0; i < bag_count; ++i) {
    if (!bag_seen[i]) {
      throw std::runtime_error("td input is missing bag " + std::to_string(i + 1));
    }
  }
  long actual_bag_size = 0;
  for (const auto& bag : bags) {
    actual_bag_size = std::max<long>(actual_bag_size, static_cast<long>(bag.size()));
  }
  if (bag_count > 0 && actual_bag_size != declared_bag_size) {
    throw std::runtime_error("td input declares largest bag size " +
                             std::to_string(declared_bag_size) + " but has " +
                             std::to_string(actual_bag_size));
  }
  if (static_cast<long>(links.size()) > std::max(bag_count - 1, 0l)) {
    throw std::runtime_error("td input has too many tree edges");
  }
  std::vector<std::vector<int>> adjacency(bag_count);
  for (auto [u, v] : links) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.parent.assign(bag_count, -2);
  for (long start = 0; start < bag_count; ++start) {
    if (td.parent[start] != -2) continue;
    td.parent[start] = -1;
    std::vector<int> stack = {static_cast<int>(start)};
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int next : adjacency[node]) {
        if (next == td.parent[node]) continue;
        if (td.parent[next] != -2) {
          throw std::runtime_error("td input bag edges contain a cycle or duplicate");
        }
        td.parent[next] = node;
        stack.push_back(next);
      }
    }
  }
  if (vertex_count) {
    *vertex_count = static_cast<int>(declared_vertices);
  }
  return td;
}

void write_pace(std::ostream& out, const TreeDecomposition& td, int vertex_count) {
  std::size_t largest = 0;
  for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
  out << "s td " << td.node_count() << " " << largest << " " << vertex_count << "\n";
  for (std::size_t i = 0; i < td.node_count(); ++i) {
    out << "b " << (i + 1);
    for (int v : td.bags[i]) out << " " << (v + 1);
    out << "\n";
  }
  for (std::size_t i = 0; i < td.node_count(); ++i) {
    if (td.parent[i] != -1) {
      std::size_t p = static_cast<std::size_t>(td.parent[i]);
      out << std::min(i, p) + 1 << " " << std::max(i, p) + 1 << "\n";
    }
  }
}

}  // namespace schelling
