#include "schelling/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schelling {

namespace {

std::vector<std::pair<int, int>> shifted_edges(const Graph& g, int offset) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) out.emplace_back(u + offset, v + offset);
  return out;
}

}  // namespace

ReductionOutput from_clique(const Graph& h, int clique_size) {
  const int n = h.vertex_count();
  if (clique_size < 1) throw std::invalid_argument("clique size must be at least 1");
  if (clique_size > n) {
    throw std::invalid_argument("clique size exceeds vertex count of the source graph");
  }
  const int square = n * n;
  // Vertex 0 is a hub, 1..n mirror the source graph, the rest form a clique
  // completely joined to the mirrored vertices.
  auto edges = shifted_edges(h, 1);
  for (int v = 1; v <= n; ++v) edges.emplace_back(0, v);
  for (int v = 1; v <= n; ++v) {
    for (int c = n + 1; c <= n + square; ++c) edges.emplace_back(v, c);
  }
  for (int a = n + 1; a <= n + square; ++a) {
    for (int b = a + 1; b <= n + square; ++b) edges.emplace_back(a, b);
  }
  Instance instance(Graph(1 + n + square, edges), {square + clique_size, 1});

  ReductionClaim claim;
  claim.kind = ReductionClaim::Kind::ParetoVectorCharacterization;
  claim.expected_vector.assign(square, Rational(1));
  claim.expected_vector.insert(claim.expected_vector.end(), clique_size,
                               Rational(square + clique_size - 1, square + clique_size));
  std::ostringstream src;
  src << "clique of size " << clique_size << " in a graph with " << n << " vertices and "
      << h.edge_count() << " edges";
  claim.source = src.str();
  return {std::move(instance), std::move(claim), std::nullopt};
}

ReductionOutput from_biclique(const BipartiteGraph& h, int clique_size) {
  if (h.left_count < 0 || h.right_count < 0) {
    throw std::invalid_argument("side sizes must be non-negative");
  }
  if (clique_size < 2) {
    throw std::invalid_argument(
        "biclique side size must be at least 2: with one agent per type the "
        "perfect side of the equivalence is unconditionally false");
  }
  if (clique_size > std::min(h.left_count, h.right_count)) {
    throw std::invalid_argument("biclique side size exceeds a side of the source graph");
  }
  std::set<std::pair<int, int>> present;
  for (auto [l, r] : h.edges) {
    if (l < 0 || l >= h.left_count || r < 0 || r >= h.right_count) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
    present.emplace(l, r);
  }
  // Complement: both sides become cliques, and a cross pair is an edge
  // exactly when the source lacks it.
  const int n = h.left_count + h.right_count;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < h.left_count; ++a) {
    for (int b = a + 1; b < h.left_count; ++b) edges.emplace_back(a, b);
  }
  for (int a = 0; a < h.right_count; ++a) {
    for (int b = a + 1; b < h.right_count; ++b) {
      edges.emplace_back(h.left_count + a, h.left_count + b);
    }
  }
  for (int l = 0; l < h.left_count; ++l) {
    for (int r = 0; r < h.right_count; ++r) {
      if (!present.count({l, r})) edges.emplace_back(l, h.left_count + r);
    }
  }
  Instance instance(Graph(n, edges), {clique_size, clique_size});

  ReductionClaim claim;
  claim.kind = ReductionClaim::Kind::PerfectEquivalence;
  std::ostringstream src;
  src << "balanced biclique with " << clique_size << " vertices per side in a bipartite graph ("
      << h.left_count << " + " << h.right_count << " vertices, " << h.edges.size() << " edges)";
  claim.source = src.str();
  return {std::move(instance), std::move(claim), std::nullopt};
}

ReductionOutput from_minbisection(const Graph& cubic, int cut_bound) {
  const int n = cubic.vertex_count();
  if (n < 2) throw std::invalid_argument("bisection needs at least two vertices");
  for (int v = 0; v < n; ++v) {
    if (cubic.degree(v) != 3) throw std::invalid_argument("graph is not 3-regular");
  }
  if (cut_bound < 0) throw std::invalid_argument("cut bound must be non-negative");
  Instance instance(cubic, {n / 2, n / 2});

  ReductionClaim claim;
  claim.kind = ReductionClaim::Kind::GroupWelfareThreshold;
  // Each crossing edge costs the two groups a third of a point in total,
  // so a cut of size c leaves every group with n/2 - c/3 at best.
  claim.group_threshold = Rational(3 * (n / 2) - cut_bound, 3);
  std::ostringstream src;
  src << "bisection of width at most " << cut_bound << " in a 3-regular graph with " << n
      << " vertices";
  claim.source = src.str();
  return {std::move(instance), std::move(claim), std::nullopt};
}

ReductionOutput from_binpacking(const std::vector<int>& item_sizes, int bins, int capacity,
                                ComponentFamily family, bool tree_variant) {
  if (bins < 1) throw std::invalid_argument("need at least one bin");
  if (capacity < 1) throw std::invalid_argument("capacity must be positive");
  for (int s : item_sizes) {
    if (s < 1) throw std::invalid_argument("item sizes must be positive");
  }
  if (tree_variant && family == ComponentFamily::Clique) {
    throw std::invalid_argument("the tree variant requires path components");
  }

  PackingLayout layout;
  layout.bins = bins;
  layout.capacity = capacity;
  layout.doubled = capacity % 2 != 0;
  for (int s : item_sizes) layout.doubled = layout.doubled || s % 2 != 0;
  layout.item_sizes = item_sizes;
  if (layout.doubled) {
    layout.capacity *= 2;
    for (int& s : layout.item_sizes) s *= 2;
  }
  std::int64_t total = 0;
  for (int s : layout.item_sizes) total += s;
  const std::int64_t space = std::int64_t{bins} * layout.capacity;
  if (total > space) throw std::invalid_argument("items exceed total bin capacity");
  layout.dummy_items = static_cast<int>((space - total) / 2);
  layout.item_sizes.insert(layout.item_sizes.end(), layout.dummy_items, 2);

  layout.hub_vertex = tree_variant ? 0 : -1;
  int next = tree_variant ? 1 : 0;
  std::vector<std::pair<int, int>> edges;
  for (int s : layout.item_sizes) {
    layout.component_ranges.emplace_back(next, next + s);
    if (family == ComponentFamily::Path) {
      for (int v = next; v + 1 < next + s; ++v) edges.emplace_back(v, v + 1);
      if (tree_variant) edges.emplace_back(layout.hub_vertex, next);
    } else {
      for (int a = next; a < next + s; ++a) {
        for (int b = a + 1; b < next + s; ++b) edges.emplace_back(a, b);
      }
    }
    next += s;
  }
  Instance instance(Graph(next, edges), std::vector<int>(bins, layout.capacity));

  ReductionClaim claim;
  claim.kind = ReductionClaim::Kind::PerfectEquivalence;
  std::ostringstream src;
  src << "packing " << item_sizes.size() << " items into " << bins << " bins of capacity "
      << capacity;
  claim.source = src.str();
  return {std::move(instance), std::move(claim), std::move(layout)};
}

namespace {

// Hand-rolled draws so instances are identical across standard libraries.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Instance random_instance(const RandomSpec& spec) {
  if (spec.vertices < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (spec.edge_probability.has_value() == spec.degree_bound.has_value()) {
    throw std::invalid_argument("set exactly one of edge_probability and degree_bound");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  if (spec.edge_probability) {
    const double p = *spec.edge_probability;
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
    for (int u = 0; u < spec.vertices; ++u) {
      for (int v = u + 1; v < spec.vertices; ++v) {
        if (next_unit(rng) < p) edges.emplace_back(u, v);
      }
    }
  } else {
    const int bound = *spec.degree_bound;
    if (bound < 0) throw std::invalid_argument("degree bound must be non-negative");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < spec.vertices; ++u) {
      for (int v = u + 1; v < spec.vertices; ++v) pairs.emplace_back(u, v);
    }
    for (std::size_t i = pairs.size(); i > 1; --i) {
      std::swap(pairs[i - 1], pairs[next_below(rng, i)]);
    }
    std::vector<int> degree(spec.vertices, 0);
    for (auto [u, v] : pairs) {
      if (degree[u] < bound && degree[v] < bound && next_unit(rng) < 0.5) {
        ++degree[u];
        ++degree[v];
        edges.emplace_back(u, v);
      }
    }
  }
  return Instance(Graph(spec.vertices, edges), spec.type_counts);
}

}  // namespace schelling
