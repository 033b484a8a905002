#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schelling/instance.hpp"
#include "schelling/rational.hpp"

namespace schelling {

// Instance generators that translate classic hard problems into Schelling
// instances. Each generator pairs the instance with a machine-checkable
// claim tying the source problem's answer to a property of the instance, so
// test harnesses can verify the translation on small cases.

struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  // (left index, right index), 0-based within each side.
  std::vector<std::pair<int, int>> edges;
};

struct ReductionClaim {
  enum class Kind {
    // Source answer is yes iff every Pareto-optimal assignment's sorted
    // utility vector for type 0 equals expected_vector.
    ParetoVectorCharacterization,
    // Source answer is yes iff a perfect assignment exists.
    PerfectEquivalence,
    // Source answer is yes iff some assignment gives every type welfare
    // at least group_threshold.
    GroupWelfareThreshold,
  };
  Kind kind;
  std::vector<Rational> expected_vector;  // ParetoVectorCharacterization
  Rational group_threshold;               // GroupWelfareThreshold
  std::string source;                     // description of the source instance
};

enum class ComponentFamily { Path, Clique };

// How a bin-packing translation laid out the graph, for inspection.
struct PackingLayout {
  std::vector<int> item_sizes;  // after normalization, dummies included
  int bins = 0;
  int capacity = 0;
  bool doubled = false;
  int dummy_items = 0;
  int hub_vertex = -1;  // tree variant only
  std::vector<std::pair<int, int>> component_ranges;  // [begin, end) per item
};

struct ReductionOutput {
  Instance instance;
  ReductionClaim claim;
  std::optional<PackingLayout> packing;
};

// Clique search: the output graph is H, plus a hub adjacent to all of H,
// plus an n^2-clique completely joined to H (n = |V(H)|). Types are
// (n^2 + clique_size) of type 0 and one of type 1.
ReductionOutput from_clique(const Graph& h, int clique_size);

// Balanced biclique search: the output graph is the complement of H, with
// clique_size agents of each of the two types. Rejects clique_size < 2: with
// a single agent per type the perfect side of the equivalence is vacuously
// false regardless of the source answer.
ReductionOutput from_biclique(const BipartiteGraph& h, int clique_size);

// Minimum bisection on 3-regular graphs: same graph, half the vertices red,
// half blue; crossing edges trade against group welfare at a rate of 1/3.
ReductionOutput from_minbisection(const Graph& cubic, int cut_bound);

// Unary bin packing: one connected component per item. Sizes and capacity
// are doubled when any is odd, size-2 dummy items pad the total up to
// bins * capacity, and inputs whose items exceed the total capacity are
// rejected. The tree variant (paths only) hangs every path off one extra
// hub vertex, turning the forest into a tree.
ReductionOutput from_binpacking(const std::vector<int>& item_sizes, int bins,
                                int capacity, ComponentFamily family,
                                bool tree_variant);

struct RandomSpec {
  std::uint64_t seed = 0;
  int vertices = 0;
  // Exactly one of the two must be set.
  std::optional<double> edge_probability;
  std::optional<int> degree_bound;
  std::vector<int> type_counts;
};

// Deterministic under the seed, independent of the platform's random
// distributions.
Instance random_instance(const RandomSpec& spec);

}  // namespace schelling
