#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/graph.hpp"

namespace schelling {

// Tree decomposition in raw form: one bag per node, parent pointers
// (-1 marks a root; a forest is allowed). Bags are sorted ascending.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;

  std::size_t node_count() const { return bags.size(); }
  int width() const;
};

enum class DecompositionStrategy {
  MinFill,    // greedy elimination, fewest fill edges first
  MinDegree,  // greedy elimination, smallest degree first
  ExactSmall  // exact treewidth by subset dynamic programming, |V| <= 12
};

std::optional<DecompositionStrategy> strategy_from_name(std::string_view name);
const char* strategy_name(DecompositionStrategy strategy);

TreeDecomposition decompose(const Graph& graph, DecompositionStrategy strategy);

enum class NodeKind { Leaf, Introduce, Forget, Join };

// Nice tree decomposition: rooted binary tree whose root and leaves carry
// empty bags, and where every node is a leaf, introduces one vertex over its
// child, forgets one, or joins two children with identical bags.
struct NiceTreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<NodeKind> kinds;
  std::vector<int> acted_vertex;  // introduced/forgotten vertex, else -1
  int root = -1;

  std::size_t node_count() const { return bags.size(); }
  int width() const;
  // Children before parents; the traversal every table pass uses.
  std::vector<int> postorder() const;
};

struct ValidationReport {
  bool ok = true;
  std::string diagnostic;
};

ValidationReport validate_decomposition(const Graph& graph,
                                        const TreeDecomposition& td);
ValidationReport validate_nice(const Graph& graph,
                               const NiceTreeDecomposition& ntd);

// Expands a valid decomposition into a nice one over the same graph without
// increasing the width. Forest inputs are joined below a shared empty root.
// Throws std::invalid_argument (with the validation diagnostic) on invalid
// input.
NiceTreeDecomposition make_nice(const Graph& graph, const TreeDecomposition& td);

// PACE-style .td exchange format (1-based bag ids and vertex names).
TreeDecomposition read_pace(std::istream& in, int* vertex_count = nullptr);
void write_pace(std::ostream& out, const TreeDecomposition& td, int vertex_count);

}  // namespace schelling
