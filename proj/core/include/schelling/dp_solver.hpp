#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"
#include "schelling/oracle.hpp"
#include "schelling/rational.hpp"
#include "schelling/tree_decomposition.hpp"
#include "schelling/welfare.hpp"

namespace schelling {

// Table-based solver over a nice tree decomposition.
//
// A table entry groups the partial assignments of the processed subgraph that
// behave identically from here on: how many agents of each type are placed,
// which type (or none) sits on each bag vertex, and per bag vertex either the
// number of its already-placed neighbors of each type (welfare mode) or one
// bit saying whether a same-type neighbor is already adjacent (perfect mode).
// Utilities are final by the time a vertex is forgotten, since all its
// neighbors lie in the processed subgraph at that point; the welfare of
// forgotten vertices is accumulated per entry.
enum class DpMode { MaxWelfare, Perfect };

// Flattened table key: [sizes per type][type per bag vertex][per bag vertex:
// either neighbor counts per type, or one flag]. Bag vertices in ascending
// vertex order.
using DpKey = std::vector<std::int32_t>;

struct DpKeyHash {
  std::size_t operator()(const DpKey& key) const;
};

struct DpRecord {
  Rational partial_welfare;  // welfare of forgotten vertices
  // Provenance for witness reconstruction.
  DpKey child_key;           // introduce/forget: source entry; join: left entry
  DpKey right_key;           // join: right entry
  std::int32_t placed_type = -2;  // introduce: chosen type (kEmpty for none)
};

using DpTable = std::unordered_map<DpKey, DpRecord, DpKeyHash>;

struct DpNodeStats {
  int node;
  int bag_size;
  std::size_t table_size;
};

struct DpStats {
  int width_used = -1;
  std::size_t peak_table_size = 0;
  std::vector<DpNodeStats> per_node;
};

// Decoded view of a table key, for inspection and tests.
struct DpClassView {
  std::vector<int> sizes;
  std::vector<int> bag_types;                    // kEmpty or type index
  std::vector<std::vector<int>> neighbor_counts; // welfare mode, per bag vertex
  std::vector<int> satisfied_flags;              // perfect mode, per bag vertex
};

class TreewidthSolver {
 public:
  // Validates the decomposition against the instance graph and fills every
  // node table bottom-up. Throws std::invalid_argument on invalid input.
  TreewidthSolver(Instance instance, NiceTreeDecomposition ntd, DpMode mode);

  const Instance& instance() const { return instance_; }
  const NiceTreeDecomposition& decomposition() const { return ntd_; }
  DpMode mode() const { return mode_; }

  const DpTable& table(int node) const { return tables_.at(node); }
  DpStats stats() const;

  DpClassView decode(int node, const DpKey& key) const;
  DpKey encode(int node, const DpClassView& view) const;

  // Vertices of the subgraph processed at `node` (all bags in its subtree).
  std::vector<int> subtree_vertices(int node) const;

  // Rebuilds a partial assignment realizing the entry, by walking the
  // recorded provenance down to the leaves. Vertices outside the subtree
  // stay empty.
  Assignment reconstruct(int node, const DpKey& key) const;

  // Root entry with every agent placed. In welfare mode the maximum total
  // welfare with a witness; in perfect mode a witness iff one exists.
  std::optional<WelfareOptimum> best_welfare() const;
  std::optional<Assignment> perfect_assignment() const;

 private:
  void process_leaf(int node);
  void process_introduce(int node);
  void process_forget(int node);
  void process_join(int node);
  void consider(DpTable& table, DpKey key, Rational welfare, DpRecord record) const;

  Instance instance_;
  NiceTreeDecomposition ntd_;
  DpMode mode_;
  std::vector<DpTable> tables_;
};

WelfareOptimum solve_max_welfare(const Instance& instance,
                                 const NiceTreeDecomposition& ntd);
std::optional<Assignment> solve_perfect(const Instance& instance,
                                        const NiceTreeDecomposition& ntd);

}  // namespace schelling
