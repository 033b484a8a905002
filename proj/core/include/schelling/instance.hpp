#pragma once

#include <vector>

#include "schelling/graph.hpp"

namespace schelling {

// A Schelling instance: a topology plus agent counts per type. Agents of a
// type are interchangeable, so an outcome is fully described by which vertex
// holds which type (see Assignment). Validation requires at least one type,
// at least one agent per type, and no more agents than vertices.
class Instance {
 public:
  Instance(Graph graph, std::vector<int> type_counts);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& type_counts() const { return type_counts_; }
  int num_types() const { return static_cast<int>(type_counts_.size()); }
  int num_agents() const { return num_agents_; }

 private:
  Graph graph_;
  std::vector<int> type_counts_;
  int num_agents_ = 0;
};

}  // namespace schelling
