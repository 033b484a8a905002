#include "schelling/instance.hpp"

#include <stdexcept>

namespace schelling {

Instance::Instance(Graph graph, std::vector<int> type_counts)
    : graph_(std::move(graph)), type_counts_(std::move(type_counts)) {
  if (type_counts_.empty()) {
    throw std::invalid_argument("instance needs at least one agent type");
  }
  for (int count : type_counts_) {
    if (count < 1) {
      throw std::invalid_argument("every agent type needs at least one agent");
    }
    num_agents_ += count;
  }
  if (num_agents_ > graph_.vertex_count()) {
    throw std::invalid_argument("more agents than vertices");
  }
}

}  // namespace schelling
