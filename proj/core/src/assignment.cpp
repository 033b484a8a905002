#include "schelling/assignment.hpp"

#include <stdexcept>

namespace schelling {

Assignment::Assignment(std::vector<int> placement) : placement_(std::move(placement)) {
  for (int type : placement_) {
    if (type < kEmpty) {
      throw std::invalid_argument("placement entry below kEmpty");
    }
  }
}

void Assignment::place(int v, int type) {
  if (type < 0) {
    throw std::invalid_argument("place() needs a type index; use clear()");
  }
  placement_.at(v) = type;
}

std::vector<int> Assignment::placed_counts(int num_types) const {
  std::vector<int> counts(num_types, 0);
  for (int type : placement_) {
    if (type == kEmpty) continue;
    if (type >= num_types) {
      throw std::out_of_range("placement uses type beyond num_types");
    }
    ++counts[type];
  }
  return counts;
}

bool Assignment::is_complete(const Instance& instance) const {
  if (size() != instance.graph().vertex_count()) return false;
  for (int type : placement_) {
    if (type != kEmpty && type >= instance.num_types()) return false;
  }
  return placed_counts(instance.num_types()) == instance.type_counts();
}

}  // namespace schelling
