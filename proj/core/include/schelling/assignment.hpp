#pragma once

#include <compare>
#include <vector>

#include "schelling/instance.hpp"

namespace schelling {

inline constexpr int kEmpty = -1;

// Maps every vertex to a type index or kEmpty. Comparison is lexicographic
// over the placement vector with empties ordered before any type, which gives
// all solvers a shared deterministic tie-break.
class Assignment {
 public:
  explicit Assignment(int vertex_count) : placement_(vertex_count, kEmpty) {}
  explicit Assignment(std::vector<int> placement);

  int size() const { return static_cast<int>(placement_.size()); }
  int type_at(int v) const { return placement_.at(v); }
  bool occupied(int v) const { return placement_.at(v) != kEmpty; }
  void place(int v, int type);
  void clear(int v) { placement_.at(v) = kEmpty; }
  const std::vector<int>& placement() const { return placement_; }

  std::vector<int> placed_counts(int num_types) const;
  // True when the assignment places exactly the instance's agents.
  bool is_complete(const Instance& instance) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.placement_ <=> b.placement_;
  }

 private:
  std::vector<int> placement_;
};

}  // namespace schelling
