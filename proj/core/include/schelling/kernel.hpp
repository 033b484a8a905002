#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"
#include "schelling/oracle.hpp"

namespace schelling {

// Welfare-preserving shrinking of two-type instances. Either the largest
// component is so big that a maximum-welfare assignment can be written down
// directly (two connected clusters far enough apart that every agent has only
// friends next door), or all but the largest r+b components are dropped,
// which never loses welfare because agents occupy at most r+b components and
// any pattern can move to a component at least as large.
struct Kernelization {
  std::optional<Assignment> direct;  // witness on the original instance
  std::optional<Instance> reduced;
  std::vector<int> to_original;      // reduced vertex -> original vertex

  bool is_direct() const { return direct.has_value(); }
};

// Minimum size of the largest component that triggers the direct branch.
std::int64_t direct_placement_threshold(int max_degree, int reds, int blues);

// Throws std::invalid_argument unless the instance has exactly two types.
Kernelization kernelize(const Instance& instance);

// kernelize, then exhaustive search on the reduced instance (or the direct
// witness), lifted back to the original vertices.
WelfareOptimum solve_via_kernel(const Instance& instance,
                                std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace schelling
