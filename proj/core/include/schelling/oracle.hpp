#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"
#include "schelling/welfare.hpp"

namespace schelling {

// Reference solver by exhaustive enumeration. Deliberately free of pruning
// and shortcuts so its answers can anchor the optimized solvers; it refuses
// instances whose assignment space exceeds a budget instead of running
// unbounded.

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(std::uint64_t count, std::uint64_t budget)
      : std::runtime_error("assignment space of " + std::to_string(count) +
                           " exceeds enumeration budget " + std::to_string(budget)),
        count(count),
        budget(budget) {}
  std::uint64_t count;
  std::uint64_t budget;
};

// Number of distinct complete assignments (multinomial over vertices),
// saturating at UINT64_MAX.
std::uint64_t assignment_count(const Instance& instance);

// Enumeration budget: SCHELLING_ORACLE_BUDGET from the environment when set
// to a positive integer, otherwise 10^7.
std::uint64_t oracle_budget();

namespace detail {
void ensure_within_budget(const Instance& instance,
                          std::optional<std::uint64_t> budget);
std::vector<int> first_placement(const Instance& instance);
}  // namespace detail

// Calls fn(const Assignment&) for every complete assignment, in ascending
// lexicographic order of the placement vector (empty slots order first).
template <typename Fn>
void for_each_assignment(const Instance& instance, Fn&& fn,
                         std::optional<std::uint64_t> budget = std::nullopt) {
  detail::ensure_within_budget(instance, budget);
  std::vector<int> placement = detail::first_placement(instance);
  do {
    fn(Assignment(placement));
  } while (std::next_permutation(placement.begin(), placement.end()));
}

std::vector<Assignment> enumerate_assignments(
    const Instance& instance, std::optional<std::uint64_t> budget = std::nullopt);

struct WelfareOptimum {
  Rational welfare;
  Assignment assignment;  // lexicographically smallest maximizer
};

WelfareOptimum max_social_welfare(const Instance& instance,
                                  std::optional<std::uint64_t> budget = std::nullopt);

// Whether `assignment` is optimal under `notion`: no complete assignment
// dominates it (for Notion::Perfect simply whether it is perfect, which
// needs no enumeration).
bool check_optimal(const Instance& instance, const Assignment& assignment,
                   Notion notion, std::optional<std::uint64_t> budget = std::nullopt);

struct PerfectSearch {
  bool exists;
  std::optional<Assignment> witness;  // lexicographically smallest, when exists
};

PerfectSearch perfect_exists(const Instance& instance,
                             std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace schelling
