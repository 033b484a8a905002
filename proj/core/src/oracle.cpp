#include "schelling/oracle.hpp"

#include <cstdlib>
#include <limits>

namespace schelling {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
  if (wide > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(wide);
}

std::uint64_t saturating_div(std::uint64_t a, std::uint64_t b) { return a / b; }

}  // namespace

std::uint64_t assignment_count(const Instance& instance) {
  // n! / (a_1! ... a_k! (n - m)!) computed as a product of binomials
  // C(n, a_1) C(n - a_1, a_2) ..., each accumulated multiply-then-divide so
  // every intermediate stays integral.
  std::uint64_t total = 1;
  int remaining = instance.graph().vertex_count();
  for (int a : instance.type_counts()) {
    std::uint64_t binom = 1;
    for (int i = 1; i <= a; ++i) {
      binom = saturating_mul(binom, static_cast<std::uint64_t>(remaining - a + i));
      binom = saturating_div(binom, static_cast<std::uint64_t>(i));
    }
    total = saturating_mul(total, binom);
    remaining -= a;
  }
  return total;
}

std::uint64_t oracle_budget() {
  if (const char* raw = std::getenv("SCHELLING_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) {
      return static_cast<std::uint64_t>(value);
    }
  }
  return 10'000'000ull;
}

namespace detail {

void ensure_within_budget(const Instance& instance,
                          std::optional<std::uint64_t> budget) {
  std::uint64_t limit = budget.value_or(oracle_budget());
  std::uint64_t count = assignment_count(instance);
  if (count > limit) {
    throw BudgetExceededError(count, limit);
  }
}

std::vector<int> first_placement(const Instance& instance) {
  std::vector<int> placement;
  placement.reserve(instance.graph().vertex_count());
  int empties = instance.graph().vertex_count() - instance.num_agents();
  placement.insert(placement.end(), empties, kEmpty);
  for (int type = 0; type < instance.num_types(); ++type) {
    placement.insert(placement.end(), instance.type_counts()[type], type);
  }
  return placement;
}

}  // namespace detail

std::vector<Assignment> enumerate_assignments(const Instance& instance,
                                              std::optional<std::uint64_t> budget) {
  std::vector<Assignment> result;
  for_each_assignment(instance, [&](const Assignment& a) { result.push_back(a); },
                      budget);
  return result;
}

WelfareOptimum max_social_welfare(const Instance& instance,
                                  std::optional<std::uint64_t> budget) {
  std::optional<WelfareOptimum> best;
  for_each_assignment(
      instance,
      [&](const Assignment& a) {
        Rational sw = social_welfare(instance, a);
        if (!best || sw > best->welfare) {
          best = WelfareOptimum{sw, a};
        }
      },
      budget);
  return *best;
}

bool check_optimal(const Instance& instance, const Assignment& assignment,
                   Notion notion, std::optional<std::uint64_t> budget) {
  if (notion == Notion::Perfect) {
    return is_perfect(instance, assignment);
  }
  UtilityProfile incumbent = profile(instance, assignment);
  bool dominated = false;
  for_each_assignment(
      instance,
      [&](const Assignment& candidate) {
        if (dominated) return;
        UtilityProfile challenger = profile(instance, candidate);
        if (dominates(notion, challenger, incumbent)) {
          dominated = true;
        }
      },
      budget);
  return !dominated;
}

PerfectSearch perfect_exists(const Instance& instance,
                             std::optional<std::uint64_t> budget) {
  PerfectSearch result{false, std::nullopt};
  for_each_assignment(
      instance,
      [&](const Assignment& candidate) {
        if (result.exists) return;
        if (is_perfect(instance, candidate)) {
          result.exists = true;
          result.witness = candidate;
        }
      },
      budget);
  return result;
}

}  // namespace schelling
