#include "schelling/welfare.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schelling {

const char* notion_name(Notion notion) {
  switch (notion) {
    case Notion::Welfare: return "welfare";
    case Notion::Pareto: return "pareto";
    case Notion::GroupWelfare: return "group-welfare";
    case Notion::UtilityVector: return "utility-vector";
    case Notion::Perfect: return "perfect";
  }
  return "?";
}

Rational utility(const Instance& instance, const Assignment& assignment, int vertex) {
  int type = assignment.type_at(vertex);
  if (type == kEmpty) {
    throw std::invalid_argument("utility of an unoccupied vertex");
  }
  int friends = 0;
  int occupied = 0;
  for (int w : instance.graph().neighbors(vertex)) {
    int other = assignment.type_at(w);
    if (other == kEmpty) continue;
    ++occupied;
    if (other == type) ++friends;
  }
  if (occupied == 0) return Rational(0);
  return Rational(friends, occupied);
}

UtilityProfile profile(const Instance& instance, const Assignment& assignment) {
  if (!assignment.is_complete(instance)) {
    throw std::invalid_argument("profile needs a complete assignment");
  }
  UtilityProfile result;
  result.per_type_sorted.resize(instance.num_types());
  result.per_type_welfare.assign(instance.num_types(), Rational(0));
  for (int v = 0; v < assignment.size(); ++v) {
    int type = assignment.type_at(v);
    if (type == kEmpty) continue;
    Rational u = utility(instance, assignment, v);
    result.per_vertex.emplace_back(v, u);
    result.sorted_utilities.push_back(u);
    result.per_type_sorted[type].push_back(u);
    result.per_type_welfare[type] += u;
    result.total_welfare += u;
  }
  std::sort(result.sorted_utilities.begin(), result.sorted_utilities.end(),
            std::greater<>());
  for (auto& vec : result.per_type_sorted) {
    std::sort(vec.begin(), vec.end(), std::greater<>());
  }
  return result;
}

Rational social_welfare(const Instance& instance, const Assignment& assignment) {
  Rational total;
  for (int v = 0; v < assignment.size(); ++v) {
    if (assignment.occupied(v)) total += utility(instance, assignment, v);
  }
  return total;
}

bool is_perfect(const Instance& instance, const Assignment& assignment) {
  if (!assignment.is_complete(instance)) return false;
  for (int v = 0; v < assignment.size(); ++v) {
    if (assignment.occupied(v) && utility(instance, assignment, v) != Rational(1)) {
      return false;
    }
  }
  return true;
}

bool weakly_dominates(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("domination over different lengths");
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] < rhs[i]) return false;
  }
  return true;
}

bool strictly_dominates(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (!weakly_dominates(lhs, rhs)) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return true;
  }
  return false;
}

bool dominates(Notion notion, const UtilityProfile& challenger,
               const UtilityProfile& incumbent) {
  switch (notion) {
    case Notion::Welfare:
      return challenger.total_welfare > incumbent.total_welfare;
    case Notion::Pareto: {
      bool strict = false;
      for (std::size_t i = 0; i < challenger.per_type_sorted.size(); ++i) {
        if (!weakly_dominates(challenger.per_type_sorted[i],
                              incumbent.per_type_sorted[i])) {
          return false;
        }
        if (!strict) {
          strict = strictly_dominates(challenger.per_type_sorted[i],
                                      incumbent.per_type_sorted[i]);
        }
      }
      return strict;
    }
    case Notion::GroupWelfare:
      return strictly_dominates(challenger.per_type_welfare,
                                incumbent.per_type_welfare);
    case Notion::UtilityVector:
      return strictly_dominates(challenger.sorted_utilities,
                                incumbent.sorted_utilities);
    case Notion::Perfect: {
      auto n = Rational(static_cast<std::int64_t>(challenger.sorted_utilities.size()));
      return challenger.total_welfare == n && incumbent.total_welfare != n;
    }
  }
  return false;
}

DominationOrder compare_for_notion(Notion notion, const UtilityProfile& a,
                                   const UtilityProfile& b) {
  if (notion == Notion::Welfare || notion == Notion::Perfect) {
    throw std::invalid_argument("not a pairwise domination notion");
  }
  if (dominates(notion, a, b)) return DominationOrder::ADominates;
  if (dominates(notion, b, a)) return DominationOrder::BDominates;
  return DominationOrder::Incomparable;
}

}  // namespace schelling
