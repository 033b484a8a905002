#pragma once

#include <span>
#include <utility>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"
#include "schelling/rational.hpp"

namespace schelling {

// Optimality notions for complete assignments. Vectors compare
// position-wise; agents of a type are interchangeable, so sorting
// non-increasing fixes the pairing.
//
//   Welfare        maximizes the sum of all agent utilities.
//   Pareto         no assignment weakly improves every type's sorted utility
//                  vector with at least one position strictly better.
//   GroupWelfare   no assignment weakly improves every type's welfare sum
//                  with at least one type strictly better.
//   UtilityVector  no assignment strictly dominates the sorted utility
//                  vector of all agents taken together.
//   Perfect        every agent has utility exactly 1.
enum class Notion { Welfare, Pareto, GroupWelfare, UtilityVector, Perfect };

const char* notion_name(Notion notion);

// Utility of the agent on `vertex`: same-type occupied neighbors divided by
// all occupied neighbors, and 0 when no neighbor is occupied. Requires the
// vertex to be occupied.
Rational utility(const Instance& instance, const Assignment& assignment, int vertex);

// All per-agent and aggregate utility data of a complete assignment.
struct UtilityProfile {
  std::vector<std::pair<int, Rational>> per_vertex;     // occupied vertices, ascending
  std::vector<Rational> sorted_utilities;               // non-increasing
  std::vector<std::vector<Rational>> per_type_sorted;   // non-increasing, one per type
  Rational total_welfare;
  std::vector<Rational> per_type_welfare;
};

UtilityProfile profile(const Instance& instance, const Assignment& assignment);

Rational social_welfare(const Instance& instance, const Assignment& assignment);

bool is_perfect(const Instance& instance, const Assignment& assignment);

// Position-wise comparison of equal-length vectors.
bool weakly_dominates(std::span<const Rational> lhs, std::span<const Rational> rhs);
bool strictly_dominates(std::span<const Rational> lhs, std::span<const Rational> rhs);

// True when `challenger` strictly dominates `incumbent` in the sense of the
// given notion; an assignment is optimal for the notion iff no complete
// assignment dominates it. For Notion::Welfare this is a strictly larger
// total, for Notion::Perfect it is "challenger perfect, incumbent not".
bool dominates(Notion notion, const UtilityProfile& challenger,
               const UtilityProfile& incumbent);

enum class DominationOrder { ADominates, BDominates, Incomparable };

// Pairwise comparison for the domination notions (Pareto, GroupWelfare,
// UtilityVector). Welfare and Perfect are not pairwise relations and are
// rejected.
DominationOrder compare_for_notion(Notion notion, const UtilityProfile& a,
                                   const UtilityProfile& b);

}  // namespace schelling
