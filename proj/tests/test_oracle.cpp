#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "schelling/oracle.hpp"
#include "schelling/welfare.hpp"

using namespace schelling;
using testing::complete_instance;
using testing::from_letters;
using testing::path_instance;

TEST_CASE("enumeration count equals the multinomial") {
  CHECK(assignment_count(path_instance(2, {1, 1})) == 2);
  CHECK(assignment_count(path_instance(4, {2, 2})) == 6);
  CHECK(assignment_count(path_instance(3, {1, 1})) == 6);
  CHECK(enumerate_assignments(path_instance(2, {1, 1})).size() == 2);
  CHECK(enumerate_assignments(path_instance(4, {2, 2})).size() == 6);
  CHECK(enumerate_assignments(path_instance(3, {1, 1})).size() == 6);
}

TEST_CASE("each assignment is yielded exactly once") {
  Instance inst(Graph::cycle(5), {2, 1});
  auto all = enumerate_assignments(inst);
  CHECK(all.size() == assignment_count(inst));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].placed_counts(2) == std::vector<int>{2, 1});
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
  }
}

TEST_CASE("maximum social welfare on the canonical small cases") {
  CHECK(max_social_welfare(path_instance(4, {2, 2})).welfare == Rational(3));
  CHECK(max_social_welfare(Instance(Graph(4, {{0, 1}, {2, 3}}), {2, 2})).welfare == Rational(4));
  CHECK(max_social_welfare(complete_instance(4, {2, 2})).welfare == Rational(4, 3));
}

TEST_CASE("witness is the lexicographically smallest maximizer") {
  auto best = max_social_welfare(path_instance(4, {2, 2}));
  // RRBB and BBRR tie at 3; type 0 first is lexicographically smaller.
  CHECK(best.assignment == from_letters("RRBB"));
  CHECK(social_welfare(path_instance(4, {2, 2}), best.assignment) == best.welfare);
}

TEST_CASE("optimality checks against the enumeration") {
  Instance p4 = path_instance(4, {2, 2});
  auto best = max_social_welfare(p4);
  CHECK(check_optimal(p4, best.assignment, Notion::Welfare));
  CHECK(check_optimal(p4, best.assignment, Notion::UtilityVector));
  CHECK(check_optimal(p4, best.assignment, Notion::GroupWelfare));
  CHECK(check_optimal(p4, best.assignment, Notion::Pareto));
  CHECK_FALSE(check_optimal(p4, from_letters("RBRB"), Notion::Welfare));

  Instance kk(Graph(4, {{0, 1}, {2, 3}}), {2, 2});
  CHECK(check_optimal(kk, from_letters("RRBB"), Notion::Perfect));
  CHECK(check_optimal(kk, from_letters("RRBB"), Notion::Welfare));
}

TEST_CASE("perfect existence") {
  CHECK(perfect_exists(Instance(Graph(4, {{0, 1}, {2, 3}}), {2, 2})).exists);
  CHECK_FALSE(perfect_exists(path_instance(3, {2, 1})).exists);
  // A lone agent of either type rules perfection out.
  CHECK_FALSE(perfect_exists(path_instance(4, {3, 1})).exists);
  CHECK_FALSE(perfect_exists(path_instance(5, {1, 2})).exists);

  auto found = perfect_exists(Instance(Graph(4, {{0, 1}, {2, 3}}), {2, 2}));
  REQUIRE(found.witness.has_value());
  CHECK(is_perfect(Instance(Graph(4, {{0, 1}, {2, 3}}), {2, 2}), *found.witness));
}

TEST_CASE("perfect existence equals reaching welfare |A|") {
  int checked = 0;
  for (const Instance& inst : testing::mixed_corpus()) {
    if (++checked > 80) break;
    const bool perfect = perfect_exists(inst).exists;
    const bool full = max_social_welfare(inst).welfare == Rational(inst.num_agents());
    CHECK(perfect == full);
  }
}

TEST_CASE("welfare-optimal witnesses satisfy the weaker notions") {
  int checked = 0;
  for (const Instance& inst : testing::mixed_corpus()) {
    if (++checked > 40) break;
    auto best = max_social_welfare(inst);
    CHECK(check_optimal(inst, best.assignment, Notion::UtilityVector));
    CHECK(check_optimal(inst, best.assignment, Notion::GroupWelfare));
    CHECK(check_optimal(inst, best.assignment, Notion::Pareto));
  }
}

TEST_CASE("when perfect exists all Pareto-optimal assignments are perfect") {
  Instance kk(Graph(4, {{0, 1}, {2, 3}}), {2, 2});
  auto witness = perfect_exists(kk);
  REQUIRE(witness.exists);
  UtilityProfile wp = profile(kk, *witness.witness);
  for_each_assignment(kk, [&](const Assignment& a) {
    if (!is_perfect(kk, a)) {
      // Dominated by the perfect witness, hence not Pareto-optimal.
      CHECK(dominates(Notion::Pareto, wp, profile(kk, a)));
    }
  });
}

TEST_CASE("budget guard trips upfront") {
  // 24 vertices, three types of 8: ~10^13 assignments, far over budget.
  Instance big(Graph(24, {}), {8, 8, 8});
  CHECK(assignment_count(big) > oracle_budget());
  try {
    max_social_welfare(big);
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.count > e.budget);
    CHECK(e.budget == oracle_budget());
  }
  CHECK_THROWS_AS(perfect_exists(big), BudgetExceededError);
  CHECK_THROWS_AS(enumerate_assignments(big), BudgetExceededError);
  // An explicit budget overrides the default.
  CHECK_THROWS_AS(max_social_welfare(path_instance(4, {2, 2}), 5), BudgetExceededError);
  CHECK(max_social_welfare(path_instance(4, {2, 2}), 6).welfare == Rational(3));
}

TEST_CASE("oracle budget env override") {
  CHECK(oracle_budget() == 10'000'000u);
  setenv("SCHELLING_ORACLE_BUDGET", "123", 1);
  CHECK(oracle_budget() == 123u);
  unsetenv("SCHELLING_ORACLE_BUDGET");
  CHECK(oracle_budget() == 10'000'000u);
}

TEST_CASE("enumeration order is deterministic") {
  Instance inst = path_instance(4, {1, 2});
  auto first = enumerate_assignments(inst);
  auto second = enumerate_assignments(inst);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}
