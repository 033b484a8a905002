#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "schelling/welfare.hpp"

using namespace schelling;
using testing::complete_instance;
using testing::from_letters;
using testing::path_instance;

TEST_CASE("graph rejects malformed edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and sorted") {
  Graph g(4, {{2, 0}, {1, 0}, {3, 2}});
  for (int u = 0; u < 4; ++u) {
    for (int v : g.neighbors(u)) {
      CHECK(g.has_edge(v, u));
      CHECK(g.has_edge(u, v));
    }
  }
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.degree(0) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("components sort by size then smallest vertex") {
  // {3,4,5} is the largest; {0,1} and {2,6} tie at size 2.
  Graph g(7, {{0, 1}, {3, 4}, {4, 5}, {2, 6}});
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{3, 4, 5});
  CHECK(comps[1] == std::vector<int>{0, 1});
  CHECK(comps[2] == std::vector<int>{2, 6});
}

TEST_CASE("induced subgraph remaps and reports the mapping") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<int> back;
  Graph sub = g.induced({1, 3, 2}, &back);
  CHECK(back == std::vector<int>{1, 2, 3});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.has_edge(1, 2));
  CHECK_FALSE(sub.has_edge(0, 2));
}

TEST_CASE("instance validates type counts") {
  Graph g = Graph::path(3);
  CHECK_THROWS_AS(Instance(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(g, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(g, {2, 2}), std::invalid_argument);
  Instance ok(g, {2, 1});
  CHECK(ok.num_types() == 2);
  CHECK(ok.num_agents() == 3);
}

TEST_CASE("assignment bookkeeping") {
  Assignment a(4);
  CHECK_FALSE(a.occupied(0));
  a.place(0, 1);
  a.place(2, 0);
  CHECK(a.type_at(0) == 1);
  CHECK(a.placed_counts(2) == std::vector<int>{1, 1});
  a.clear(0);
  CHECK_FALSE(a.occupied(0));
  CHECK_THROWS_AS(a.place(1, -1), std::invalid_argument);

  Instance inst(Graph::path(4), {2, 2});
  CHECK_FALSE(from_letters("RR.B").is_complete(inst));
  CHECK(from_letters("RRBB").is_complete(inst));
  CHECK_FALSE(from_letters("RBBB").is_complete(inst));
}

TEST_CASE("utility matches the friends-over-neighbors definition") {
  Instance p4(Graph::path(4), {2, 2});
  Assignment rrbb = from_letters("RRBB");
  CHECK(utility(p4, rrbb, 0) == Rational(1));
  CHECK(utility(p4, rrbb, 1) == Rational(1, 2));
  CHECK(utility(p4, rrbb, 2) == Rational(1, 2));
  CHECK(utility(p4, rrbb, 3) == Rational(1));

  Instance k4 = complete_instance(4, {2, 2});
  Assignment split = from_letters("RRBB");
  for (int v = 0; v < 4; ++v) CHECK(utility(k4, split, v) == Rational(1, 3));

  // No occupied neighbor: utility is 0 by definition.
  Instance p3(Graph::path(3), {1, 1});
  Assignment gap = from_letters("R.B");
  CHECK(utility(p3, gap, 0) == Rational(0));
  CHECK(utility(p3, gap, 2) == Rational(0));

  CHECK_THROWS_AS(utility(p3, gap, 1), std::invalid_argument);
}

TEST_CASE("profile aggregates exactly") {
  // Two disjoint K2 edges, one type per edge: perfect.
  Instance kk(Graph(4, {{0, 1}, {2, 3}}), {2, 2});
  UtilityProfile perfect = profile(kk, from_letters("RRBB"));
  CHECK(perfect.total_welfare == Rational(4));
  CHECK(perfect.sorted_utilities ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(perfect.per_type_welfare == std::vector<Rational>{Rational(2), Rational(2)});

  Instance p4(Graph::path(4), {2, 2});
  UtilityProfile best = profile(p4, from_letters("RRBB"));
  CHECK(best.total_welfare == Rational(3));
  CHECK(best.sorted_utilities ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(1, 2)});
  CHECK(best.per_type_sorted[0] == std::vector<Rational>{Rational(1), Rational(1, 2)});

  Instance k4 = complete_instance(4, {2, 2});
  CHECK(profile(k4, from_letters("RBRB")).total_welfare == Rational(4, 3));

  CHECK_THROWS_AS(profile(p4, from_letters("RR.B")), std::invalid_argument);
}

TEST_CASE("profile totals split by type") {
  Instance p4(Graph::path(4), {2, 2});
  for (const char* s : {"RRBB", "RBRB", "RBBR", "BRRB"}) {
    UtilityProfile p = profile(p4, from_letters(s));
    Rational sum;
    for (const Rational& w : p.per_type_welfare) sum += w;
    CHECK(sum == p.total_welfare);
  }
}

TEST_CASE("domination on sorted vectors") {
  std::vector<Rational> ones{Rational(1), Rational(1)};
  CHECK(weakly_dominates(ones, ones));
  CHECK_FALSE(strictly_dominates(ones, ones));

  std::vector<Rational> a{Rational(1), Rational(1, 2)};
  std::vector<Rational> b{Rational(1, 2), Rational(1, 2)};
  CHECK(strictly_dominates(a, b));

  std::vector<Rational> c{Rational(1), Rational(0)};
  CHECK_FALSE(weakly_dominates(c, b));

  std::vector<Rational> short_vec{Rational(1)};
  CHECK_THROWS_AS(weakly_dominates(short_vec, b), std::invalid_argument);
}

TEST_CASE("strict domination is irreflexive and implies weak") {
  Instance p4(Graph::path(4), {2, 2});
  for (const char* s : {"RRBB", "RBRB", "BBRR"}) {
    UtilityProfile p = profile(p4, from_letters(s));
    CHECK_FALSE(strictly_dominates(p.sorted_utilities, p.sorted_utilities));
    UtilityProfile q = profile(p4, from_letters("RBBR"));
    if (strictly_dominates(p.sorted_utilities, q.sorted_utilities)) {
      CHECK(weakly_dominates(p.sorted_utilities, q.sorted_utilities));
    }
  }
}

TEST_CASE("is_perfect") {
  Instance kk(Graph(4, {{0, 1}, {2, 3}}), {2, 2});
  CHECK(is_perfect(kk, from_letters("RRBB")));
  Instance p4(Graph::path(4), {2, 2});
  CHECK_FALSE(is_perfect(p4, from_letters("RRBB")));
  // A lone agent has utility 0, never 1.
  Instance lone(Graph(1, {}), {1});
  CHECK_FALSE(is_perfect(lone, from_letters("R")));
}

TEST_CASE("perfection is exactly welfare |A|") {
  Instance kk(Graph(4, {{0, 1}, {2, 3}}), {2, 2});
  Instance p4(Graph::path(4), {2, 2});
  for (const auto& [inst, s] : {std::pair{kk, "RRBB"}, {kk, "RBRB"}, {p4, "RRBB"}}) {
    Assignment a = from_letters(s);
    CHECK(is_perfect(inst, a) == (social_welfare(inst, a) == Rational(inst.num_agents())));
  }
}

TEST_CASE("utilities stay within [0,1] and hit 1 only without enemies") {
  Instance k4 = complete_instance(4, {2, 2});
  for (const char* s : {"RRBB", "RBRB", "BRRB"}) {
    Assignment a = from_letters(s);
    for (int v = 0; v < 4; ++v) {
      Rational u = utility(k4, a, v);
      CHECK(u >= Rational(0));
      CHECK(u <= Rational(1));
    }
  }
}

TEST_CASE("sorted vectors are invariant under graph automorphisms") {
  // Rotating a cycle assignment is an automorphism composition.
  Instance c5(Graph::cycle(5), {2, 2});
  Assignment a = from_letters("RRBB.");
  Assignment rotated = from_letters(".RRBB");
  UtilityProfile pa = profile(c5, a);
  UtilityProfile pb = profile(c5, rotated);
  CHECK(pa.sorted_utilities == pb.sorted_utilities);
  CHECK(pa.total_welfare == pb.total_welfare);
}

TEST_CASE("pairwise notion comparison") {
  Instance p4(Graph::path(4), {2, 2});
  UtilityProfile best = profile(p4, from_letters("RRBB"));
  UtilityProfile worst = profile(p4, from_letters("RBRB"));

  CHECK(compare_for_notion(Notion::Pareto, best, best) == DominationOrder::Incomparable);
  CHECK(compare_for_notion(Notion::UtilityVector, best, worst) == DominationOrder::ADominates);
  CHECK(compare_for_notion(Notion::UtilityVector, worst, best) == DominationOrder::BDominates);
  CHECK(compare_for_notion(Notion::GroupWelfare, best, worst) == DominationOrder::ADominates);
  CHECK(compare_for_notion(Notion::Pareto, best, worst) == DominationOrder::ADominates);

  CHECK_THROWS_AS(compare_for_notion(Notion::Welfare, best, worst), std::invalid_argument);
  CHECK_THROWS_AS(compare_for_notion(Notion::Perfect, best, worst), std::invalid_argument);
}

TEST_CASE("group welfare comparison needs one strict improvement") {
  UtilityProfile a;
  a.per_type_welfare = {Rational(2), Rational(2)};
  UtilityProfile b;
  b.per_type_welfare = {Rational(2), Rational(1)};
  CHECK(compare_for_notion(Notion::GroupWelfare, a, b) == DominationOrder::ADominates);

  UtilityProfile c;
  c.sorted_utilities = {Rational(1), Rational(1), Rational(1, 2)};
  UtilityProfile d;
  d.sorted_utilities = {Rational(1), Rational(1, 2), Rational(1, 2)};
  CHECK(compare_for_notion(Notion::UtilityVector, c, d) == DominationOrder::ADominates);
}

TEST_CASE("notion names") {
  CHECK(std::string(notion_name(Notion::Welfare)) == "welfare");
  CHECK(std::string(notion_name(Notion::Pareto)) == "pareto");
  CHECK(std::string(notion_name(Notion::GroupWelfare)) == "group-welfare");
  CHECK(std::string(notion_name(Notion::UtilityVector)) == "utility-vector");
  CHECK(std::string(notion_name(Notion::Perfect)) == "perfect");
}
