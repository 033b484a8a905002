#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "schelling/dp_solver.hpp"
#include "schelling/kernel.hpp"
#include "schelling/oracle.hpp"
#include "schelling/perfect_xp.hpp"
#include "schelling/reductions.hpp"
#include "schelling/tree_decomposition.hpp"

namespace {

using namespace schelling;

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
  return Graph(n, edges);
}

Instance dense_instance(int n, std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.vertices = n;
  spec.edge_probability = 0.5;
  spec.type_counts = {n / 3, n / 3};
  return random_instance(spec);
}

void oracle_max_welfare(benchmark::State& state) {
  Instance inst = dense_instance(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_social_welfare(inst));
  }
}
BENCHMARK(oracle_max_welfare)->Arg(6)->Arg(8)->Arg(10);

void dp_on_tree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph tree = random_tree(n, 23);
  Instance inst(tree, {n / 5, n / 5});
  for (auto _ : state) {
    auto ntd = make_nice(tree, decompose(tree, DecompositionStrategy::MinFill));
    benchmark::DoNotOptimize(solve_max_welfare(inst, ntd));
  }
}
BENCHMARK(dp_on_tree)->Arg(20)->Arg(35)->Arg(50);

void dp_dense_small(benchmark::State& state) {
  Instance inst = dense_instance(static_cast<int>(state.range(0)), 29);
  const Graph& g = inst.graph();
  for (auto _ : state) {
    auto ntd = make_nice(g, decompose(g, DecompositionStrategy::MinFill));
    benchmark::DoNotOptimize(solve_max_welfare(inst, ntd));
  }
}
BENCHMARK(dp_dense_small)->Arg(8)->Arg(10);

void kernel_long_cycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  Instance inst(Graph(n, edges), {2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_via_kernel(inst));
  }
}
BENCHMARK(kernel_long_cycle)->Arg(40)->Arg(200)->Arg(1000);

void perfect_xp_trees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph tree = random_tree(n, 47);
  Instance inst(tree, {6, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_perfect_two_types(inst));
  }
}
BENCHMARK(perfect_xp_trees)->Arg(10)->Arg(14)->Arg(18);

void decomposition_heuristics(benchmark::State& state) {
  RandomSpec spec;
  spec.seed = 59;
  spec.vertices = static_cast<int>(state.range(0));
  spec.edge_probability = 0.15;
  spec.type_counts = {1};
  Graph g = random_instance(spec).graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(g, DecompositionStrategy::MinFill));
    benchmark::DoNotOptimize(decompose(g, DecompositionStrategy::MinDegree));
  }
}
BENCHMARK(decomposition_heuristics)->Arg(30)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
