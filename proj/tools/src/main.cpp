#include <string>

#include "CLI11.hpp"
#include "schelling/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Schelling assignment solver and instance toolkit"};
  app.require_subcommand(1);

  schelling::cli::SolveOptions solve;
  CLI::App* cmd_solve = app.add_subcommand("solve", "compute an assignment");
  cmd_solve->add_option("--input", solve.input, "instance JSON file")->required();
  cmd_solve->add_option("--alg", solve.algorithm, "oracle | dp | kernel | perfect-xp");
  cmd_solve->add_option("--notion", solve.notion, "wo | perfect");
  cmd_solve->add_option("--td-strategy", solve.td_strategy, "min_fill | min_degree | exact_small");
  cmd_solve->add_option("--td-file", solve.td_file, "PACE .td file to use instead of a strategy");
  cmd_solve->add_option("--output", solve.output, "assignment JSON destination (default stdout)");
  cmd_solve->add_option("--seed", solve.seed, "reserved for randomized strategies");

  schelling::cli::VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check an assignment against a notion");
  cmd_verify->add_option("--input", verify.input, "instance JSON file")->required();
  cmd_verify->add_option("--assignment", verify.assignment, "assignment JSON file")->required();
  cmd_verify->add_option("--notion", verify.notion, "wo | po | gwo | uvo | perfect")->required();

  schelling::cli::GenerateOptions gen;
  CLI::App* cmd_generate = app.add_subcommand("generate", "build an instance from a reduction");
  cmd_generate
      ->add_option("--reduction", gen.reduction,
                   "clique | biclique | minbisection | binpacking | random")
      ->required();
  cmd_generate->add_option("--output", gen.output, "instance JSON destination (default stdout)");
  cmd_generate->add_option("--emit-claim", gen.emit_claim, "claim JSON destination");
  cmd_generate->add_option("--source-vertices", gen.source_vertices,
                           "vertex count of the source graph");
  cmd_generate->add_option("--source-edges", gen.source_edges, "edge list, e.g. \"0-1,1-2\"");
  cmd_generate->add_option("--size", gen.size, "clique size / biclique side size");
  cmd_generate->add_option("--left", gen.left, "left side size of the bipartite source");
  cmd_generate->add_option("--right", gen.right, "right side size of the bipartite source");
  cmd_generate->add_option("--cut-bound", gen.cut_bound, "bisection cut bound");
  cmd_generate->add_option("--sizes", gen.sizes, "item sizes, e.g. \"2,2,4\"");
  cmd_generate->add_option("--bins", gen.bins, "bin count");
  cmd_generate->add_option("--capacity", gen.capacity, "bin capacity");
  cmd_generate->add_option("--family", gen.family, "path | clique");
  cmd_generate->add_flag("--tree", gen.tree, "hang all paths off a hub vertex");
  cmd_generate->add_option("--seed", gen.seed, "random seed");
  cmd_generate->add_option("--vertices", gen.vertices, "random instance vertex count");
  cmd_generate->add_option("--edge-probability", gen.edge_probability, "edge probability");
  cmd_generate->add_option("--degree-bound", gen.degree_bound, "max degree");
  cmd_generate->add_option("--type-counts", gen.type_counts, "agent counts, e.g. \"3,3\"");

  schelling::cli::BenchOptions bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "run a suite and emit CSV timings");
  cmd_bench->add_option("--suite", bench.suite, "suite JSON file")->required();
  cmd_bench->add_option("--output", bench.output, "CSV destination (default stdout)");
  cmd_bench->add_option("--jobs", bench.jobs, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_solve->parsed()) return schelling::cli::cmd_solve(solve);
  if (cmd_verify->parsed()) return schelling::cli::cmd_verify(verify);
  if (cmd_generate->parsed()) return schelling::cli::cmd_generate(gen);
  return schelling::cli::cmd_bench(bench);
}
