#pragma once

#include <cstdint>
#include <string>

namespace schelling::cli {

// Exit-code contract shared by all subcommands: 0 = result found / check
// passed, 2 = decided negative (no perfect assignment, verification FAIL),
// 1 = error (malformed input, unsupported combination, budget exceeded).

struct SolveOptions {
  std::string input;
  std::string algorithm = "dp";  // oracle | dp | kernel | perfect-xp
  std::string notion = "wo";     // wo | perfect
  std::string td_strategy = "min_fill";
  std::string td_file;  // PACE .td import; bypasses td_strategy
  std::string output;   // assignment JSON; stdout when empty
  std::uint64_t seed = 0;
};
int cmd_solve(const SolveOptions& opt);

struct VerifyOptions {
  std::string input;
  std::string assignment;
  std::string notion;  // wo | po | gwo | uvo | perfect
};
int cmd_verify(const VerifyOptions& opt);

struct GenerateOptions {
  std::string reduction;  // clique | biclique | minbisection | binpacking | random
  std::string output;      // instance JSON; stdout when empty
  std::string emit_claim;  // claim JSON path, reductions only

  // Graph-backed sources (clique, minbisection): edge list "0-1,2-3".
  int source_vertices = 0;
  std::string source_edges;
  int size = 0;  // clique size / biclique side size

  // biclique: bipartite source, edges pair left with right indices.
  int left = 0;
  int right = 0;

  int cut_bound = 0;  // minbisection

  // binpacking
  std::string sizes;  // "2,2,4"
  int bins = 0;
  int capacity = 0;
  std::string family = "path";  // path | clique
  bool tree = false;

  // random
  std::uint64_t seed = 0;
  int vertices = 0;
  double edge_probability = -1.0;  // set when >= 0
  int degree_bound = -1;           // set when >= 0
  std::string type_counts;         // "3,3"
};
int cmd_generate(const GenerateOptions& opt);

struct BenchOptions {
  std::string suite;
  std::string output;  // CSV; stdout when empty
  int jobs = 1;
};
int cmd_bench(const BenchOptions& opt);

}  // namespace schelling::cli
