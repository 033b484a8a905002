#include "schelling/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "schelling/dp_solver.hpp"
#include "schelling/formats.hpp"
#include "schelling/kernel.hpp"
#include "schelling/oracle.hpp"
#include "schelling/perfect_xp.hpp"
#include "schelling/reductions.hpp"
#include "schelling/tree_decomposition.hpp"
#include "schelling/welfare.hpp"

namespace schelling::cli {

namespace {

constexpr int kFound = 0;
constexpr int kNegative = 2;
constexpr int kError = 1;

void emit_result(const SolveOptions& opt, const Assignment& assignment, const Rational& sw) {
  const std::string doc = formats::serialize_assignment(assignment, sw);
  if (opt.output.empty()) {
    std::cout << doc << "\n";
  } else {
    formats::write_text_file(opt.output, doc + "\n");
  }
}

NiceTreeDecomposition build_decomposition(const Instance& instance, const SolveOptions& opt) {
  const Graph& graph = instance.graph();
  if (!opt.td_file.empty()) {
    std::ifstream in(opt.td_file);
    if (!in) throw std::runtime_error("cannot open " + opt.td_file);
    int declared = 0;
    TreeDecomposition td = read_pace(in, &declared);
    if (declared != graph.vertex_count()) {
      throw std::invalid_argument("tree decomposition is for a different vertex count");
    }
    return make_nice(graph, td);
  }
  auto strategy = strategy_from_name(opt.td_strategy);
  if (!strategy) throw std::invalid_argument("unknown td strategy: " + opt.td_strategy);
  return make_nice(graph, decompose(graph, *strategy));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " must not be empty");
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("edges must look like \"0-1,1-2\", got: " + item);
    }
    try {
      std::size_t used = 0;
      const int u = std::stoi(item.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument("");
      const int v = std::stoi(item.substr(dash + 1), &used);
      if (used != item.size() - dash - 1) throw std::invalid_argument("");
      out.emplace_back(u, v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad edge: " + item);
    }
  }
  return out;
}

}  // namespace

int cmd_solve(const SolveOptions& opt) {
  try {
    Instance instance = formats::read_instance_file(opt.input).instance;
    if (opt.notion != "wo" && opt.notion != "perfect") {
      throw std::invalid_argument("solve supports notions wo and perfect, got: " + opt.notion);
    }
    const bool want_perfect = opt.notion == "perfect";

    std::optional<Assignment> found;
    std::optional<Rational> sw;
    if (opt.algorithm == "oracle") {
      if (want_perfect) {
        auto search = perfect_exists(instance);
        if (search.exists) found = *search.witness;
      } else {
        auto best = max_social_welfare(instance);
        found = best.assignment;
        sw = best.welfare;
      }
    } else if (opt.algorithm == "dp") {
      TreewidthSolver solver(instance, build_decomposition(instance, opt),
                             want_perfect ? DpMode::Perfect : DpMode::MaxWelfare);
      if (want_perfect) {
        found = solver.perfect_assignment();
      } else {
        auto best = solver.best_welfare();
        if (!best) throw std::logic_error("dp produced no assignment");
        found = best->assignment;
        sw = best->welfare;
      }
    } else if (opt.algorithm == "kernel") {
      if (want_perfect) {
        throw std::invalid_argument("kernel solves notion wo only");
      }
      auto best = solve_via_kernel(instance);
      found = best.assignment;
      sw = best.welfare;
    } else if (opt.algorithm == "perfect-xp") {
      if (!want_perfect) {
        throw std::invalid_argument("perfect-xp solves notion perfect only");
      }
      found = find_perfect_two_types(instance);
    } else {
      throw std::invalid_argument("unknown algorithm: " + opt.algorithm);
    }

    if (!found) {
      std::cout << "{\"perfect_exists\":false}\n";
      return kNegative;
    }
    emit_result(opt, *found, sw ? *sw : social_welfare(instance, *found));
    return kFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

int cmd_verify(const VerifyOptions& opt) {
  try {
    Instance instance = formats::read_instance_file(opt.input).instance;
    formats::AssignmentDoc doc = formats::read_assignment_file(opt.assignment);

    std::optional<Notion> notion;
    if (opt.notion == "wo") notion = Notion::Welfare;
    if (opt.notion == "po") notion = Notion::Pareto;
    if (opt.notion == "gwo") notion = Notion::GroupWelfare;
    if (opt.notion == "uvo") notion = Notion::UtilityVector;
    if (opt.notion == "perfect") notion = Notion::Perfect;
    if (!notion) throw std::invalid_argument("unknown notion: " + opt.notion);

    UtilityProfile incumbent = profile(instance, doc.assignment);
    if (incumbent.total_welfare != doc.sw) {
      throw std::invalid_argument("sw field " + doc.sw.str() +
                                  " does not match the placement's welfare " +
                                  incumbent.total_welfare.str());
    }

    if (*notion == Notion::Perfect) {
      if (is_perfect(instance, doc.assignment)) {
        std::cout << "PASS\n";
        return kFound;
      }
      std::cout << "FAIL\n";
      return kNegative;
    }

    std::optional<Assignment> dominator;
    std::optional<Rational> dominator_sw;
    try {
      for_each_assignment(instance, [&](const Assignment& candidate) {
        if (dominator) return;
        UtilityProfile challenger = profile(instance, candidate);
        if (dominates(*notion, challenger, incumbent)) {
          dominator = candidate;
          dominator_sw = challenger.total_welfare;
        }
      });
    } catch (const BudgetExceededError& e) {
      throw std::runtime_error(std::string(e.what()) +
                               " (the perfect notion never needs the enumeration budget)");
    }

    if (!dominator) {
      std::cout << "PASS\n";
      return kFound;
    }
    std::cout << "FAIL\n";
    std::cout << formats::serialize_assignment(*dominator, *dominator_sw) << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

int cmd_generate(const GenerateOptions& opt) {
  try {
    std::optional<ReductionOutput> out;
    std::optional<Instance> random;
    if (opt.reduction == "clique") {
      Graph h(opt.source_vertices, parse_edge_list(opt.source_edges));
      out = from_clique(h, opt.size);
    } else if (opt.reduction == "biclique") {
      BipartiteGraph h{opt.left, opt.right, parse_edge_list(opt.source_edges)};
      out = from_biclique(h, opt.size);
    } else if (opt.reduction == "minbisection") {
      Graph g(opt.source_vertices, parse_edge_list(opt.source_edges));
      out = from_minbisection(g, opt.cut_bound);
    } else if (opt.reduction == "binpacking") {
      std::optional<ComponentFamily> family;
      if (opt.family == "path") family = ComponentFamily::Path;
      if (opt.family == "clique") family = ComponentFamily::Clique;
      if (!family) throw std::invalid_argument("unknown component family: " + opt.family);
      out = from_binpacking(parse_int_list(opt.sizes, "sizes"), opt.bins, opt.capacity, *family,
                            opt.tree);
    } else if (opt.reduction == "random") {
      RandomSpec spec;
      spec.seed = opt.seed;
      spec.vertices = opt.vertices;
      if (opt.edge_probability >= 0.0) spec.edge_probability = opt.edge_probability;
      if (opt.degree_bound >= 0) spec.degree_bound = opt.degree_bound;
      spec.type_counts = parse_int_list(opt.type_counts, "type counts");
      random = random_instance(spec);
      if (!opt.emit_claim.empty()) {
        throw std::invalid_argument("random instances carry no claim");
      }
    } else {
      throw std::invalid_argument("unknown reduction: " + opt.reduction);
    }

    const Instance& instance = out ? out->instance : *random;
    const std::string doc = formats::serialize_instance(instance);
    if (opt.output.empty()) {
      std::cout << doc << "\n";
    } else {
      formats::write_text_file(opt.output, doc + "\n");
    }
    if (!opt.emit_claim.empty()) {
      formats::write_text_file(opt.emit_claim, formats::serialize_claim(out->claim) + "\n");
    }
    return kFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

namespace {

struct BenchRow {
  std::string instance_path;
  std::string algorithm;
  std::string notion = "wo";
  std::string td_strategy = "min_fill";
};

struct BenchResult {
  std::string width_used;
  std::string table_peak;
  std::string sw;
  double wall_ms = 0.0;
};

BenchResult run_bench_row(const BenchRow& row) {
  BenchResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    Instance instance = formats::read_instance_file(row.instance_path).instance;
    const bool want_perfect = row.notion == "perfect";
    if (row.algorithm == "oracle") {
      if (want_perfect) {
        auto search = perfect_exists(instance);
        result.sw = search.exists ? social_welfare(instance, *search.witness).str() : "none";
      } else {
        result.sw = max_social_welfare(instance).welfare.str();
      }
    } else if (row.algorithm == "dp") {
      auto strategy = strategy_from_name(row.td_strategy);
      if (!strategy) throw std::invalid_argument("unknown td strategy: " + row.td_strategy);
      const Graph& graph = instance.graph();
      TreewidthSolver solver(instance, make_nice(graph, decompose(graph, *strategy)),
                             want_perfect ? DpMode::Perfect : DpMode::MaxWelfare);
      DpStats stats = solver.stats();
      result.width_used = std::to_string(stats.width_used);
      result.table_peak = std::to_string(stats.peak_table_size);
      if (want_perfect) {
        auto witness = solver.perfect_assignment();
        result.sw = witness ? social_welfare(instance, *witness).str() : "none";
      } else {
        auto best = solver.best_welfare();
        result.sw = best ? best->welfare.str() : "none";
      }
    } else if (row.algorithm == "kernel") {
      result.sw = solve_via_kernel(instance).welfare.str();
    } else if (row.algorithm == "perfect-xp") {
      auto witness = find_perfect_two_types(instance);
      result.sw = witness ? social_welfare(instance, *witness).str() : "none";
    } else {
      throw std::invalid_argument("unknown algorithm: " + row.algorithm);
    }
  } catch (const std::exception& e) {
    result.sw = "error";
    std::cerr << row.instance_path << " [" << row.algorithm << "]: " << e.what() << "\n";
  }
  const auto stop = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

int cmd_bench(const BenchOptions& opt) {
  try {
    nlohmann::json suite = nlohmann::json::parse(formats::read_text_file(opt.suite));
    const nlohmann::json& runs = suite.is_object() ? suite.at("runs") : suite;
    if (!runs.is_array()) throw std::invalid_argument("suite must be an array of runs");

    std::vector<BenchRow> rows;
    for (const auto& entry : runs) {
      BenchRow row;
      row.instance_path = entry.at("instance").get<std::string>();
      row.algorithm = entry.at("algorithm").get<std::string>();
      if (entry.contains("notion")) row.notion = entry["notion"].get<std::string>();
      if (entry.contains("td_strategy")) {
        row.td_strategy = entry["td_strategy"].get<std::string>();
      }
      rows.push_back(std::move(row));
    }

    std::vector<BenchResult> results(rows.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || rows.size() <= 1) {
      for (std::size_t i = 0; i < rows.size(); ++i) results[i] = run_bench_row(rows[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      const int count = std::min<std::size_t>(jobs, rows.size());
      for (int t = 0; t < count; ++t) {
        workers.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            results[i] = run_bench_row(rows[i]);
          }
        });
      }
      for (auto& w : workers) w.join();
    }

    std::ostringstream csv;
    csv << "instance,algorithm,width_used,table_peak,sw,wall_ms\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      csv << csv_field(rows[i].instance_path) << "," << csv_field(rows[i].algorithm) << ","
          << results[i].width_used << "," << results[i].table_peak << ","
          << csv_field(results[i].sw) << "," << results[i].wall_ms << "\n";
    }
    if (opt.output.empty()) {
      std::cout << csv.str();
    } else {
      formats::write_text_file(opt.output, csv.str());
    }
    return kFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace schelling::cli
