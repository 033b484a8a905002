#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "schelling/formats.hpp"
#include "schelling/welfare.hpp"

// SCHELLING_CLI_PATH is injected by the build and points at the built binary.
#ifndef SCHELLING_CLI_PATH
#error "SCHELLING_CLI_PATH must be defined"
#endif

using namespace schelling;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  std::string command = env.empty() ? "" : env + " ";
  command += std::string(SCHELLING_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = formats::read_text_file(out_path);
  result.err = formats::read_text_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::string write_instance(const std::string& path, const Instance& instance) {
  formats::write_instance_file(path, instance);
  return path;
}

}  // namespace

TEST_CASE("solve emits the welfare optimum as JSON") {
  std::string path = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  RunResult r = run_cli("solve --input " + path + " --alg dp --notion wo");
  CHECK(r.exit_code == 0);
  formats::AssignmentDoc doc = formats::parse_assignment(r.out);
  CHECK(doc.sw == Rational(3));
  CHECK(r.out.find("\"sw\":\"3/1\"") != std::string::npos);
}

TEST_CASE("solver backends agree on small instances") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  std::string k4 = write_instance("cli_k4.json", testing::complete_instance(4, {2, 2}));
  for (const char* alg : {"oracle", "dp", "kernel"}) {
    RunResult r = run_cli(std::string("solve --input ") + p4 + " --alg " + alg);
    CHECK(r.exit_code == 0);
    CHECK(formats::parse_assignment(r.out).sw == Rational(3));
  }
  RunResult r = run_cli("solve --input " + k4 + " --alg oracle --notion wo");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"sw\":\"4/3\"") != std::string::npos);
}

TEST_CASE("a decided negative exits 2") {
  std::string p3 = write_instance("cli_p3.json", testing::path_instance(3, {2, 1}));
  RunResult r = run_cli("solve --input " + p3 + " --alg perfect-xp --notion perfect");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"perfect_exists\":false") != std::string::npos);
}

TEST_CASE("incompatible algorithm and notion combinations exit 1") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  CHECK(run_cli("solve --input " + p4 + " --alg kernel --notion perfect").exit_code == 1);
  CHECK(run_cli("solve --input " + p4 + " --alg perfect-xp --notion wo").exit_code == 1);
  CHECK(run_cli("solve --input " + p4 + " --alg nosuch").exit_code == 1);
  std::string k3 = write_instance("cli_k3types.json",
                                  testing::path_instance(5, {1, 1, 1}));
  CHECK(run_cli("solve --input " + k3 + " --alg kernel").exit_code == 1);
}

TEST_CASE("solve writes to --output when asked") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  RunResult r = run_cli("solve --input " + p4 + " --alg dp --output cli_result.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  formats::AssignmentDoc doc = formats::read_assignment_file("cli_result.json");
  CHECK(doc.sw == Rational(3));
  std::remove("cli_result.json");
}

TEST_CASE("solve accepts an external tree decomposition") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  {
    std::ofstream td("cli_p4.td");
    td << "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n";
  }
  RunResult r = run_cli("solve --input " + p4 + " --alg dp --td-file cli_p4.td");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"sw\":\"3/1\"") != std::string::npos);

  // Decomposition for the wrong graph size is rejected.
  std::string p3 = write_instance("cli_p3.json", testing::path_instance(3, {2, 1}));
  RunResult bad = run_cli("solve --input " + p3 + " --alg dp --td-file cli_p4.td");
  CHECK(bad.exit_code == 1);
  std::remove("cli_p4.td");
}

TEST_CASE("verify passes the optimum and fails a dominated assignment") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  Instance inst = testing::path_instance(4, {2, 2});

  Assignment best = testing::from_letters("RRBB");
  formats::write_assignment_file("cli_best.json", best, social_welfare(inst, best));
  RunResult pass = run_cli("verify --input " + p4 + " --assignment cli_best.json --notion wo");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out == "PASS\n");

  Assignment worse = testing::from_letters("RBRB");
  formats::write_assignment_file("cli_worse.json", worse, social_welfare(inst, worse));
  for (const char* notion : {"wo", "po", "gwo", "uvo"}) {
    RunResult fail =
        run_cli("verify --input " + p4 + " --assignment cli_worse.json --notion " + notion);
    CHECK(fail.exit_code == 2);
    REQUIRE(fail.out.rfind("FAIL\n", 0) == 0);
    // The counterexample on the second line is itself a valid assignment doc
    // that dominates the candidate.
    formats::AssignmentDoc counter =
        formats::parse_assignment(fail.out.substr(fail.out.find('\n') + 1));
    CHECK(counter.sw == social_welfare(inst, counter.assignment));
  }

  RunResult perfect =
      run_cli("verify --input " + p4 + " --assignment cli_best.json --notion perfect");
  CHECK(perfect.exit_code == 2);
  CHECK(perfect.out == "FAIL\n");
  std::remove("cli_best.json");
  std::remove("cli_worse.json");
}

TEST_CASE("verify rejects an assignment whose sw field lies") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  formats::write_text_file("cli_lying.json",
                           R"({"placement":{"0":0,"1":0,"2":1,"3":1},"sw":"2/1"})");
  RunResult r = run_cli("verify --input " + p4 + " --assignment cli_lying.json --notion wo");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("does not match") != std::string::npos);
  std::remove("cli_lying.json");
}

TEST_CASE("verify budget errors mention that perfect needs no budget") {
  Instance big(Graph(24, {}), {8, 8, 8});
  std::string path = write_instance("cli_big.json", big);
  std::vector<int> types(24);
  for (int i = 0; i < 24; ++i) types[i] = i / 8;
  Assignment a{types};
  formats::write_assignment_file("cli_big_assign.json", a, Rational(0));
  RunResult r =
      run_cli("verify --input " + path + " --assignment cli_big_assign.json --notion po");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("budget") != std::string::npos);
  CHECK(r.err.find("perfect notion never needs") != std::string::npos);

  // The perfect notion on the same oversized instance succeeds outright.
  RunResult ok =
      run_cli("verify --input " + path + " --assignment cli_big_assign.json --notion perfect");
  CHECK(ok.exit_code == 2);
  CHECK(ok.out == "FAIL\n");
  std::remove("cli_big_assign.json");
  std::remove("cli_big.json");
}

TEST_CASE("generate is deterministic and writes claims") {
  const std::string args =
      "generate --reduction binpacking --sizes 2,2,4 --bins 2 --capacity 4 "
      "--output cli_gen.json --emit-claim cli_claim.json";
  CHECK(run_cli(args).exit_code == 0);
  std::string first = formats::read_text_file("cli_gen.json");
  std::string first_claim = formats::read_text_file("cli_claim.json");
  CHECK(run_cli(args).exit_code == 0);
  CHECK(formats::read_text_file("cli_gen.json") == first);
  CHECK(formats::read_text_file("cli_claim.json") == first_claim);
  CHECK(first_claim.find("perfect-iff") != std::string::npos);

  formats::NamedInstance gen = formats::read_instance_file("cli_gen.json");
  CHECK(gen.instance.graph().vertex_count() == 8);
  CHECK(gen.instance.type_counts() == std::vector<int>{4, 4});
  std::remove("cli_gen.json");
  std::remove("cli_claim.json");
}

TEST_CASE("generate random honors the seed and rejects claims") {
  const std::string args =
      "generate --reduction random --seed 7 --vertices 9 --edge-probability 0.4 "
      "--type-counts 3,3";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run_cli("generate --reduction random --seed 8 --vertices 9 "
                        "--edge-probability 0.4 --type-counts 3,3");
  CHECK(c.out != a.out);
  CHECK(run_cli(args + " --emit-claim cli_claim.json").exit_code == 1);
}

TEST_CASE("generate clique example") {
  RunResult r = run_cli(
      "generate --reduction clique --source-vertices 3 --source-edges 0-1,1-2 --size 2");
  CHECK(r.exit_code == 0);
  formats::NamedInstance out = formats::parse_instance(r.out);
  CHECK(out.instance.graph().vertex_count() == 13);
  CHECK(out.instance.type_counts() == std::vector<int>{11, 1});
}

TEST_CASE("bench emits one CSV row per run") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  std::string missing_row = R"({"instance":"cli_nope.json","algorithm":"dp"})";
  formats::write_text_file(
      "cli_suite.json",
      std::string(R"({"runs":[{"instance":"cli_p4.json","algorithm":"dp"},)") +
          R"({"instance":"cli_p4.json","algorithm":"oracle"},)" + missing_row + "]}\n");
  RunResult r = run_cli("bench --suite cli_suite.json --jobs 2");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "instance,algorithm,width_used,table_peak,sw,wall_ms");
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("cli_p4.json,dp,1,") != std::string::npos);
  CHECK(line.find("3/1") != std::string::npos);
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("cli_p4.json,oracle,,,3/1,") != std::string::npos);
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("cli_nope.json,dp,,,error,") != std::string::npos);
  std::remove("cli_suite.json");
}

TEST_CASE("an empty bench suite emits only the header") {
  formats::write_text_file("cli_suite.json", "[]\n");
  RunResult r = run_cli("bench --suite cli_suite.json --output cli_bench.csv");
  CHECK(r.exit_code == 0);
  CHECK(formats::read_text_file("cli_bench.csv") ==
        "instance,algorithm,width_used,table_peak,sw,wall_ms\n");
  std::remove("cli_suite.json");
  std::remove("cli_bench.csv");
}

TEST_CASE("bad invocations exit 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("solve").exit_code == 1);
  CHECK(run_cli("solve --input nope.json --frobnicate").exit_code == 1);
  CHECK(run_cli("solve --input cli_does_not_exist.json").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("oracle budget env var caps enumeration") {
  std::string p4 = write_instance("cli_p4.json", testing::path_instance(4, {2, 2}));
  RunResult r = run_cli("solve --input " + p4 + " --alg oracle",
                        "SCHELLING_ORACLE_BUDGET=3");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("budget") != std::string::npos);
  RunResult ok = run_cli("solve --input " + p4 + " --alg oracle",
                         "SCHELLING_ORACLE_BUDGET=100");
  CHECK(ok.exit_code == 0);
}
