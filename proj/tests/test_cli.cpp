#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpcops/errors.hpp"
#include "harness.hpp"

using namespace gpcops;
using namespace gpcops::cli;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(GPCOPS_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(GraphSpec, ParsesFamiliesAndFiles) {
  const GraphSpec gp = parse_graph_spec({"gp", "7", "2"});
  EXPECT_EQ(gp.kind, GraphSpec::Kind::kGp);
  EXPECT_EQ(gp.params.n, 7);
  EXPECT_EQ(gp.params.j, 1);
  EXPECT_EQ(gp.params.k, 2);
  const GraphSpec ig = parse_graph_spec({"igraph 7 3 2"});
  EXPECT_EQ(ig.kind, GraphSpec::Kind::kIGraph);
  EXPECT_EQ(ig.describe(), "igraph 7 3 2");
  EXPECT_EQ(parse_graph_spec({"graph.txt"}).kind, GraphSpec::Kind::kFile);
  EXPECT_EQ(spec_from_graph_name("GP(8,3)").describe(), "gp 8 3");
  EXPECT_EQ(spec_from_graph_name("I(7,3,2)").describe(), "igraph 7 3 2");
  EXPECT_THROW(spec_from_graph_name("C12"), ParseError);
}

TEST(GraphSpec, DiagnosticsNameThePosition) {
  try {
    parse_graph_spec({"gp", "7", "x2"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("token 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_graph_spec({"gp", "7"}), ParseError);
  EXPECT_THROW(parse_graph_spec({}), ParseError);
  EXPECT_THROW(parse_graph_spec({"torus", "3", "3"}), ParseError);
}

TEST(GraphSpec, DisconnectedIGraphIsRejected) {
  try {
    build_graph(parse_graph_spec({"igraph 6 2 2"}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("disconnected"), std::string::npos);
  }
}

TEST(Table, RowsAndFilters) {
  const TableRow r62 = compute_row(6, 2, 4, {});
  ASSERT_TRUE(r62.cop_number.has_value());
  EXPECT_EQ(*r62.cop_number, 2);
  EXPECT_EQ(compute_row(16, 4, 4, {}).cop_number, 3);
  EXPECT_TRUE(compute_table(5, 8, 4, 4, {}, 1).empty());
  const auto all = compute_table(5, 8, std::nullopt, 4, {}, 2);
  int count = 0;
  for (int n = 5; n <= 8; ++n) count += (n - 1) / 2;
  EXPECT_EQ(static_cast<int>(all.size()), count);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LT(std::make_pair(all[i - 1].n, all[i - 1].k), std::make_pair(all[i].n, all[i].k));
  }
  for (const auto& r : all) EXPECT_LE(r.lower_bound, r.cop_number.value());
}

TEST(Table, Gp2610IsTheOnlyFourAtN26) {
  const auto rows = compute_table(26, 26, 4, 4, {}, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].k, 10);
}

TEST(Table, CsvHasNoTimingWhenAsked) {
  const auto rows = compute_table(5, 6, std::nullopt, 4, {}, 1);
  std::ostringstream a, b;
  write_csv(a, rows, false);
  write_csv(b, rows, true);
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "n,k,copnumber,girth,lowerbound,states");
  EXPECT_EQ(b.str().substr(0, b.str().find('\n')), "n,k,copnumber,girth,lowerbound,states,millis");
  EXPECT_NE(a.str().find("5,2,3,5,3,"), std::string::npos) << a.str();
  // Budget failures are kept in the row.
  SolveOptions tiny;
  tiny.budget_states = 10;
  const auto limited = compute_table(5, 5, std::nullopt, 4, tiny, 1);
  ASSERT_EQ(limited.size(), 2u);
  EXPECT_FALSE(limited[0].cop_number.has_value());
  std::ostringstream c;
  write_csv(c, limited, false);
  EXPECT_NE(c.str().find("5,1,budget,"), std::string::npos) << c.str();
  EXPECT_NE(c.str().find("5,2,budget,"), std::string::npos) << c.str();
}

TEST(Cli, CopnumberExitCodes) {
  CliRun r = run_cli("copnumber gp 6 2 --format json");
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("\"cop_number\":2"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli("copnumber gp 5 2 --cmax 2").code, kExceedsCmax);
  EXPECT_EQ(run_cli("copnumber igraph 6 2 2").code, kPrecondition);
  EXPECT_EQ(run_cli("copnumber gp 7 x").code, kParse);
  EXPECT_EQ(run_cli("copnumber gp 12 5 --budget-states 100").code, kBudget);
  EXPECT_EQ(run_cli("frobnicate").code, kUsage);
}

TEST(Cli, BoundsExamples) {
  CliRun r = run_cli("bounds gp 5 2 --format json");
  ASSERT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("\"lower_bound\":3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"upper_bound\":4"), std::string::npos) << r.out;
  r = run_cli("bounds gp 9 1 --format json");
  EXPECT_NE(r.out.find("\"lower_bound\":1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"upper_bound\":4"), std::string::npos) << r.out;
  r = run_cli("bounds igraph 7 3 2 --format json");
  EXPECT_NE(r.out.find("\"upper_bound\":5"), std::string::npos) << r.out;
}

TEST(Cli, SimulateAndReplay) {
  const auto dir = std::filesystem::temp_directory_path() / "gpcops_cli_test";
  std::filesystem::create_directories(dir);
  const auto trace = (dir / "four.json").string();
  CliRun r = run_cli("simulate four gp 8 3 --robber optimal --trace-out " + trace);
  EXPECT_EQ(r.code, kOk) << r.out;
  r = run_cli("replay " + trace);
  EXPECT_EQ(r.code, kOk) << r.out;

  r = run_cli("simulate forceright gp 7 2 --robber random --seed 7");
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_TRUE(r.out.find("CAPTURE") != std::string::npos || r.out.find("PUSHED_OUT") != std::string::npos);

  // a_0..a_4 induce the outer 5-cycle, which is not a tree.
  EXPECT_EQ(run_cli("simulate guard gp 5 2 --tree 0,1,2,3,4 --start 0").code, kPrecondition);
  EXPECT_EQ(run_cli("simulate gpn3 gp 7 2").code, kPrecondition);
  EXPECT_EQ(run_cli("simulate four gp 8 3 --robber sneaky").code, kParse);
  EXPECT_EQ(run_cli("simulate four gp 8 3 --max-turns 1").code, kStrategyFailure);

  std::ofstream(dir / "broken.json") << R"j({"graph": "GP(8,3)"})j";
  EXPECT_EQ(run_cli("replay " + (dir / "broken.json").string()).code, kParse);
  std::filesystem::remove_all(dir);
}
