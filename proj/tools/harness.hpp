#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/solver.hpp"

namespace gpcops::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kBudget = 4,
  kStrategyFailure = 5,
  kExceedsCmax = 6,
};

// "gp n k", "igraph n j k" or a path to an edge-list file. Tokens may be
// given separately or in one whitespace-separated string.
struct GraphSpec {
  enum class Kind { kGp, kIGraph, kFile };
  Kind kind = Kind::kGp;
  IGraphParams params{};  // j == 1 for gp
  std::string path;

  std::string describe() const;
};

// Throws ParseError naming the offending token position.
GraphSpec parse_graph_spec(const std::vector<std::string>& tokens);
// Inverse of Graph::name() for the two families: "GP(n,k)" or "I(n,j,k)".
GraphSpec spec_from_graph_name(const std::string& name);
// Builds the graph; throws PreconditionError for invalid or disconnected
// family parameters (connectivity is checked for I-graphs only).
Graph build_graph(const GraphSpec& spec);

struct TableRow {
  int n = 0;
  int k = 0;
  std::optional<int> cop_number;  // empty when the budget was exceeded
  bool exceeds_cmax = false;
  int girth = 0;
  int lower_bound = 0;
  std::uint64_t states = 0;
  double millis = 0.0;
  SolveStats stats;
};

TableRow compute_row(int n, int k, int c_max, const SolveOptions& options);

// Every valid (n,k) with n_min <= n <= n_max, in (n,k) order, solved on up to
// `jobs` threads. `copnum` keeps only rows with that cop number.
std::vector<TableRow> compute_table(int n_min, int n_max, std::optional<int> copnum, int c_max,
                                    const SolveOptions& options, int jobs);

void write_csv(std::ostream& out, const std::vector<TableRow>& rows, bool with_millis = true);
nlohmann::ordered_json table_stats_json(const std::vector<TableRow>& rows);

// Strategy names accepted by `simulate`.
std::unique_ptr<Controller> make_controller(const std::string& strategy, const GraphSpec& spec,
                                            const Graph& g, const std::vector<Vertex>& tree,
                                            Vertex start, int window_scale);
bool window_strategy(const std::string& strategy);

}  // namespace gpcops::cli
