// gpcops: cop numbers, the cop-number-four table and strategy simulations
// for generalized Petersen graphs and I-graphs.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"
#include "harness.hpp"

using namespace gpcops;
using namespace gpcops::cli;
using nlohmann::ordered_json;

namespace {

struct Common {
  std::vector<std::string> spec;
  int cmax = 4;
  std::uint64_t budget = SolveOptions{}.budget_states;
  std::string format = "text";
  bool exact_witness = false;

  SolveOptions options() const {
    SolveOptions o;
    o.budget_states = budget;
    o.exact_witness = exact_witness;
    return o;
  }
};

std::string join(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int run_copnumber(const Common& c) {
  const GraphSpec spec = parse_graph_spec(c.spec);
  const Graph g = build_graph(spec);
  const BoundReport b = lower_bounds(g);
  const CopNumberResult r = cop_number(g, c.cmax, c.options());
  const int lb = std::max(b.aigner_fromme_lb, b.frankl_lb);
  if (c.format == "json") {
    ordered_json j;
    j["graph"] = r.graph;
    j["cop_number"] = r.exceeds_cmax ? ordered_json(nullptr) : ordered_json(r.cop_number);
    j["exceeds_cmax"] = r.exceeds_cmax;
    j["cmax"] = c.cmax;
    j["witness_placement"] = r.witness_placement;
    j["girth"] = b.girth == kInfinity ? ordered_json(nullptr) : ordered_json(b.girth);
    j["lower_bound"] = lb;
    j["solve_stats"] = ordered_json::parse(r.stats.to_json());
    j["total_states"] = r.total_states;
    j["total_ms"] = r.total_ms;
    std::cout << j.dump() << '\n';
  } else if (c.format == "csv") {
    std::cout << "graph,copnumber,girth,lowerbound,states,millis\n"
              << r.graph << ',' << (r.exceeds_cmax ? ">cmax" : std::to_string(r.cop_number)) << ','
              << b.girth << ',' << lb << ',' << r.total_states << ',' << fmt::format("{:.1f}", r.total_ms)
              << '\n';
  } else {
    std::cout << fmt::format("{:<16} {:>10} {:>8} {:>6} {:>12} {:>10}\n", "graph", "copnumber", "girth", "lb",
                             "states", "millis");
    std::cout << fmt::format("{:<16} {:>10} {:>8} {:>6} {:>12} {:>10.1f}\n", r.graph,
                             r.exceeds_cmax ? ">" + std::to_string(c.cmax) : std::to_string(r.cop_number),
                             b.girth == kInfinity ? std::string("inf") : std::to_string(b.girth), lb,
                             r.total_states, r.total_ms);
    if (!r.exceeds_cmax) std::cout << "witness placement: " << join(r.witness_placement) << '\n';
  }
  return r.exceeds_cmax ? kExceedsCmax : kOk;
}

int run_table(const Common& c, int n_min, int n_max, const std::string& filter, int jobs,
              const std::string& out_path) {
  std::optional<int> copnum;
  if (filter != "all") {
    if (filter.rfind("copnum=", 0) != 0) throw ParseError("filter must be 'all' or 'copnum=C'");
    try {
      copnum = std::stoi(filter.substr(7));
    } catch (const std::exception&) {
      throw ParseError("filter '" + filter + "': bad cop number");
    }
  }
  const auto rows = compute_table(n_min, n_max, copnum, c.cmax, c.options(), jobs);
  if (out_path.empty()) {
    write_csv(std::cout, rows, c.format != "csv-golden");
  } else {
    std::ofstream out(out_path);
    if (!out) throw PreconditionError("cannot write " + out_path);
    write_csv(out, rows, false);
    std::ofstream stats(out_path + ".stats.json");
    stats << table_stats_json(rows).dump(2) << '\n';
    write_csv(std::cout, rows, true);
  }
  bool budget_hit = false;
  for (const auto& r : rows) budget_hit |= !r.cop_number && !r.exceeds_cmax;
  return budget_hit ? kBudget : kOk;
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("vertex list: bad vertex '" + tok + "' at offset " + std::to_string(pos));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run_simulate(const Common& c, const std::string& strategy, const std::string& robber, std::uint64_t seed,
                 std::optional<int> max_turns, const std::string& trace_out, const std::string& tree_arg,
                 int start, int window_scale) {
  const GraphSpec spec = parse_graph_spec(c.spec);
  const Graph g = build_graph(spec);
  const RobberPolicy policy = RobberPolicy::parse(robber, seed);
  const auto tree = parse_vertex_list(tree_arg);
  auto controller = make_controller(strategy, spec, g, tree, start, window_scale);
  const int turns = max_turns.value_or(50 * (spec.kind == GraphSpec::Kind::kFile ? g.size() : spec.params.n));
  const GameTrace trace = simulate(*controller, policy, turns, nullptr, c.options());
  const auto j = trace.to_json();
  if (!trace_out.empty()) {
    std::ofstream out(trace_out);
    if (!out) throw PreconditionError("cannot write " + trace_out);
    out << j.dump(1) << '\n';
  }
  if (c.format == "json") {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << fmt::format("{} on {} vs {}: {} after {} cop turns\n", trace.strategy, trace.graph,
                             policy.describe(), to_string(trace.outcome), trace.cop_turns);
  }
  const bool ok = trace.outcome == Outcome::kCapture ||
                  (trace.outcome == Outcome::kPushedOut && window_strategy(strategy));
  return ok ? kOk : kStrategyFailure;
}

int run_replay(const Common& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("trace: ") + e.what());
  }
  const GameTrace trace = GameTrace::from_json(j);
  const GraphSpec spec = c.spec.empty() ? spec_from_graph_name(trace.graph) : parse_graph_spec(c.spec);
  const Graph g = build_graph(spec);
  const ReplayReport rep = verify_trace(trace, g);
  std::cout << (rep.ok ? "ok: " : "mismatch: ") << to_string(rep.recomputed)
            << (rep.message.empty() ? "" : " (" + rep.message + ")") << '\n';
  return rep.ok ? kOk : kStrategyFailure;
}

int run_bounds(const Common& c) {
  const GraphSpec spec = parse_graph_spec(c.spec);
  const Graph g = build_graph(spec);
  const BoundReport b = lower_bounds(g);
  const int lb = std::max(b.aigner_fromme_lb, b.frankl_lb);
  if (c.format == "json") {
    ordered_json j;
    j["graph"] = g.name();
    j["min_degree"] = b.min_degree;
    j["girth"] = b.girth == kInfinity ? ordered_json(nullptr) : ordered_json(b.girth);
    j["aigner_fromme_lb"] = b.aigner_fromme_lb;
    j["frankl_lb"] = b.frankl_lb;
    j["frankl_t"] = b.frankl_t;
    j["lower_bound"] = lb;
    j["upper_bound"] = b.upper_bound ? ordered_json(*b.upper_bound) : ordered_json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << g.name() << '\n'
              << "  min degree        " << b.min_degree << '\n'
              << "  girth             " << (b.girth == kInfinity ? std::string("inf") : std::to_string(b.girth))
              << '\n'
              << "  Aigner-Fromme lb  " << b.aigner_fromme_lb << '\n'
              << "  Frankl lb         " << b.frankl_lb << " (t=" << b.frankl_t << ")\n"
              << "  lower bound       " << lb << '\n'
              << "  upper bound       " << (b.upper_bound ? std::to_string(*b.upper_bound) : std::string("-"))
              << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers on generalized Petersen graphs and I-graphs"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) sub->add_option("spec", common.spec, "gp N K | igraph N J K | edge-list file")->required();
    sub->add_option("--cmax", common.cmax, "Largest cop count tried")->check(CLI::Range(1, 16));
    sub->add_option("--budget-states", common.budget, "Maximum solver states per cop count");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_flag("--exact-witness", common.exact_witness, "Full solves so witnesses have the smallest rank");
  };

  auto* copnumber = app.add_subcommand("copnumber", "Cop number of one graph");
  add_common(copnumber, true);

  auto* table = app.add_subcommand("table", "Cop numbers of every GP(n,k) in a range of n");
  add_common(table, false);
  int n_min = 5;
  int n_max = 5;
  int jobs = 1;
  std::string filter = "all";
  std::string out_path;
  table->add_option("--n-min", n_min)->required();
  table->add_option("--n-max", n_max)->required();
  table->add_option("--filter", filter, "all | copnum=C");
  table->add_option("--jobs", jobs, "Rows solved in parallel")->check(CLI::PositiveNumber);
  table->add_option("--out", out_path, "CSV path (no timing column); stats go to PATH.stats.json");

  auto* sim = app.add_subcommand("simulate", "Play a cop strategy against a robber policy");
  std::string strategy;
  sim->add_option("strategy", strategy, "weak2 | forceright | four | gpn3 | igraph5 | guard")
      ->required()
      ->check(CLI::IsMember({"weak2", "forceright", "four", "gpn3", "igraph5", "guard"}));
  add_common(sim, true);
  std::string robber = "greedy";
  std::uint64_t seed = 0;
  std::optional<int> max_turns;
  std::string trace_out;
  std::string tree_arg;
  int start = 0;
  int window_scale = 1;
  sim->add_option("--robber", robber, "optimal | greedy | random[:SEED] | scripted:V0,V1,...");
  sim->add_option("--seed", seed, "Seed for the random robber");
  sim->add_option("--max-turns", max_turns, "Cop turn budget (default 50n)")->check(CLI::NonNegativeNumber);
  sim->add_option("--trace-out", trace_out, "Write the JSON trace here");
  sim->add_option("--tree", tree_arg, "guard: comma-separated tree vertices");
  sim->add_option("--start", start, "guard: starting vertex");
  sim->add_option("--window-scale", window_scale, "weak2/forceright: window half-width multiplier")
      ->check(CLI::PositiveNumber);

  auto* replay = app.add_subcommand("replay", "Check a trace against its graph");
  std::string trace_path;
  replay->add_option("trace", trace_path, "Trace JSON")->required();
  replay->add_option("spec", common.spec, "Graph to check against (default: the graph named in the trace)");
  add_common(replay, false);

  auto* bounds = app.add_subcommand("bounds", "Degree/girth lower bounds and family upper bound");
  add_common(bounds, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*copnumber) return run_copnumber(common);
    if (*table) return run_table(common, n_min, n_max, filter, jobs, out_path);
    if (*sim) {
      return run_simulate(common, strategy, robber, seed, max_turns, trace_out, tree_arg, start, window_scale);
    }
    if (*replay) return run_replay(common, trace_path);
    if (*bounds) return run_bounds(common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const IllegalMove& e) {
    std::cerr << "illegal move: " << e.what() << '\n';
    return kStrategyFailure;
  } catch (const WindowExhausted& e) {
    std::cerr << "window exhausted: " << e.what() << '\n';
    return kStrategyFailure;
  }
  return kUsage;
}
