#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"

namespace gpcops::cli {

namespace {

std::vector<std::string> split_tokens(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::istringstream in(r);
    std::string tok;
    while (in >> tok) out.push_back(tok);
  }
  return out;
}

int parse_int_token(const std::vector<std::string>& toks, std::size_t pos) {
  const std::string& t = toks[pos];
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) {
    throw ParseError(fmt::format("graph spec token {}: expected an integer, got '{}'", pos + 1, t));
  }
  return v;
}

}  // namespace

std::string GraphSpec::describe() const {
  switch (kind) {
    case Kind::kGp: return fmt::format("gp {} {}", params.n, params.k);
    case Kind::kIGraph: return fmt::format("igraph {} {} {}", params.n, params.j, params.k);
    case Kind::kFile: return path;
  }
  return "?";
}

GraphSpec parse_graph_spec(const std::vector<std::string>& raw) {
  const auto toks = split_tokens(raw);
  if (toks.empty()) throw ParseError("graph spec is empty");
  GraphSpec spec;
  if (toks[0] == "gp" || toks[0] == "igraph") {
    const bool gp = toks[0] == "gp";
    const std::size_t want = gp ? 3 : 4;
    if (toks.size() != want) {
      throw ParseError(fmt::format("graph spec '{}' takes {} integers, got {}", toks[0], want - 1,
                                   toks.size() - 1));
    }
    spec.kind = gp ? GraphSpec::Kind::kGp : GraphSpec::Kind::kIGraph;
    spec.params.n = parse_int_token(toks, 1);
    spec.params.j = gp ? 1 : parse_int_token(toks, 2);
    spec.params.k = parse_int_token(toks, gp ? 2 : 3);
    return spec;
  }
  if (toks.size() != 1) {
    throw ParseError(fmt::format("graph spec token 1: unknown family '{}'", toks[0]));
  }
  spec.kind = GraphSpec::Kind::kFile;
  spec.path = toks[0];
  return spec;
}

GraphSpec spec_from_graph_name(const std::string& name) {
  const bool gp = name.rfind("GP(", 0) == 0;
  const bool ig = name.rfind("I(", 0) == 0;
  if ((!gp && !ig) || name.back() != ')') {
    throw ParseError("graph '" + name + "' is not a family graph; pass a graph spec");
  }
  std::string inner = name.substr(gp ? 3 : 2, name.size() - (gp ? 4 : 3));
  std::replace(inner.begin(), inner.end(), ',', ' ');
  return parse_graph_spec({std::string(gp ? "gp " : "igraph ") + inner});
}

Graph build_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::kGp: return build_gp({spec.params.n, spec.params.k});
    case GraphSpec::Kind::kIGraph:
      validate(spec.params);
      if (!is_connected_igraph(spec.params)) {
        throw PreconditionError(fmt::format("I({},{},{}) is disconnected: gcd(n,j,k) > 1", spec.params.n,
                                            spec.params.j, spec.params.k));
      }
      return build_igraph(spec.params);
    case GraphSpec::Kind::kFile: return read_edge_list_file(spec.path);
  }
  throw ParseError("bad graph spec");
}

TableRow compute_row(int n, int k, int c_max, const SolveOptions& options) {
  TableRow row;
  row.n = n;
  row.k = k;
  const Graph g = build_gp({n, k});
  const BoundReport b = lower_bounds(g);
  row.girth = b.girth;
  row.lower_bound = std::max(b.aigner_fromme_lb, b.frankl_lb);
  try {
    const CopNumberResult r = cop_number(g, c_max, options);
    row.exceeds_cmax = r.exceeds_cmax;
    if (!r.exceeds_cmax) row.cop_number = r.cop_number;
    row.states = r.total_states;
    row.millis = r.total_ms;
    row.stats = r.stats;
  } catch (const BudgetExceeded& e) {
    row.states = e.required_states;
  }
  return row;
}

std::vector<TableRow> compute_table(int n_min, int n_max, std::optional<int> copnum, int c_max,
                                    const SolveOptions& options, int jobs) {
  if (n_min < 5 || n_max < n_min) throw PreconditionError("table range needs 5 <= n_min <= n_max");
  std::vector<std::pair<int, int>> work;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 1; 2 * k < n; ++k) work.emplace_back(n, k);
  }
  std::vector<TableRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      rows[i] = compute_row(work[i].first, work[i].second, c_max, options);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (copnum) {
    std::erase_if(rows, [&](const TableRow& r) { return r.cop_number != copnum; });
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows, bool with_millis) {
  out << "n,k,copnumber,girth,lowerbound,states" << (with_millis ? ",millis" : "") << '\n';
  for (const auto& r : rows) {
    std::string cn = r.cop_number ? std::to_string(*r.cop_number) : (r.exceeds_cmax ? ">cmax" : "budget");
    out << r.n << ',' << r.k << ',' << cn << ',' << r.girth << ',' << r.lower_bound << ',' << r.states;
    if (with_millis) out << ',' << fmt::format("{:.1f}", r.millis);
    out << '\n';
  }
}

nlohmann::ordered_json table_stats_json(const std::vector<TableRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["stats"] = nlohmann::ordered_json::parse(r.stats.to_json());
    j["total_states"] = r.states;
    j["total_ms"] = r.millis;
    arr.push_back(j);
  }
  return arr;
}

bool window_strategy(const std::string& strategy) {
  return strategy == "weak2" || strategy == "forceright";
}

std::unique_ptr<Controller> make_controller(const std::string& strategy, const GraphSpec& spec,
                                            const Graph& g, const std::vector<Vertex>& tree,
                                            Vertex start, int window_scale) {
  const bool gp = spec.kind == GraphSpec::Kind::kGp;
  auto need_gp = [&] {
    if (!gp) throw PreconditionError("strategy '" + strategy + "' needs a 'gp n k' graph");
    return GpParams{spec.params.n, spec.params.k};
  };
  if (strategy == "weak2") return weak_cop_controller(need_gp(), window_scale);
  if (strategy == "forceright") return force_right_controller(need_gp(), window_scale);
  if (strategy == "four") return four_cop_controller(need_gp());
  if (strategy == "gpn3") {
    const GpParams p = need_gp();
    if (p.k != 3) throw PreconditionError("gpn3 needs k = 3");
    return gp_n3_controller(p.n);
  }
  if (strategy == "igraph5") {
    if (spec.kind == GraphSpec::Kind::kFile) throw PreconditionError("igraph5 needs a family graph");
    return igraph_five_cop_controller(spec.params);
  }
  if (strategy == "guard") {
    if (tree.empty()) throw PreconditionError("guard needs --tree");
    return tree_guard_controller(g, induced_subgraph(g, tree), start);
  }
  throw ParseError("unknown strategy '" + strategy + "'");
}

}  // namespace gpcops::cli
