// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 when
// any criterion fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "audits.hpp"
#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"
#include "harness.hpp"
#include "oracles.hpp"

using namespace gpcops;

namespace {

// Tolerances and budgets.
constexpr double kSmallSolveSeconds = 10.0;       // criterion 1, per graph
constexpr double kThreeCopDecisionSeconds = 900;  // criterion 3, per graph
constexpr int kRandomSeeds = 100;                 // criterion 5
constexpr int kGuardCorpus = 200;                 // criterion 6
constexpr int kGuardMaxVertices = 14;
constexpr int kWeakSeeds = 20;                    // criterion 7
constexpr int kTurnsPerVertex = 50;               // turn budget 50 n

// GP(n,k) with cop number four, n <= 40 (n = 30 has none).
const std::map<int, std::set<int>> kFourCopGraphs = {
    {26, {10}},
    {27, {6}},
    {28, {6, 8}},
    {29, {8, 11, 12}},
    {31, {7, 9, 12, 13}},
    {32, {6, 7, 9, 12}},
    {33, {6, 7, 9, 14}},
    {34, {6, 10, 13, 14}},
    {35, {6, 8, 10, 13, 15}},
    {36, {8, 10, 14, 15}},
    {37, {6, 7, 8, 10, 11, 14, 16}},
    {38, {6, 7, 8, 11, 14, 16}},
    {39, {6, 7, 9, 11, 15, 16, 17}},
    {40, {6, 7, 9, 11, 12, 15}},
};

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<GpParams> gp_range(int n_min, int n_max) {
  std::vector<GpParams> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 1; 2 * k < n; ++k) out.push_back({n, k});
  }
  return out;
}

// Graphs where three cops fail, as computed in criterion 3 and reused by 4.
std::vector<GpParams> g_three_cop_failures;

Verdict criterion1() {
  struct Case {
    GpParams p;
    int expected;
  };
  std::vector<Case> cases = {{{6, 2}, 2}, {{8, 2}, 2}, {{9, 3}, 2}, {{12, 3}, 2}, {{12, 4}, 3}, {{16, 4}, 3}};
  for (int n = 5; n <= 12; ++n) cases.push_back({{n, 1}, 2});
  Verdict v;
  double slowest = 0;
  for (const auto& c : cases) {
    const Graph g = build_gp(c.p);
    const auto t0 = std::chrono::steady_clock::now();
    const CopNumberResult r = cop_number(g, 4);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (r.exceeds_cmax || r.cop_number != c.expected || s >= kSmallSolveSeconds) {
      v.pass = false;
      v.detail += fmt::format("{} gave {} in {:.2f}s (want {}); ", g.name(), r.cop_number, s, c.expected);
    }
  }
  v.detail += fmt::format("{} graphs exact, slowest {:.3f}s (limit {}s)", cases.size(), slowest, kSmallSolveSeconds);
  return v;
}

Verdict criterion2() {
  const Graph g = build_gp({5, 2});
  const CopNumberResult r = cop_number(g, 4);
  const BoundReport b = lower_bounds(g);
  const oracle::NaiveGame two(g, 2);
  const oracle::NaiveGame three(g, 3);
  Verdict v;
  v.pass = !r.exceeds_cmax && r.cop_number == 3 && b.min_degree == 3 && b.girth == 5 && b.aigner_fromme_lb == 3 &&
           !two.cop_win() && three.cop_win();
  v.detail = fmt::format("solver {}, delta {}, girth {}, degree bound {}, naive oracle: 2 cops {}, 3 cops {}",
                         r.cop_number, b.min_degree, b.girth, b.aigner_fromme_lb, two.cop_win() ? "win" : "lose",
                         three.cop_win() ? "win" : "lose");
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto rows = cli::compute_table(26, 32, std::nullopt, 3, {}, 1);
  std::map<int, std::set<int>> got;
  double slowest = 0;
  for (const auto& r : rows) {
    slowest = std::max(slowest, r.millis / 1000.0);
    if (!r.cop_number && !r.exceeds_cmax) {
      v.pass = false;
      v.detail += fmt::format("GP({},{}) hit the state budget; ", r.n, r.k);
      continue;
    }
    if (r.exceeds_cmax) {
      got[r.n].insert(r.k);
      g_three_cop_failures.push_back({r.n, r.k});
    }
  }
  std::map<int, std::set<int>> want;
  for (const auto& [n, ks] : kFourCopGraphs) {
    if (n >= 26 && n <= 32) want[n] = ks;
  }
  if (got != want) {
    v.pass = false;
    for (int n = 26; n <= 32; ++n) {
      if (got[n] != want[n]) {
        v.detail += fmt::format("n={} got {} want {}; ", n, fmt::join(got[n], ","), fmt::join(want[n], ","));
      }
    }
  }
  if (slowest >= kThreeCopDecisionSeconds) v.pass = false;
  std::size_t count = 0;
  for (const auto& [n, ks] : got) count += ks.size();
  v.detail += fmt::format("{} graphs checked, {} need four cops, slowest 3-cop decision {:.2f}s (limit {}s)", rows.size(),
                          count, slowest, kThreeCopDecisionSeconds);
  return v;
}

Verdict criterion4() {
  Verdict v;
  if (g_three_cop_failures.empty()) {
    for (const auto& [n, ks] : kFourCopGraphs) {
      if (n > 32) continue;
      for (int k : ks) g_three_cop_failures.push_back({n, k});
    }
  }
  double total = 0;
  for (const auto& p : g_three_cop_failures) {
    const Graph g = build_gp(p);
    const auto t0 = std::chrono::steady_clock::now();
    const CopWinResult r = is_copwin(g, 4);
    total += seconds_since(t0);
    if (!r.cop_win) {
      v.pass = false;
      v.detail += g.name() + " is not 4-cop-win; ";
    }
  }
  v.detail += fmt::format("4 cops win on all {} graphs ({:.1f}s)", g_three_cop_failures.size(), total);
  return v;
}

Verdict criterion5() {
  Verdict v;
  int sims = 0;
  int failures = 0;
  int longest_optimal = 0;
  std::size_t window_vertices = 0;
  std::vector<std::string> failed;
  auto record = [&](const GameTrace& t, const Controller& c, const GpParams& p) {
    ++sims;
    std::string why;
    if (t.outcome != Outcome::kCapture) why = to_string(t.outcome);
    if (!verify_trace(t, c.graph()).ok) why += " replay";
    const auto proj = audit::projection_sound(t, {p.n, 1, p.k});
    if (!proj.ok) why += " projection:" + proj.message;
    const auto res = audit::residue_steps(t, p.k);
    if (!res.ok) why += " residue:" + res.message;
    if (!why.empty()) {
      ++failures;
      if (failed.size() < 8) failed.push_back(fmt::format("GP({},{}) {} {}", p.n, p.k, t.params["robber"].dump(), why));
    }
  };
  for (const auto& p : gp_range(5, 16)) {
    const Graph g = build_gp(p);
    const SolveTable table = solve(g, 4);
    auto c = four_cop_controller(p);
    const GameTrace t = simulate(*c, RobberPolicy::optimal(), kTurnsPerVertex * p.n, &table);
    record(t, *c, p);
    longest_optimal = std::max(longest_optimal, t.cop_turns);
    // Window of the four-cop controller: half-width (2k+2)n each side.
    const std::size_t wv = 2 * (2 * (2 * p.k + 2) * p.n + 1);
    if (t.cop_turns > static_cast<int>(4 * wv)) {
      ++failures;
      failed.push_back(fmt::format("GP({},{}) optimal took {} turns > 4|V(window)|", p.n, p.k, t.cop_turns));
    }
    window_vertices = std::max(window_vertices, wv);
  }
  for (const auto& p : gp_range(5, 30)) {
    std::vector<RobberPolicy> policies = {RobberPolicy::greedy()};
    for (int s = 0; s < kRandomSeeds; ++s) policies.push_back(RobberPolicy::random(s));
    for (const auto& pol : policies) {
      auto c = four_cop_controller(p);
      record(simulate(*c, pol, kTurnsPerVertex * p.n), *c, p);
    }
  }
  v.pass = failures == 0;
  v.detail = fmt::format("{} simulations, {} failures, longest optimal game {} cop turns", sims, failures,
                         longest_optimal);
  for (const auto& f : failed) v.detail += "; " + f;
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(4, kGuardMaxVertices);
  std::uniform_real_distribution<double> density(0.05, 0.35);
  std::uint64_t states = 0;
  int longest = 0;
  std::size_t tree_total = 0;
  for (int i = 0; i < kGuardCorpus; ++i) {
    const int nv = size(rng);
    const Graph g = oracle::random_connected(rng, nv, density(rng));
    const Vertex root = std::uniform_int_distribution<Vertex>(0, nv - 1)(rng);
    const int max_tree = std::uniform_int_distribution<int>(nv / 2, nv)(rng);
    const auto tree = oracle::grow_isometric_tree(g, root, rng, max_tree);
    const Vertex start = tree[std::uniform_int_distribution<std::size_t>(0, tree.size() - 1)(rng)];
    tree_total += tree.size();
    const auto a = audit::exhaustive_guard(g, tree, start);
    states += a.states;
    longest = std::max(longest, a.longest_establishment);
    if (!a.ok) {
      v.pass = false;
      v.detail += fmt::format("graph {}: {}; ", i, a.message);
    }
  }
  v.detail += fmt::format("{} graphs, mean tree size {:.1f}, {} game states explored, longest establishment {} moves",
                          kGuardCorpus, static_cast<double>(tree_total) / kGuardCorpus, states, longest);
  return v;
}

Verdict criterion7() {
  Verdict v;
  int sims = 0;
  int pushed = 0;
  int captured = 0;
  int reproduced = 0;
  int max_chase = 0;
  std::vector<std::string> failed;
  for (int k = 1; k <= 8; ++k) {
    for (int n : {std::max(5, 2 * k + 1), 2 * k + 4}) {
      const GpParams p{n, k};
      const Graph g = build_gp(p);
      const SolveTable table = solve(g, 2);
      std::vector<RobberPolicy> policies = {RobberPolicy::optimal(), RobberPolicy::greedy()};
      for (int s = 0; s < kWeakSeeds; ++s) policies.push_back(RobberPolicy::random(s));
      for (bool right : {false, true}) {
        for (const auto& pol : policies) {
          auto make = [&](int scale) {
            return right ? force_right_controller(p, scale) : weak_cop_controller(p, scale);
          };
          auto c = make(1);
          const GameTrace t = simulate(*c, pol, kTurnsPerVertex * n, &table);
          ++sims;
          const int chase = audit::chase_turns(t);
          max_chase = std::max(max_chase, chase);
          std::string why;
          if (t.outcome == Outcome::kTurnLimit) why = "TURN_LIMIT";
          if (!verify_trace(t, g).ok) why += " replay";
          if (!audit::residue_steps(t, k).ok) why += " residue";
          if (!audit::projection_sound(t, {n, 1, k}).ok) why += " projection";
          if (chase > (k + 1) / 2 + 1) why += fmt::format(" chase {}", chase);
          if (t.outcome == Outcome::kCapture) ++captured;
          if (t.outcome == Outcome::kPushedOut) {
            ++pushed;
            auto wide = make(2);
            const GameTrace t2 = simulate(*wide, pol, 2 * kTurnsPerVertex * n, &table);
            if (t2.outcome == Outcome::kPushedOut) {
              ++reproduced;
            } else {
              why += " doubled window gave " + to_string(t2.outcome);
            }
          }
          if (!why.empty()) {
            v.pass = false;
            if (failed.size() < 8) {
              failed.push_back(fmt::format("{} GP({},{}) {}:{}", c->name(), n, k, pol.describe(), why));
            }
          }
        }
      }
    }
  }
  v.detail = fmt::format("{} simulations: {} captured, {} pushed out ({} reproduced on doubled windows), max chase {} turns",
                         sims, captured, pushed, reproduced, max_chase);
  for (const auto& f : failed) v.detail += "; " + f;
  return v;
}

Verdict criterion8() {
  Verdict v;
  int graphs = 0;
  int max_cop_number = 0;
  int flagged_turns = 0;
  int longest = 0;
  std::vector<std::string> failed;
  for (int n = 5; n <= 14; ++n) {
    for (int j = 1; 2 * j < n; ++j) {
      for (int k = 1; 2 * k < n; ++k) {
        const IGraphParams p{n, j, k};
        if (!is_connected_igraph(p)) continue;
        ++graphs;
        const Graph g = build_igraph(p);
        auto c = igraph_five_cop_controller(p);
        const GameTrace t = simulate(*c, RobberPolicy::greedy(), kTurnsPerVertex * n);
        longest = std::max(longest, t.cop_turns);
        for (const auto& turn : t.turns) {
          flagged_turns += std::count(turn.note.flags.begin(), turn.note.flags.end(), "no_reducing_lead");
        }
        const CopNumberResult cn = cop_number(g, 5);
        if (!cn.exceeds_cmax) max_cop_number = std::max(max_cop_number, cn.cop_number);
        std::string why;
        if (t.outcome != Outcome::kCapture) why = to_string(t.outcome);
        if (!verify_trace(t, g).ok) why += " replay";
        if (!audit::projection_sound(t, p).ok) why += " projection";
        if (cn.exceeds_cmax) why += " cop number above 5";
        if (!why.empty()) {
          v.pass = false;
          if (failed.size() < 8) failed.push_back(fmt::format("I({},{},{}) {}", n, j, k, why));
        }
      }
    }
  }
  v.detail = fmt::format("{} connected I-graphs, max cop number {}, longest capture {} cop turns, {} no_reducing_lead turns",
                         graphs, max_cop_number, longest, flagged_turns);
  for (const auto& f : failed) v.detail += "; " + f;
  return v;
}

Verdict criterion9() {
  Verdict v;
  int girth_cases = 0;
  for (int n = 5; n <= 60; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      ++girth_cases;
      const bool criterion = k != 1 && n != 3 * k && n != 4 * k;
      const int gg = oracle::girth(build_gp({n, k}));
      if ((gg >= 5) != criterion || girth(build_gp({n, k})) != gg) {
        v.pass = false;
        v.detail += fmt::format("girth GP({},{}); ", n, k);
      }
    }
  }
  int conn_cases = 0;
  for (int n = 5; n <= 30; ++n) {
    for (int j = 1; 2 * j < n; ++j) {
      for (int k = 1; 2 * k < n; ++k) {
        ++conn_cases;
        const bool connected = oracle::components(build_igraph({n, j, k})) == 1;
        if (is_connected_igraph({n, j, k}) != connected || connected != (std::gcd(n, std::gcd(j, k)) == 1)) {
          v.pass = false;
          v.detail += fmt::format("connectivity I({},{},{}); ", n, j, k);
        }
      }
    }
  }
  int mono_cases = 0;
  for (const auto& p : gp_range(5, 12)) {
    const Graph g = build_gp(p);
    bool won = false;
    for (int c = 1; c <= 4; ++c) {
      ++mono_cases;
      const bool w = is_copwin(g, c).cop_win;
      if (won && !w) {
        v.pass = false;
        v.detail += fmt::format("monotonicity {} c={}; ", g.name(), c);
      }
      won |= w;
    }
  }
  v.detail += fmt::format("girth iff criterion on {} GP graphs (n <= 60), gcd connectivity on {} I-graphs (n <= 30), "
                          "monotonicity on {} (graph, c) pairs (n <= 12)",
                          girth_cases, conn_cases, mono_cases);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all &= v.pass;
    std::printf("[%s] criterion %d: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
