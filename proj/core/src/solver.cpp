#include "gpcops/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include <nlohmann/json.hpp>

#include "gpcops/errors.hpp"

namespace gpcops {

MultisetRanker::MultisetRanker(int universe, int size) : universe_(universe), size_(size) {
  if (universe < 1 || size < 1) throw PreconditionError("multiset ranker needs universe, size >= 1");
  const int rows = universe + size;
  binom_.assign(static_cast<std::size_t>(rows) * (size + 1), 0);
  for (int m = 0; m < rows; ++m) {
    binom_[m * (size + 1)] = 1;
    for (int t = 1; t <= size && t <= m; ++t) {
      binom_[m * (size + 1) + t] = binom_[(m - 1) * (size + 1) + t - 1] +
                                   (t <= m - 1 ? binom_[(m - 1) * (size + 1) + t] : 0);
    }
  }
  count_ = binom_[(universe + size - 1) * (size + 1) + size];
}

void MultisetRanker::unrank(std::uint64_t rank, std::span<Vertex> out) const {
  // Greedy colex decoding: the largest q_t with C(q_t, t+1) <= remaining rank.
  int m = universe_ + size_ - 2;
  for (int t = size_ - 1; t >= 0; --t) {
    while (binom_[m * (size_ + 1) + t + 1] > rank) --m;
    rank -= binom_[m * (size_ + 1) + t + 1];
    out[t] = m - t;
    --m;
  }
}

std::string SolveStats::to_json() const {
  nlohmann::ordered_json j;
  j["states"] = states;
  j["iterations"] = iterations;
  j["edges_relaxed"] = edges_relaxed;
  j["wall_ms"] = wall_ms;
  j["peak_bytes"] = peak_bytes;
  return j.dump();
}

std::uint64_t SolveTable::rank(const GameState& s) const {
  if (static_cast<int>(s.cops.size()) != cops() || !graph_->contains(s.robber)) {
    throw PreconditionError("state does not match table");
  }
  std::vector<Vertex> cops = s.cops;
  std::sort(cops.begin(), cops.end());
  const auto block = static_cast<std::uint64_t>(s.to_move) * graph_->size() + s.robber;
  return block * ranker_.count() + ranker_.rank(cops);
}

GameState SolveTable::unrank(std::uint64_t rank) const {
  GameState s;
  const auto n = static_cast<std::uint64_t>(graph_->size());
  s.cops.resize(cops());
  ranker_.unrank(rank % ranker_.count(), s.cops);
  const std::uint64_t block = rank / ranker_.count();
  s.robber = static_cast<Vertex>(block % n);
  s.to_move = block >= n ? Side::kRobber : Side::kCop;
  return s;
}

std::uint16_t SolveTable::distance(const GameState& s) const {
  std::vector<Vertex> cops = s.cops;
  std::sort(cops.begin(), cops.end());
  return distance(ranker_.rank(cops), s.robber, s.to_move);
}

bool SolveTable::robber_on_cop(std::uint64_t cop_rank, Vertex robber) const {
  std::array<Vertex, 16> buf{};
  std::span<Vertex> cops_span(buf.data(), cops());
  ranker_.unrank(cop_rank, cops_span);
  return std::find(cops_span.begin(), cops_span.end(), robber) != cops_span.end();
}

namespace {

constexpr int kMaxCops = 16;
constexpr std::uint8_t kCounterOverflow = 0xFF;

// Closed neighborhoods as flat arrays, vertex first.
struct ClosedNeighborhoods {
  explicit ClosedNeighborhoods(const Graph& g) : offsets(g.size() + 1, 0) {
    for (Vertex v = 0; v < g.size(); ++v) {
      targets.push_back(v);
      for (Vertex u : g.neighbors(v)) targets.push_back(u);
      offsets[v + 1] = static_cast<int>(targets.size());
    }
  }
  std::span<const Vertex> operator()(Vertex v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  std::vector<int> offsets;
  std::vector<Vertex> targets;
};

// terms[i * n + v]: contribution of v at sorted position i to the rank.
std::vector<std::uint64_t> rank_terms(const MultisetRanker& ranker) {
  const int n = ranker.universe();
  std::vector<std::uint64_t> terms(static_cast<std::size_t>(ranker.size()) * n);
  for (int i = 0; i < ranker.size(); ++i) {
    for (Vertex v = 0; v < n; ++v) terms[i * n + v] = ranker.term(i, v);
  }
  return terms;
}

// Calls fn(rank, sorted_cops) for every joint move out of `cops`, duplicates
// included. C == 0 selects the runtime count `c`.
template <int C, typename Fn>
inline void for_each_joint_move(const ClosedNeighborhoods& closed, const std::uint64_t* terms,
                                int n, const Vertex* cops, int runtime_c, Fn&& fn) {
  const int c = C ? C : runtime_c;
  std::array<int, kMaxCops> choice{};
  std::array<Vertex, kMaxCops> tuple{};
  std::array<Vertex, kMaxCops> sorted{};
  std::array<const Vertex*, kMaxCops> base{};
  std::array<int, kMaxCops> len{};
  for (int i = 0; i < c; ++i) {
    auto nb = closed(cops[i]);
    base[i] = nb.data();
    len[i] = static_cast<int>(nb.size());
    tuple[i] = base[i][0];
  }
  while (true) {
    for (int i = 0; i < c; ++i) sorted[i] = tuple[i];
    for (int i = 1; i < c; ++i) {
      Vertex x = sorted[i];
      int j = i - 1;
      while (j >= 0 && sorted[j] > x) {
        sorted[j + 1] = sorted[j];
        --j;
      }
      sorted[j + 1] = x;
    }
    std::uint64_t rank = 0;
    for (int i = 0; i < c; ++i) rank += terms[i * n + sorted[i]];
    fn(rank, sorted.data());
    int i = c - 1;
    while (i >= 0) {
      if (++choice[i] < len[i]) {
        tuple[i] = base[i][choice[i]];
        break;
      }
      choice[i] = 0;
      tuple[i] = base[i][0];
      --i;
    }
    if (i < 0) return;
  }
}

inline bool holds(const Vertex* cops, int c, Vertex v) {
  for (int i = 0; i < c; ++i) {
    if (cops[i] == v) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Vertex>> joint_cop_moves(const Graph& g, std::span<const Vertex> cops) {
  if (cops.empty() || cops.size() > kMaxCops) throw PreconditionError("bad cop count");
  std::vector<Vertex> sorted_cops(cops.begin(), cops.end());
  std::sort(sorted_cops.begin(), sorted_cops.end());
  ClosedNeighborhoods closed(g);
  const int c = static_cast<int>(cops.size());
  const auto terms = rank_terms(MultisetRanker(g.size(), c));
  std::set<std::vector<Vertex>> out;
  for_each_joint_move<0>(closed, terms.data(), g.size(), sorted_cops.data(), c,
                         [&](std::uint64_t, const Vertex* q) { out.emplace(q, q + c); });
  return {out.begin(), out.end()};
}

namespace {

struct SolveContext {
  int n;
  int c;
  std::uint64_t placements_count;
  const ClosedNeighborhoods& closed;
  const std::uint64_t* terms;
  const std::vector<Vertex>& placements;  // every cop multiset, rank order
  std::vector<std::uint16_t>& cop_dist;
  std::vector<std::uint16_t>& robber_dist;
  bool stop_at_first_win;
};

struct LayerResult {
  std::uint64_t layers = 0;
  std::uint64_t relaxed = 0;
  std::uint64_t peak_layer = 0;
  bool stopped_early = false;
};

// Layered retrograde propagation. Cop layer d holds cop-to-move states at
// capture distance d; robber layer d the robber-to-move states at distance d.
template <int C>
LayerResult propagate(SolveContext& ctx) {
  const int n = ctx.n;
  const int c = C ? C : ctx.c;
  const auto& closed = ctx.closed;
  auto& cop_dist = ctx.cop_dist;
  auto& robber_dist = ctx.robber_dist;
  const std::uint64_t m = ctx.placements_count;
  const std::uint64_t per_side = m * static_cast<std::uint64_t>(n);
  constexpr std::uint16_t kSafe = SolveTable::kRobberSafe;

  std::vector<std::uint8_t> counter(per_side, 0);
  // Robber positions still uncaptured-and-unwon per placement, for early stop.
  std::vector<std::uint16_t> open_robbers;
  if (ctx.stop_at_first_win) open_robbers.assign(m, 0);

  std::vector<std::uint64_t> cop_layer;
  std::vector<std::uint64_t> robber_layer;
  LayerResult out;

  for (Vertex r = 0; r < n; ++r) {
    for (std::uint64_t pr = 0; pr < m; ++pr) {
      const Vertex* cops = &ctx.placements[pr * c];
      const std::uint64_t idx = r * m + pr;
      if (holds(cops, c, r)) {
        cop_dist[idx] = 0;
        robber_dist[idx] = 0;
        continue;
      }
      if (ctx.stop_at_first_win) ++open_robbers[pr];
      int free_moves = 0;
      bool adjacent = false;
      for (Vertex v : closed(r)) {
        if (holds(cops, c, v)) {
          adjacent = true;
        } else {
          ++free_moves;
        }
      }
      // Passing keeps r free, so free_moves >= 1.
      counter[idx] = free_moves >= kCounterOverflow ? kCounterOverflow
                                                     : static_cast<std::uint8_t>(free_moves);
      if (adjacent) {
        cop_dist[idx] = 1;
        cop_layer.push_back(idx);
      }
    }
  }

  bool found_win = false;
  for (std::uint16_t d = 1; !cop_layer.empty(); ++d) {
    if (d == kSafe - 1) throw PreconditionError("capture distance overflow");
    ++out.layers;
    out.peak_layer = std::max<std::uint64_t>(out.peak_layer, cop_layer.size());
    robber_layer.clear();
    for (std::uint64_t idx : cop_layer) {
      const std::uint64_t pr = idx % m;
      const Vertex target = static_cast<Vertex>(idx / m);
      const Vertex* cops = &ctx.placements[pr * c];
      for (Vertex r : closed(target)) {
        if (holds(cops, c, r)) continue;
        const std::uint64_t ridx = r * m + pr;
        if (robber_dist[ridx] != kSafe) continue;
        ++out.relaxed;
        bool won = false;
        if (counter[ridx] == kCounterOverflow) {
          won = std::all_of(closed(r).begin(), closed(r).end(), [&](Vertex v) {
            return holds(cops, c, v) || cop_dist[v * m + pr] != kSafe;
          });
        } else {
          won = --counter[ridx] == 0;
        }
        if (won) {
          robber_dist[ridx] = d;
          robber_layer.push_back(ridx);
          if (ctx.stop_at_first_win && --open_robbers[pr] == 0) found_win = true;
        }
      }
    }
    cop_layer.clear();
    out.peak_layer = std::max<std::uint64_t>(out.peak_layer, robber_layer.size());
    if (found_win) {
      out.stopped_early = true;
      break;
    }
    // Rank order keeps successive joint-move scans inside one robber block.
    std::sort(robber_layer.begin(), robber_layer.end());
    const auto next = static_cast<std::uint16_t>(d + 1);
    for (std::uint64_t idx : robber_layer) {
      const std::uint64_t pr = idx % m;
      const Vertex r = static_cast<Vertex>(idx / m);
      for_each_joint_move<C>(closed, ctx.terms, n, &ctx.placements[pr * c], c,
                             [&](std::uint64_t qr, const Vertex* q) {
                               ++out.relaxed;
                               const std::uint64_t cidx = r * m + qr;
                               if (cop_dist[cidx] != kSafe) return;
                               if (holds(q, c, r)) return;
                               cop_dist[cidx] = next;
                               cop_layer.push_back(cidx);
                             });
    }
  }
  return out;
}

}  // namespace

SolveTable solve(const Graph& g, int c, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (c < 1 || c > kMaxCops) throw PreconditionError("cop count must be in [1, 16]");
  if (!g.connected()) throw PreconditionError("solve requires a connected graph");

  SolveTable table(g, c);
  const int n = g.size();
  const std::uint64_t m = table.ranker_.count();
  const std::uint64_t per_side = m * static_cast<std::uint64_t>(n);
  if (2 * per_side > options.budget_states) {
    throw BudgetExceeded(2 * per_side, options.budget_states);
  }

  const ClosedNeighborhoods closed(g);
  const auto terms = rank_terms(table.ranker_);

  // Successor in rank order: bump the first position that can grow without
  // breaking sortedness and zero everything before it.
  std::vector<Vertex> placements(m * c);
  {
    std::vector<Vertex> p(c, 0);
    for (std::uint64_t r = 0; r < m; ++r) {
      std::copy(p.begin(), p.end(), placements.begin() + r * c);
      int i = 0;
      while (i < c - 1 && p[i] == p[i + 1]) ++i;
      if (i == c - 1 && p[i] == n - 1) break;
      ++p[i];
      std::fill(p.begin(), p.begin() + i, 0);
    }
  }

  table.cop_dist_.assign(per_side, SolveTable::kRobberSafe);
  table.robber_dist_.assign(per_side, SolveTable::kRobberSafe);

  SolveContext ctx{n,           c, m, closed, terms.data(), placements, table.cop_dist_,
                   table.robber_dist_, options.stop_at_first_win};
  LayerResult res;
  switch (c) {
    case 1: res = propagate<1>(ctx); break;
    case 2: res = propagate<2>(ctx); break;
    case 3: res = propagate<3>(ctx); break;
    case 4: res = propagate<4>(ctx); break;
    case 5: res = propagate<5>(ctx); break;
    default: res = propagate<0>(ctx); break;
  }
  table.complete_ = !res.stopped_early;

  auto& st = table.stats_;
  st.states = 2 * per_side;
  st.iterations = res.layers;
  st.edges_relaxed = res.relaxed;
  st.peak_bytes = per_side * (2 * sizeof(std::uint16_t) + 1) + placements.size() * sizeof(Vertex) +
                  2 * res.peak_layer * sizeof(std::uint64_t);
  st.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return table;
}

CopWinResult copwin_from_table(const SolveTable& table) {
  const int n = table.graph().size();
  const std::uint64_t m = table.ranker().count();
  std::vector<char> all_won(m, 1);
  for (Vertex r = 0; r < n; ++r) {
    for (std::uint64_t pr = 0; pr < m; ++pr) {
      if (table.distance(pr, r, Side::kRobber) == SolveTable::kRobberSafe) all_won[pr] = 0;
    }
  }
  auto it = std::find(all_won.begin(), all_won.end(), 1);
  if (it == all_won.end()) return {false, {}};
  std::vector<Vertex> cops(table.cops());
  table.ranker().unrank(static_cast<std::uint64_t>(it - all_won.begin()), cops);
  return {true, cops};
}

namespace {

SolveOptions decision_options(SolveOptions options) {
  if (!options.exact_witness) options.stop_at_first_win = true;
  return options;
}

}  // namespace

CopWinResult is_copwin(const Graph& g, int c, const SolveOptions& options) {
  return copwin_from_table(solve(g, c, decision_options(options)));
}

CopNumberResult cop_number(const Graph& g, int c_max, const SolveOptions& options) {
  if (c_max < 1) throw PreconditionError("c_max must be >= 1");
  CopNumberResult out;
  out.graph = g.name();
  for (int c = 1; c <= c_max; ++c) {
    SolveTable table = solve(g, c, decision_options(options));
    out.total_states += table.stats().states;
    out.total_ms += table.stats().wall_ms;
    out.stats = table.stats();
    auto win = copwin_from_table(table);
    if (win.cop_win) {
      out.cop_number = c;
      out.witness_placement = std::move(win.witness);
      return out;
    }
  }
  out.exceeds_cmax = true;
  return out;
}

std::vector<Vertex> optimal_cop_move(const SolveTable& table, const GameState& s) {
  if (s.to_move != Side::kCop) throw PreconditionError("optimal_cop_move: robber to move");
  if (!table.cop_win(s)) throw PreconditionError("optimal_cop_move: state is robber-safe");
  const Graph& g = table.graph();
  const int c = table.cops();
  std::vector<Vertex> cops = s.cops;
  std::sort(cops.begin(), cops.end());
  ClosedNeighborhoods closed(g);
  const auto terms = rank_terms(table.ranker());
  std::uint16_t best = SolveTable::kRobberSafe;
  std::uint64_t best_rank = 0;
  std::vector<Vertex> best_move;
  for_each_joint_move<0>(closed, terms.data(), g.size(), cops.data(), c, [&](std::uint64_t qr, const Vertex* q) {
    const std::uint16_t d = table.distance(qr, s.robber, Side::kRobber);
    if (d == SolveTable::kRobberSafe) return;
    if (best_move.empty() || d < best || (d == best && qr < best_rank)) {
      best = d;
      best_rank = qr;
      best_move.assign(q, q + c);
    }
  });
  return best_move;
}

Vertex optimal_robber_move(const SolveTable& table, const GameState& s) {
  if (s.to_move != Side::kRobber) throw PreconditionError("optimal_robber_move: cop to move");
  if (std::find(s.cops.begin(), s.cops.end(), s.robber) != s.cops.end()) {
    throw PreconditionError("optimal_robber_move: robber already captured");
  }
  std::vector<Vertex> cops = s.cops;
  std::sort(cops.begin(), cops.end());
  const std::uint64_t pr = table.ranker().rank(cops);
  std::vector<Vertex> options(table.graph().neighbors(s.robber).begin(),
                              table.graph().neighbors(s.robber).end());
  options.push_back(s.robber);
  std::sort(options.begin(), options.end());
  Vertex best = options.front();
  int best_d = -1;
  for (Vertex v : options) {
    const std::uint16_t d = table.distance(pr, v, Side::kCop);
    if (d == SolveTable::kRobberSafe) return v;
    if (static_cast<int>(d) > best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

}  // namespace gpcops
