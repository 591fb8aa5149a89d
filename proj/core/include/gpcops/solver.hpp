#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpcops/graph.hpp"

namespace gpcops {

enum class Side : std::uint8_t { kCop = 0, kRobber = 1 };

// Ranks sorted multisets of `size` elements drawn from [0, universe) onto
// [0, C(universe + size - 1, size)). Sorted p_0 <= ... <= p_{c-1} maps to the
// strictly increasing q_i = p_i + i, ranked colexicographically.
class MultisetRanker {
 public:
  MultisetRanker(int universe, int size);

  std::uint64_t count() const { return count_; }
  int universe() const { return universe_; }
  int size() const { return size_; }

  // `sorted` must be ascending.
  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (int i = 0; i < size_; ++i) r += term(i, sorted[i]);
    return r;
  }
  // C(v + position, position + 1)
  std::uint64_t term(int position, Vertex v) const {
    return binom_[(v + position) * (size_ + 1) + position + 1];
  }
  void unrank(std::uint64_t rank, std::span<Vertex> out) const;

 private:
  int universe_;
  int size_;
  std::uint64_t count_;
  std::vector<std::uint64_t> binom_;  // binom_[m*(size+1)+t] = C(m, t)
};

struct GameState {
  std::vector<Vertex> cops;  // ascending
  Vertex robber = 0;
  Side to_move = Side::kCop;
  friend bool operator==(const GameState&, const GameState&) = default;
};

struct SolveOptions {
  // Upper bound on stored states (both sides); exceeding it throws BudgetExceeded.
  std::uint64_t budget_states = 400'000'000ULL;
  // Stop as soon as some placement is known to win. The table is then
  // partial: every label it reports as cop-win is exact, the rest are unknown.
  bool stop_at_first_win = false;
  // is_copwin/cop_number stop early unless this is set; the witness is then
  // the smallest-rank winning placement overall rather than the smallest among
  // those resolved when the search stopped.
  bool exact_witness = false;
};

struct SolveStats {
  std::uint64_t states = 0;
  std::uint64_t iterations = 0;  // number of retrograde layers
  std::uint64_t edges_relaxed = 0;
  double wall_ms = 0.0;
  std::uint64_t peak_bytes = 0;

  // Single-line JSON record.
  std::string to_json() const;
};

// Result of retrograde analysis for a fixed cop count. Labels are stored
// robber-major (robber * placements + cop_rank) so that a joint cop move stays
// inside one robber block. Distances count cop
// moves to capture under optimal play; a state with the robber on a cop has
// distance 0.
class SolveTable {
 public:
  static constexpr std::uint16_t kRobberSafe = 0xFFFF;

  const Graph& graph() const { return *graph_; }
  int cops() const { return ranker_.size(); }
  const MultisetRanker& ranker() const { return ranker_; }
  const SolveStats& stats() const { return stats_; }
  // False when solving stopped early; robber-safe labels are then unknowns.
  bool complete() const { return complete_; }
  std::uint64_t state_count() const { return 2 * ranker_.count() * graph_->size(); }

  std::uint64_t rank(const GameState& s) const;
  GameState unrank(std::uint64_t rank) const;

  bool cop_win(const GameState& s) const { return distance(s) != kRobberSafe; }
  // kRobberSafe for robber-safe states; 0 when the robber shares a vertex with a cop.
  std::uint16_t distance(const GameState& s) const;
  std::uint16_t distance(std::uint64_t cop_rank, Vertex robber, Side side) const {
    const auto idx = static_cast<std::uint64_t>(robber) * ranker_.count() + cop_rank;
    return side == Side::kCop ? cop_dist_[idx] : robber_dist_[idx];
  }
  bool robber_on_cop(std::uint64_t cop_rank, Vertex robber) const;

 private:
  friend SolveTable solve(const Graph&, int, const SolveOptions&);

  SolveTable(const Graph& g, int c) : graph_(&g), ranker_(g.size(), c) {}

  const Graph* graph_;
  MultisetRanker ranker_;
  std::vector<std::uint16_t> cop_dist_;
  std::vector<std::uint16_t> robber_dist_;
  SolveStats stats_;
  bool complete_ = true;
};

// Retrograde analysis over the full state space. The graph must outlive the
// table. Throws PreconditionError on disconnected input or c < 1,
// BudgetExceeded when the state count is above the budget.
SolveTable solve(const Graph& g, int c, const SolveOptions& options = {});

// Cop multisets reachable by one joint cop move (each cop steps or passes),
// sorted and deduplicated.
std::vector<std::vector<Vertex>> joint_cop_moves(const Graph& g, std::span<const Vertex> cops);

struct CopWinResult {
  bool cop_win = false;
  std::vector<Vertex> witness;  // smallest-rank winning placement
};

// Cops place, the robber places, then play alternates. A placement wins iff
// every robber placement is captured at once or leads to a cop-win state.
CopWinResult copwin_from_table(const SolveTable& table);
CopWinResult is_copwin(const Graph& g, int c, const SolveOptions& options = {});

struct CopNumberResult {
  std::string graph;
  int cop_number = 0;  // 0 when no c <= c_max wins
  bool exceeds_cmax = false;
  std::vector<Vertex> witness_placement;
  SolveStats stats;  // of the deciding solve
  std::uint64_t total_states = 0;
  double total_ms = 0.0;
};

CopNumberResult cop_number(const Graph& g, int c_max, const SolveOptions& options = {});

// Cop reply minimizing the successor's capture distance, ties to smallest
// rank. Requires a cop-win, cop-to-move state.
std::vector<Vertex> optimal_cop_move(const SolveTable& table, const GameState& s);
// Prefers a robber-safe successor (smallest id), else the one with the
// largest capture distance. Requires robber to move and not captured.
Vertex optimal_robber_move(const SolveTable& table, const GameState& s);

}  // namespace gpcops
