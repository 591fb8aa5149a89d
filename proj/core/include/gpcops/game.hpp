#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpcops/cover.hpp"
#include "gpcops/graph.hpp"
#include "gpcops/solver.hpp"

namespace gpcops {

enum class Outcome { kCapture, kPushedOut, kTurnLimit };

std::string to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

// What a controller reports about its most recent placement or cop turn.
struct TurnNote {
  std::string phase;
  std::optional<bool> gc;                  // guarding condition, when a guard is active
  std::vector<CoverVertex> lifts;          // lead positions in the cover, one per cop
  std::optional<CoverVertex> robber_lift;  // tracked robber lift
  std::vector<std::string> flags;
};

// A cop strategy on a finite graph. The simulation calls place(), then
// robber_placed(), then alternates respond() and robber_moved().
class Controller {
 public:
  virtual ~Controller() = default;

  virtual std::string name() const = 0;
  virtual const Graph& graph() const = 0;
  virtual int cop_count() const = 0;
  virtual nlohmann::ordered_json params() const;

  virtual std::vector<Vertex> place() = 0;
  // Returns PUSHED_OUT when the tracked robber lift left the window.
  virtual std::optional<Outcome> robber_placed(Vertex robber) = 0;
  // One cop turn; returns the new positions, cop i staying cop i.
  virtual std::vector<Vertex> respond() = 0;
  virtual std::optional<Outcome> robber_moved(Vertex from, Vertex to) = 0;

  virtual TurnNote note() const = 0;
};

struct RobberPolicy {
  enum class Kind { kOptimal, kGreedy, kRandom, kScripted };
  Kind kind = Kind::kGreedy;
  std::uint64_t seed = 0;
  // SCRIPTED: placement first, then one vertex per robber turn; the robber
  // passes once the script runs out.
  std::vector<Vertex> script;

  static RobberPolicy optimal() { return {Kind::kOptimal, 0, {}}; }
  static RobberPolicy greedy() { return {Kind::kGreedy, 0, {}}; }
  static RobberPolicy random(std::uint64_t seed) { return {Kind::kRandom, seed, {}}; }
  static RobberPolicy scripted(std::vector<Vertex> moves) {
    return {Kind::kScripted, 0, std::move(moves)};
  }
  // "optimal", "greedy", "random", "random:SEED", "scripted:v0,v1,...".
  // Throws ParseError.
  static RobberPolicy parse(const std::string& text, std::uint64_t default_seed = 0);
  std::string describe() const;
};

struct TurnRecord {
  enum class Actor { kCop, kRobber };
  Actor actor = Actor::kCop;
  std::vector<Vertex> moves;  // new positions (one per cop, or the robber's)
  TurnNote note;
};

struct GameTrace {
  std::string graph;
  std::string strategy;
  nlohmann::ordered_json params;
  std::vector<Vertex> cop_placement;
  Vertex robber_placement = 0;
  TurnNote placement_note;
  std::vector<TurnRecord> turns;
  Outcome outcome = Outcome::kTurnLimit;
  int cop_turns = 0;

  nlohmann::ordered_json to_json() const;
  static GameTrace from_json(const nlohmann::ordered_json& j);
};

// Greedy robber choice: maximizes the distance to the nearest cop over the
// closed neighborhood, ties to the smallest id.
Vertex greedy_robber_move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber);
Vertex greedy_robber_placement(const Graph& g, const std::vector<Vertex>& cops);

// Plays cops first, alternating, for at most max_turns cop turns. OPTIMAL needs
// a complete table for the controller's graph and cop count; when `table` is
// null one is solved with `options`. Throws IllegalMove on an illegal move from
// either side.
GameTrace simulate(Controller& controller, const RobberPolicy& policy, int max_turns,
                   const SolveTable* table = nullptr, const SolveOptions& options = {});

struct ReplayReport {
  bool ok = false;
  Outcome recomputed = Outcome::kTurnLimit;
  std::string message;
};

// Checks move legality on g and recomputes the outcome. PUSHED_OUT cannot be
// recomputed without the window and is accepted when the trace ends on a
// robber turn with no capture.
ReplayReport verify_trace(const GameTrace& trace, const Graph& g);

}  // namespace gpcops
