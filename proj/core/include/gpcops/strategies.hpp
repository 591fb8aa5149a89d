#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpcops/cover.hpp"
#include "gpcops/game.hpp"
#include "gpcops/graph.hpp"

namespace gpcops {

enum class PushPhase { kCongruenceChase, kParityMatch, kPush };
std::string to_string(PushPhase p);

// Two squads on GP(inf,k) that drive the robber lift in one direction.
//
// Both leads start on a_start and walk the A rim in opposite directions until
// one is congruent to the robber mod k; that one (C1) then copies the robber's
// rim and residue every turn. Once the rims match, C1 is moved to the squad
// member on the pushing side and the other lead (C2) walks the A rim toward
// the robber one step per turn, waiting when it sits at the robber's index.
class PushPair {
 public:
  // `orientation` fixes the push direction. Without it the direction is taken
  // from C1's side when the rims first match, unless `defer` is set, in which
  // case C2 waits until commit().
  PushPair(int k, long start_index, std::optional<Orientation> orientation, bool defer = false);

  void commit(Orientation o);
  bool committed() const { return orientation_.has_value(); }
  std::optional<Orientation> orientation() const { return orientation_; }
  PushPhase phase() const { return phase_; }
  // Slot 0 walked up during the chase, slot 1 down. Slots keep their identity.
  const std::array<CoverVertex, 2>& leads() const { return leads_; }
  int c1_slot() const { return c1_; }  // -1 before congruence
  int chase_turns() const { return chase_turns_; }
  // True when the last respond() found no residue-preserving move for C1.
  bool congruence_lost() const { return lost_; }

  // One cop turn against the robber lift. Throws WindowExhausted.
  void respond(const CoverWindow& w, const CoverVertex& robber);

 private:
  bool congruent(int slot, const CoverVertex& robber) const;
  void orient_leads(const CoverWindow& w, const CoverVertex& robber);

  int k_;
  std::optional<Orientation> orientation_;
  bool defer_;
  PushPhase phase_ = PushPhase::kCongruenceChase;
  std::array<CoverVertex, 2> leads_;
  int c1_ = -1;
  int chase_turns_ = 0;
  bool lost_ = false;
};

// Move of a lead that keeps it on the robber's rim and congruent to the robber
// mod `modulus`: the robber itself when adjacent, else the candidate nearest
// the robber's index (ties to the smaller index). Empty when no move keeps the
// congruence.
std::optional<CoverVertex> mirror_move(const CoverWindow& w, const CoverVertex& lead,
                                       const CoverVertex& robber, int modulus);

struct GuardStatus {
  Vertex cop = 0;
  bool gc_holds = false;
  bool established = false;
  // Tree vertices closer to the robber (in the graph) than to the cop (in the tree).
  std::vector<Vertex> deficient_set;
  // Component of T - {cop} that held the violators when the cop chose its
  // move; empty on a pass.
  std::vector<Vertex> component;
};

// One cop guarding a finite isometric subtree. Before (GC) first holds the
// cop walks into the component of the violators (establishment); afterwards
// the same rule restores (GC) after every robber move.
class TreeGuard {
 public:
  // Throws PreconditionError unless `tree` is an isometric tree of g that
  // contains `start`.
  TreeGuard(const Graph& g, Subgraph tree, Vertex start);

  const Graph& graph() const { return *g_; }
  const Subgraph& tree() const { return tree_; }
  Vertex position() const { return cop_; }
  bool established() const { return established_; }

  // Puts the cop on a tree vertex with the given phase, for exhaustive audits.
  void reset(Vertex cop, bool established);

  GuardStatus status(Vertex robber) const;
  GuardStatus status(std::span<const int> robber_dist) const;
  // Moves the cop; returns the status after the move with the robber in place.
  GuardStatus respond(Vertex robber);
  GuardStatus respond(std::span<const int> robber_dist);

 private:
  int tree_pos(Vertex v) const { return pos_[v]; }
  int tree_dist(int a, int b) const { return tdist_[a * tree_.vertices.size() + b]; }
  std::vector<Vertex> violators(std::span<const int> robber_dist) const;

  const Graph* g_;
  Subgraph tree_;
  std::vector<int> pos_;    // vertex -> position in tree_.vertices or -1
  std::vector<int> tdist_;  // tree distances
  Vertex cop_;
  bool established_ = false;
};

// Two squads on a finite window of GP(inf,k) projected to GP(n,k). Reports
// PUSHED_OUT when the tracked robber lift passes push_high() (or push_low()
// for the two-sided variant). `window_scale` multiplies the half-width.
std::unique_ptr<Controller> weak_cop_controller(GpParams base, int window_scale = 1);
// Same squads, always pushing toward higher indices.
std::unique_ptr<Controller> force_right_controller(GpParams base, int window_scale = 1);
// Right-pushing and left-pushing pairs against one robber lift.
std::unique_ptr<Controller> four_cop_controller(GpParams base);
std::unique_ptr<Controller> tree_guard_controller(const Graph& g, Subgraph tree, Vertex start);
// Guard on the lift of {a1,a2,a3,b1,b2,b3} plus a push pair aimed at it.
std::unique_ptr<Controller> gp_n3_controller(int n);
std::unique_ptr<Controller> igraph_five_cop_controller(IGraphParams params);

// Tree guarded by the GP(n,3) strategy: the induced subgraph on a1..a3, b1..b3.
Subgraph gp_n3_tree(const Graph& g, int n);

}  // namespace gpcops
