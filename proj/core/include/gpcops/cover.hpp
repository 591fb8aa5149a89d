#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "gpcops/graph.hpp"

namespace gpcops {

// A vertex of the infinite cyclic cover: a_i or b_i for any integer i.
struct CoverVertex {
  Rim rim = Rim::A;
  long index = 0;
  friend bool operator==(const CoverVertex&, const CoverVertex&) = default;
};

std::string to_string(const CoverVertex& v);

// Oriented quotient edge (tail -> head); tail == head is a pass.
struct QuotientMove {
  Vertex tail;
  Vertex head;
};

// Finite truncation [lo, hi] of GP(inf,k) (j == 1) or I(inf,j,k), with the
// projection onto the quotient obtained by reducing indices mod n. Window ids
// are a_i -> i - lo and b_i -> width + i - lo.
class CoverWindow {
 public:
  // Throws PreconditionError unless hi - lo >= 4n.
  CoverWindow(IGraphParams base, long lo, long hi);
  static CoverWindow gp(GpParams base, long lo, long hi) {
    return CoverWindow({base.n, 1, base.k}, lo, hi);
  }
  // Window of half-width (2k+2)n + slack centered on a multiple of n near
  // `center`.
  static CoverWindow centered(IGraphParams base, long center, long slack = 0);

  const IGraphParams& base() const { return base_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  long width() const { return hi_ - lo_ + 1; }
  const Graph& graph() const { return graph_; }
  const Graph& quotient() const { return quotient_; }

  bool contains(const CoverVertex& v) const { return v.index >= lo_ && v.index <= hi_; }
  // Throws WindowExhausted outside the window.
  Vertex id(const CoverVertex& v) const;
  CoverVertex vertex(Vertex id) const;

  Vertex project(const CoverVertex& v) const { return rim_vertex(v.rim, v.index, base_.n); }
  Vertex project(Vertex window_id) const { return project(vertex(window_id)); }

  // Head of the unique lift at `at` of a quotient edge. A pass lifts to a
  // pass. Throws PreconditionError when project(at) != tail or the edge is not
  // a quotient edge, WindowExhausted when the lift leaves the window.
  CoverVertex lift_move(const QuotientMove& move, const CoverVertex& at) const;

  // Cover neighbors (no window truncation): a_i ~ a_{i+-j}, b_i; b_i ~ b_{i+-k}, a_i.
  std::array<CoverVertex, 3> cover_neighbors(const CoverVertex& v) const;

  // Indices past which a robber counts as pushed out of the window.
  long push_high() const { return lo_ + (hi_ - lo_) * 3 / 4; }
  long push_low() const { return lo_ + (hi_ - lo_) / 4; }

 private:
  IGraphParams base_;
  long lo_;
  long hi_;
  Graph graph_;
  Graph quotient_;
};

// A squad is stored as its lead only; members sit at lead_index + q n.
struct SquadState {
  long lead_index = 0;
  Rim rim = Rim::A;
  int squad_id = 0;
  CoverVertex lead() const { return {rim, lead_index}; }
  friend bool operator==(const SquadState&, const SquadState&) = default;
};

enum class Orientation : std::int8_t { kRight = 1, kLeft = -1 };

// Moves the lead to another squad member by a multiple of modulus * n.
// kRight: the largest such index strictly below target_index (unchanged when
// the lead is already below). kLeft: the smallest strictly above.
// Throws WindowExhausted when that member is outside the window.
SquadState reselect_lead(const CoverWindow& w, const SquadState& s, long target_index,
                         int congruence_modulus, Orientation orientation = Orientation::kRight);

}  // namespace gpcops
