#include "gpcops/cover.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "gpcops/errors.hpp"

namespace gpcops {

std::string to_string(const CoverVertex& v) {
  return std::string(v.rim == Rim::A ? "a" : "b") + "_" + std::to_string(v.index);
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CoverWindow::CoverWindow(IGraphParams base, long lo, long hi) : base_(base), lo_(lo), hi_(hi) {
  validate(base);
  if (hi - lo < 4L * base.n) {
    throw PreconditionError("cover window [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] spans fewer than 4n indices");
  }
  const long w = width();
  std::vector<Edge> edges;
  edges.reserve(3 * w);
  for (long i = lo; i <= hi; ++i) {
    const Vertex a = static_cast<Vertex>(i - lo);
    const Vertex b = static_cast<Vertex>(w + i - lo);
    edges.emplace_back(a, b);
    if (i + base.j <= hi) edges.emplace_back(a, a + base.j);
    if (i + base.k <= hi) edges.emplace_back(b, b + base.k);
  }
  graph_ = Graph::from_edges(static_cast<int>(2 * w), edges);
  quotient_ = build_igraph(base);
}

CoverWindow CoverWindow::centered(IGraphParams base, long center, long slack) {
  const long n = base.n;
  const long half = (2L * std::max(base.j, base.k) + 2) * n + slack;
  const long c = floor_div(center, n) * n;
  return CoverWindow(base, c - half, c + half);
}

Vertex CoverWindow::id(const CoverVertex& v) const {
  if (!contains(v)) throw WindowExhausted(to_string(v) + " outside window");
  const long off = v.index - lo_;
  return static_cast<Vertex>(v.rim == Rim::A ? off : width() + off);
}

CoverVertex CoverWindow::vertex(Vertex id) const {
  if (id < 0 || id >= 2 * width()) throw PreconditionError("window id out of range");
  if (id < width()) return {Rim::A, lo_ + id};
  return {Rim::B, lo_ + id - width()};
}

std::array<CoverVertex, 3> CoverWindow::cover_neighbors(const CoverVertex& v) const {
  if (v.rim == Rim::A) {
    return {CoverVertex{Rim::A, v.index - base_.j}, CoverVertex{Rim::A, v.index + base_.j},
            CoverVertex{Rim::B, v.index}};
  }
  return {CoverVertex{Rim::B, v.index - base_.k}, CoverVertex{Rim::B, v.index + base_.k},
          CoverVertex{Rim::A, v.index}};
}

CoverVertex CoverWindow::lift_move(const QuotientMove& move, const CoverVertex& at) const {
  if (project(at) != move.tail) {
    throw PreconditionError("lift_move: " + to_string(at) + " does not project to tail " +
                            std::to_string(move.tail));
  }
  if (move.tail == move.head) return at;
  for (const CoverVertex& nb : cover_neighbors(at)) {
    if (project(nb) == move.head) {
      if (!contains(nb)) throw WindowExhausted("lift of move leaves window at " + to_string(nb));
      return nb;
    }
  }
  throw PreconditionError("lift_move: (" + std::to_string(move.tail) + "," +
                          std::to_string(move.head) + ") is not a quotient edge");
}

SquadState reselect_lead(const CoverWindow& w, const SquadState& s, long target_index,
                         int congruence_modulus, Orientation orientation) {
  if (congruence_modulus < 1) throw PreconditionError("congruence modulus must be positive");
  const long step = static_cast<long>(congruence_modulus) * w.base().n;
  SquadState out = s;
  if (orientation == Orientation::kRight) {
    if (s.lead_index < target_index) return s;
    // Minimal m >= 1 with lead - m*step < target.
    const long m = floor_div(s.lead_index - target_index, step) + 1;
    out.lead_index = s.lead_index - m * step;
  } else {
    if (s.lead_index > target_index) return s;
    const long m = floor_div(target_index - s.lead_index, step) + 1;
    out.lead_index = s.lead_index + m * step;
  }
  if (!w.contains(out.lead())) {
    throw WindowExhausted("reselected lead " + to_string(out.lead()) + " outside window");
  }
  return out;
}

}  // namespace gpcops
