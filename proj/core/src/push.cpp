#include <cstdlib>

#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"

namespace gpcops {

std::string to_string(PushPhase p) {
  switch (p) {
    case PushPhase::kCongruenceChase: return "CONGRUENCE_CHASE";
    case PushPhase::kParityMatch: return "PARITY_MATCH";
    case PushPhase::kPush: return "PUSH";
  }
  return "?";
}

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::optional<CoverVertex> mirror_move(const CoverWindow& w, const CoverVertex& lead,
                                       const CoverVertex& robber, int modulus) {
  const auto nbs = w.cover_neighbors(lead);
  std::array<CoverVertex, 4> options{lead, nbs[0], nbs[1], nbs[2]};
  std::optional<CoverVertex> best;
  for (const CoverVertex& v : options) {
    if (v == robber) return v;
    if (v.rim != robber.rim || mod(v.index - robber.index, modulus) != 0) continue;
    if (!best) {
      best = v;
      continue;
    }
    const long d = std::labs(v.index - robber.index);
    const long bd = std::labs(best->index - robber.index);
    if (d < bd || (d == bd && v.index < best->index)) best = v;
  }
  return best;
}

PushPair::PushPair(int k, long start_index, std::optional<Orientation> orientation, bool defer)
    : k_(k),
      orientation_(orientation),
      defer_(defer),
      leads_{CoverVertex{Rim::A, start_index}, CoverVertex{Rim::A, start_index}} {
  if (k < 1) throw PreconditionError("push pair needs k >= 1");
}

void PushPair::commit(Orientation o) {
  if (orientation_ && *orientation_ != o) throw PreconditionError("push pair already oriented");
  orientation_ = o;
}

bool PushPair::congruent(int slot, const CoverVertex& robber) const {
  return mod(leads_[slot].index - robber.index, k_) == 0;
}

void PushPair::orient_leads(const CoverWindow& w, const CoverVertex& robber) {
  const Orientation o = *orientation_;
  const int c2 = 1 - c1_;
  SquadState s1{leads_[c1_].index, leads_[c1_].rim, c1_};
  leads_[c1_] = reselect_lead(w, s1, robber.index, k_, o).lead();
  SquadState s2{leads_[c2].index, leads_[c2].rim, c2};
  leads_[c2] = reselect_lead(w, s2, robber.index, 1, o).lead();
}

void PushPair::respond(const CoverWindow& w, const CoverVertex& robber) {
  lost_ = false;
  if (phase_ == PushPhase::kCongruenceChase) {
    for (int s = 0; s < 2 && c1_ < 0; ++s) {
      if (congruent(s, robber)) c1_ = s;
    }
    if (c1_ < 0) {
      leads_[0].index += 1;
      leads_[1].index -= 1;
      ++chase_turns_;
      if (!w.contains(leads_[0]) || !w.contains(leads_[1])) {
        throw WindowExhausted("chasing lead left the window");
      }
      for (int s = 0; s < 2 && c1_ < 0; ++s) {
        if (congruent(s, robber)) c1_ = s;
      }
      if (c1_ >= 0) phase_ = PushPhase::kParityMatch;
      return;
    }
    phase_ = PushPhase::kParityMatch;
  }

  const auto next = mirror_move(w, leads_[c1_], robber, k_);
  if (!next) {
    lost_ = true;
    return;
  }
  if (!w.contains(*next)) throw WindowExhausted("lead " + to_string(*next) + " outside window");
  leads_[c1_] = *next;
  if (leads_[c1_] == robber) return;

  if (phase_ == PushPhase::kParityMatch && leads_[c1_].rim == robber.rim) {
    phase_ = PushPhase::kPush;
    if (!orientation_ && !defer_) {
      orientation_ = leads_[c1_].index < robber.index ? Orientation::kRight : Orientation::kLeft;
    }
    if (orientation_) orient_leads(w, robber);
    return;
  }
  if (phase_ != PushPhase::kPush || !orientation_) return;

  orient_leads(w, robber);
  const int c2 = 1 - c1_;
  CoverVertex& lead2 = leads_[c2];
  if (lead2.index == robber.index) return;  // robber on the spoke end above C2
  lead2.index += static_cast<long>(*orientation_);
  if (!w.contains(lead2)) throw WindowExhausted("lead " + to_string(lead2) + " outside window");
}

}  // namespace gpcops
