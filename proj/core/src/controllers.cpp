#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gpcops/errors.hpp"
#include "gpcops/strategies.hpp"

namespace gpcops {

namespace {

using nlohmann::ordered_json;

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

CoverVertex base_lift(Vertex v, int n) {
  return v < n ? CoverVertex{Rim::A, v} : CoverVertex{Rim::B, v - n};
}

// Window of GP(inf,k) / I(inf,j,k) that follows a robber lift. Leads keep
// absolute cover coordinates, so re-centering never changes them.
class TrackingWindow {
 public:
  TrackingWindow(IGraphParams base, long center) : window_(CoverWindow::centered(base, center)) {}

  const CoverWindow& get() const { return window_; }

  // Re-centers when `v` is within a quarter width of either edge.
  void follow(const CoverVertex& v) {
    const long margin = window_.width() / 4;
    if (v.index < window_.lo() + margin || v.index > window_.hi() - margin) {
      window_ = CoverWindow::centered(window_.base(), v.index);
    }
  }
  CoverVertex lift(Vertex from, Vertex to, const CoverVertex& at) {
    try {
      return window_.lift_move({from, to}, at);
    } catch (const WindowExhausted&) {
      window_ = CoverWindow::centered(window_.base(), at.index);
      return window_.lift_move({from, to}, at);
    }
  }

 private:
  CoverWindow window_;
};

class WeakCopController final : public Controller {
 public:
  WeakCopController(GpParams base, bool force_right, int scale)
      : base_(base),
        force_right_(force_right),
        scale_(scale),
        window_(make_window(base, scale)),
        pair_(base.k, 0, force_right ? std::optional<Orientation>(Orientation::kRight) : std::nullopt) {}

  std::string name() const override { return force_right_ ? "forceright" : "weak2"; }
  const Graph& graph() const override { return window_.quotient(); }
  int cop_count() const override { return 2; }
  ordered_json params() const override {
    ordered_json j;
    j["cops"] = 2;
    j["n"] = base_.n;
    j["k"] = base_.k;
    j["window"] = {window_.lo(), window_.hi()};
    j["push_low"] = window_.push_low();
    j["push_high"] = window_.push_high();
    j["window_scale"] = scale_;
    return j;
  }

  std::vector<Vertex> place() override { return {0, 0}; }
  std::optional<Outcome> robber_placed(Vertex robber) override {
    robber_ = base_lift(robber, base_.n);
    return pushed_out();
  }
  std::vector<Vertex> respond() override {
    pair_.respond(window_, robber_);
    return cops();
  }
  std::optional<Outcome> robber_moved(Vertex from, Vertex to) override {
    robber_ = window_.lift_move({from, to}, robber_);
    return pushed_out();
  }
  TurnNote note() const override {
    TurnNote t;
    t.phase = to_string(pair_.phase());
    t.lifts = {pair_.leads()[0], pair_.leads()[1]};
    t.robber_lift = robber_;
    if (pair_.congruence_lost()) t.flags.push_back("congruence_lost");
    return t;
  }

  const PushPair& pair() const { return pair_; }

 private:
  static CoverWindow make_window(GpParams base, int scale) {
    if (scale < 1) throw PreconditionError("window scale must be >= 1");
    const long slack = static_cast<long>(scale - 1) * (2L * base.k + 2) * base.n;
    return CoverWindow::centered({base.n, 1, base.k}, 0, slack);
  }
  std::optional<Outcome> pushed_out() const {
    if (robber_.index > window_.push_high()) return Outcome::kPushedOut;
    if (!force_right_ && robber_.index < window_.push_low()) return Outcome::kPushedOut;
    return std::nullopt;
  }
  std::vector<Vertex> cops() const {
    return {window_.project(pair_.leads()[0]), window_.project(pair_.leads()[1])};
  }

  GpParams base_;
  bool force_right_;
  int scale_;
  CoverWindow window_;
  PushPair pair_;
  CoverVertex robber_;
};

class FourCopController final : public Controller {
 public:
  explicit FourCopController(GpParams base)
      : base_(base),
        window_({base.n, 1, base.k}, 0),
        right_(base.k, 0, Orientation::kRight),
        left_(base.k, 0, Orientation::kLeft) {}

  std::string name() const override { return "four"; }
  const Graph& graph() const override { return window_.get().quotient(); }
  int cop_count() const override { return 4; }
  ordered_json params() const override {
    ordered_json j;
    j["cops"] = 4;
    j["n"] = base_.n;
    j["k"] = base_.k;
    return j;
  }

  std::vector<Vertex> place() override { return {0, 0, 0, 0}; }
  std::optional<Outcome> robber_placed(Vertex robber) override {
    robber_ = base_lift(robber, base_.n);
    window_.follow(robber_);
    return std::nullopt;
  }
  std::vector<Vertex> respond() override {
    window_.follow(robber_);
    for (PushPair* p : {&right_, &left_}) {
      PushPair next = *p;
      try {
        next.respond(window_.get(), robber_);
      } catch (const WindowExhausted&) {
        window_ = TrackingWindow(window_.get().base(), robber_.index);
        next = *p;
        next.respond(window_.get(), robber_);
      }
      *p = next;
    }
    const CoverWindow& w = window_.get();
    return {w.project(right_.leads()[0]), w.project(right_.leads()[1]), w.project(left_.leads()[0]),
            w.project(left_.leads()[1])};
  }
  std::optional<Outcome> robber_moved(Vertex from, Vertex to) override {
    robber_ = window_.lift(from, to, robber_);
    return std::nullopt;
  }
  TurnNote note() const override {
    TurnNote t;
    t.phase = "right:" + to_string(right_.phase()) + ",left:" + to_string(left_.phase());
    t.lifts = {right_.leads()[0], right_.leads()[1], left_.leads()[0], left_.leads()[1]};
    t.robber_lift = robber_;
    if (right_.congruence_lost() || left_.congruence_lost()) t.flags.push_back("congruence_lost");
    return t;
  }

 private:
  GpParams base_;
  TrackingWindow window_;
  PushPair right_;
  PushPair left_;
  CoverVertex robber_;
};

class TreeGuardController final : public Controller {
 public:
  TreeGuardController(const Graph& g, Subgraph tree, Vertex start) : guard_(g, std::move(tree), start) {}

  std::string name() const override { return "guard"; }
  const Graph& graph() const override { return guard_.graph(); }
  int cop_count() const override { return 1; }
  ordered_json params() const override {
    ordered_json j;
    j["cops"] = 1;
    j["tree"] = guard_.tree().vertices;
    return j;
  }

  std::vector<Vertex> place() override { return {guard_.position()}; }
  std::optional<Outcome> robber_placed(Vertex robber) override {
    robber_ = robber;
    last_ = guard_.status(robber);
    return std::nullopt;
  }
  std::vector<Vertex> respond() override {
    last_ = guard_.respond(robber_);
    return {guard_.position()};
  }
  std::optional<Outcome> robber_moved(Vertex, Vertex to) override {
    robber_ = to;
    return std::nullopt;
  }
  TurnNote note() const override {
    TurnNote t;
    t.phase = last_.established ? "MAINTAIN" : "ESTABLISH";
    t.gc = last_.gc_holds;
    return t;
  }

 private:
  TreeGuard guard_;
  Vertex robber_ = 0;
  GuardStatus last_;
};

class GpN3Controller final : public Controller {
 public:
  explicit GpN3Controller(int n)
      : n_(n),
        window_(make_window(n)),
        guard_(window_.graph(), lifted_tree(window_), window_.id({Rim::A, 2})),
        pair_(3, 0, std::nullopt, true) {}

  std::string name() const override { return "gpn3"; }
  const Graph& graph() const override { return window_.quotient(); }
  int cop_count() const override { return 3; }
  ordered_json params() const override {
    ordered_json j;
    j["cops"] = 3;
    j["n"] = n_;
    j["k"] = 3;
    j["window"] = {window_.lo(), window_.hi()};
    return j;
  }

  std::vector<Vertex> place() override { return {2, 0, 0}; }
  std::optional<Outcome> robber_placed(Vertex robber) override {
    // The lift with index in [1, n].
    robber_ = base_lift(robber, n_);
    if (robber_.index == 0) robber_.index = n_;
    last_ = guard_.status(robber_dist());
    return std::nullopt;
  }
  std::vector<Vertex> respond() override {
    const auto dist = robber_dist();
    last_ = guard_.respond(dist);
    if (guard_.established() && !pair_.committed() && window_.vertex(guard_.position()) != robber_) {
      pair_.commit(robber_.index > 3 ? Orientation::kLeft : Orientation::kRight);
    }
    pair_.respond(window_, robber_);
    return {window_.project(guard_.position()), window_.project(pair_.leads()[0]),
            window_.project(pair_.leads()[1])};
  }
  std::optional<Outcome> robber_moved(Vertex from, Vertex to) override {
    robber_ = window_.lift_move({from, to}, robber_);
    return std::nullopt;
  }
  TurnNote note() const override {
    TurnNote t;
    t.phase = std::string(last_.established ? "MAINTAIN" : "ESTABLISH") + "," + to_string(pair_.phase());
    t.gc = last_.gc_holds;
    t.lifts = {window_.vertex(guard_.position()), pair_.leads()[0], pair_.leads()[1]};
    t.robber_lift = robber_;
    if (pair_.congruence_lost()) t.flags.push_back("congruence_lost");
    return t;
  }

 private:
  static CoverWindow make_window(int n) {
    validate(GpParams{n, 3});
    if (n < 7) throw PreconditionError("gpn3 needs n >= 7");
    return CoverWindow::centered({n, 1, 3}, 0);
  }
  static Subgraph lifted_tree(const CoverWindow& w) {
    std::vector<Vertex> vs;
    for (long i = 1; i <= 3; ++i) {
      vs.push_back(w.id({Rim::A, i}));
      vs.push_back(w.id({Rim::B, i}));
    }
    return induced_subgraph(w.graph(), vs);
  }
  std::vector<int> robber_dist() const { return distances(window_.graph(), window_.id(robber_)); }

  int n_;
  CoverWindow window_;
  TreeGuard guard_;
  PushPair pair_;
  CoverVertex robber_;
  GuardStatus last_;
};

// Five squads on I(inf,j,k). Two leads are brought congruent to the robber mod
// k (one below, one above) and two congruent mod j; each copies the robber's
// rim and closes in when the robber's moves allow. Congruence is reached by
// chase pairs walking in opposite directions; a squad not needed for a chase
// walks toward the robber's index.
class IGraphFiveController final : public Controller {
 public:
  explicit IGraphFiveController(IGraphParams p)
      : p_(p), g_(std::gcd(p.j, p.k)), window_(check(p), 0) {}

  std::string name() const override { return "igraph5"; }
  const Graph& graph() const override { return window_.get().quotient(); }
  int cop_count() const override { return 5; }
  ordered_json params() const override {
    ordered_json j;
    j["cops"] = 5;
    j["n"] = p_.n;
    j["j"] = p_.j;
    j["k"] = p_.k;
    return j;
  }

  std::vector<Vertex> place() override { return {0, 0, 0, 0, 0}; }
  std::optional<Outcome> robber_placed(Vertex robber) override {
    robber_ = base_lift(robber, p_.n);
    // All leads in the robber lift's component: index q n with q n = robber (mod g).
    long q = 0;
    while (mod(q * p_.n - robber_.index, g_) != 0) ++q;
    for (auto& l : leads_) l = Lead{CoverVertex{Rim::A, q * p_.n}};
    window_.follow(robber_);
    return std::nullopt;
  }

  std::vector<Vertex> respond() override {
    window_.follow(robber_);
    flags_.clear();
    form_pairs();
    bool reduced = false;
    bool captured = false;
    for (int i = 0; i < 5 && !captured; ++i) {
      Lead& l = leads_[i];
      switch (l.role) {
        case Role::kChase: chase(i); break;
        case Role::kMatched: reduced |= mirror(l); break;
        case Role::kWalker: walk(l); break;
      }
      captured = l.pos == robber_;
    }
    if (!captured) {
      for (Lead& l : leads_) {
        if (l.role == Role::kMatched) position(l);
      }
    }
    const auto matched = std::count_if(leads_.begin(), leads_.end(),
                                       [](const Lead& l) { return l.role == Role::kMatched; });
    phase_ = matched == 4 ? "SQUEEZE" : "ACQUIRE";
    if (matched == 4 && !reduced && !captured) flags_.push_back("no_reducing_lead");
    std::vector<Vertex> out;
    for (const Lead& l : leads_) out.push_back(window_.get().project(l.pos));
    return out;
  }

  std::optional<Outcome> robber_moved(Vertex from, Vertex to) override {
    robber_ = window_.lift(from, to, robber_);
    return std::nullopt;
  }

  TurnNote note() const override {
    TurnNote t;
    t.phase = phase_;
    for (const Lead& l : leads_) t.lifts.push_back(l.pos);
    t.robber_lift = robber_;
    t.flags = flags_;
    return t;
  }

 private:
  enum class Role { kWalker, kChase, kMatched };
  // kK leads are congruent mod k and chase along A; kJ leads mod j along B.
  enum class Kind { kK, kJ };
  struct Lead {
    CoverVertex pos;
    Role role = Role::kWalker;
    Kind kind = Kind::kK;
    int dir = 0;
    int partner = -1;
    Orientation side = Orientation::kRight;  // matched: below (kRight) or above (kLeft)
  };

  static IGraphParams check(IGraphParams p) {
    validate(p);
    if (!is_connected_igraph(p)) {
      throw PreconditionError("I(" + std::to_string(p.n) + "," + std::to_string(p.j) + "," +
                              std::to_string(p.k) + ") is disconnected");
    }
    return p;
  }

  int modulus(Kind kind) const { return kind == Kind::kK ? p_.k : p_.j; }

  void form_pairs() {
    for (Kind kind : {Kind::kK, Kind::kJ}) {
      int chasing = 0;
      int matched = 0;
      for (const Lead& l : leads_) {
        if (l.kind != kind) continue;
        if (l.role == Role::kChase) ++chasing;
        if (l.role == Role::kMatched) ++matched;
      }
      if (matched + chasing / 2 >= 2) continue;
      std::vector<int> free;
      for (int i = 0; i < 5; ++i) {
        if (leads_[i].role == Role::kWalker) free.push_back(i);
      }
      if (free.size() < 2) continue;
      const int a = free[0];
      const int b = free[1];
      leads_[a] = Lead{leads_[a].pos, Role::kChase, kind, +1, b};
      leads_[b] = Lead{leads_[b].pos, Role::kChase, kind, -1, a};
    }
  }

  bool congruent(const CoverVertex& v, Kind kind) const {
    return mod(v.index - robber_.index, modulus(kind)) == 0;
  }

  void chase(int i) {
    Lead& l = leads_[i];
    if (congruent(l.pos, l.kind)) {
      match(i);
      mirror(l);
      return;
    }
    const Rim rim = l.kind == Kind::kK ? Rim::A : Rim::B;
    const long step = l.kind == Kind::kK ? p_.j : p_.k;
    if (l.pos.rim != rim) {
      l.pos.rim = rim;
    } else {
      l.pos.index += l.dir * step;
    }
    if (congruent(l.pos, l.kind)) match(i);
  }

  void match(int i) {
    Lead& l = leads_[i];
    const int other = l.partner;
    bool below_taken = false;
    for (int t = 0; t < 5; ++t) {
      const Lead& m = leads_[t];
      if (t != i && m.role == Role::kMatched && m.kind == l.kind && m.side == Orientation::kRight) {
        below_taken = true;
      }
    }
    l.role = Role::kMatched;
    l.partner = -1;
    l.side = below_taken ? Orientation::kLeft : Orientation::kRight;
    if (other >= 0 && leads_[other].role == Role::kChase) {
      leads_[other].role = Role::kWalker;
      leads_[other].partner = -1;
    }
  }

  // True when the lead's index gap to the robber shrank.
  bool mirror(Lead& l) {
    const long before = std::labs(l.pos.index - robber_.index);
    const auto next = mirror_move(window_.get(), l.pos, robber_, modulus(l.kind));
    if (!next) {
      flags_.push_back("congruence_lost");
      return false;
    }
    l.pos = *next;
    return std::labs(l.pos.index - robber_.index) < before;
  }

  // Keeps a matched lead on its side of the robber by switching squad member.
  void position(Lead& l) {
    const long step = static_cast<long>(modulus(l.kind)) * p_.n;
    if (l.side == Orientation::kRight) {
      while (l.pos.index >= robber_.index) l.pos.index -= step;
    } else {
      while (l.pos.index <= robber_.index) l.pos.index += step;
    }
  }

  // Steps along a shortest path to the robber's column {a_r, b_r} from the
  // nearest squad member in the robber's component, or onto the robber from
  // inside the column. Aiming at the column rather than the robber's vertex
  // makes progress against a robber that flips rims in place.
  void walk(Lead& l) {
    const long step = static_cast<long>(g_) * p_.n;
    l.pos.index += (robber_.index - l.pos.index) / step * step;
    const CoverWindow& w = window_.get();
    if (l.pos.index == robber_.index) {
      l.pos = robber_;
      return;
    }
    auto dist = distances(w.graph(), w.id({Rim::A, robber_.index}));
    const auto other = distances(w.graph(), w.id({Rim::B, robber_.index}));
    for (std::size_t v = 0; v < dist.size(); ++v) dist[v] = std::min(dist[v], other[v]);
    const Vertex at = w.id(l.pos);
    Vertex best = at;
    for (Vertex u : w.graph().neighbors(at)) {
      if (dist[u] < dist[best] || (dist[u] == dist[best] && best != at && u < best)) best = u;
    }
    l.pos = w.vertex(best);
  }

  IGraphParams p_;
  int g_;
  TrackingWindow window_;
  std::array<Lead, 5> leads_;
  CoverVertex robber_;
  std::string phase_ = "ACQUIRE";
  std::vector<std::string> flags_;
};

}  // namespace

std::unique_ptr<Controller> weak_cop_controller(GpParams base, int window_scale) {
  validate(base);
  return std::make_unique<WeakCopController>(base, false, window_scale);
}

std::unique_ptr<Controller> force_right_controller(GpParams base, int window_scale) {
  validate(base);
  return std::make_unique<WeakCopController>(base, true, window_scale);
}

std::unique_ptr<Controller> four_cop_controller(GpParams base) {
  validate(base);
  return std::make_unique<FourCopController>(base);
}

std::unique_ptr<Controller> tree_guard_controller(const Graph& g, Subgraph tree, Vertex start) {
  return std::make_unique<TreeGuardController>(g, std::move(tree), start);
}

std::unique_ptr<Controller> gp_n3_controller(int n) { return std::make_unique<GpN3Controller>(n); }

std::unique_ptr<Controller> igraph_five_cop_controller(IGraphParams params) {
  return std::make_unique<IGraphFiveController>(params);
}

Subgraph gp_n3_tree(const Graph& g, int n) {
  validate(GpParams{n, 3});
  std::vector<Vertex> vs;
  for (int i = 1; i <= 3; ++i) {
    vs.push_back(rim_vertex(Rim::A, i, n));
    vs.push_back(rim_vertex(Rim::B, i, n));
  }
  return induced_subgraph(g, vs);
}

}  // namespace gpcops
