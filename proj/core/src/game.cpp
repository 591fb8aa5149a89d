#include "gpcops/game.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>

#include "gpcops/errors.hpp"

namespace gpcops {

using nlohmann::ordered_json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kCapture: return "CAPTURE";
    case Outcome::kPushedOut: return "PUSHED_OUT";
    case Outcome::kTurnLimit: return "TURN_LIMIT";
  }
  return "?";
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "CAPTURE") return Outcome::kCapture;
  if (s == "PUSHED_OUT") return Outcome::kPushedOut;
  if (s == "TURN_LIMIT") return Outcome::kTurnLimit;
  throw ParseError("unknown outcome '" + s + "'");
}

ordered_json Controller::params() const {
  ordered_json j;
  j["cops"] = cop_count();
  return j;
}

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError("bad " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

RobberPolicy RobberPolicy::parse(const std::string& text, std::uint64_t default_seed) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "optimal" && colon == std::string::npos) return optimal();
  if (head == "greedy" && colon == std::string::npos) return greedy();
  if (head == "random") {
    return random(colon == std::string::npos ? default_seed : parse_u64(tail, "seed"));
  }
  if (head == "scripted") {
    std::vector<Vertex> moves;
    std::size_t pos = 0;
    while (pos <= tail.size() && !tail.empty()) {
      const auto comma = tail.find(',', pos);
      const std::string tok = tail.substr(pos, comma == std::string::npos ? comma : comma - pos);
      moves.push_back(static_cast<Vertex>(parse_u64(tok, "scripted vertex")));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (moves.empty()) throw ParseError("scripted policy needs at least a placement");
    return scripted(std::move(moves));
  }
  throw ParseError("unknown robber policy '" + text + "'");
}

std::string RobberPolicy::describe() const {
  switch (kind) {
    case Kind::kOptimal: return "optimal";
    case Kind::kGreedy: return "greedy";
    case Kind::kRandom: return "random:" + std::to_string(seed);
    case Kind::kScripted: {
      std::string s = "scripted:";
      for (std::size_t i = 0; i < script.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(script[i]);
      }
      return s;
    }
  }
  return "?";
}

namespace {

ordered_json note_json(const TurnNote& note) {
  ordered_json j;
  j["phase"] = note.phase;
  j["gc"] = note.gc ? ordered_json(*note.gc) : ordered_json(nullptr);
  if (!note.lifts.empty()) {
    ordered_json lifts = ordered_json::array();
    for (const auto& v : note.lifts) lifts.push_back(to_string(v));
    j["lifts"] = lifts;
  }
  if (note.robber_lift) j["robber_lift"] = to_string(*note.robber_lift);
  if (!note.flags.empty()) j["flags"] = note.flags;
  return j;
}

CoverVertex parse_cover_vertex(const std::string& s) {
  if (s.size() < 3 || (s[0] != 'a' && s[0] != 'b') || s[1] != '_') {
    throw ParseError("bad cover vertex '" + s + "'");
  }
  long idx = 0;
  auto [p, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), idx);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad cover vertex '" + s + "'");
  return {s[0] == 'a' ? Rim::A : Rim::B, idx};
}

TurnNote note_from_json(const ordered_json& j) {
  TurnNote note;
  note.phase = j.at("phase").get<std::string>();
  if (!j.at("gc").is_null()) note.gc = j.at("gc").get<bool>();
  if (j.contains("lifts")) {
    for (const auto& s : j.at("lifts")) note.lifts.push_back(parse_cover_vertex(s.get<std::string>()));
  }
  if (j.contains("robber_lift")) note.robber_lift = parse_cover_vertex(j.at("robber_lift").get<std::string>());
  if (j.contains("flags")) note.flags = j.at("flags").get<std::vector<std::string>>();
  return note;
}

}  // namespace

ordered_json GameTrace::to_json() const {
  ordered_json j;
  j["graph"] = graph;
  ordered_json p = params;
  if (p.is_null()) p = ordered_json::object();
  p["strategy"] = strategy;
  j["params"] = p;
  ordered_json placements;
  placements["cops"] = cop_placement;
  placements["robber"] = robber_placement;
  placements["note"] = note_json(placement_note);
  j["placements"] = placements;
  ordered_json ts = ordered_json::array();
  for (const auto& t : turns) {
    ordered_json tj;
    tj["actor"] = t.actor == TurnRecord::Actor::kCop ? "cop" : "robber";
    tj["moves"] = t.moves;
    const ordered_json nj = note_json(t.note);
    for (auto it = nj.begin(); it != nj.end(); ++it) tj[it.key()] = it.value();
    ts.push_back(tj);
  }
  j["turns"] = ts;
  j["cop_turns"] = cop_turns;
  j["outcome"] = gpcops::to_string(outcome);
  return j;
}

GameTrace GameTrace::from_json(const ordered_json& j) {
  try {
    GameTrace t;
    t.graph = j.at("graph").get<std::string>();
    t.params = j.at("params");
    t.strategy = t.params.value("strategy", "");
    t.params.erase("strategy");
    const auto& pl = j.at("placements");
    t.cop_placement = pl.at("cops").get<std::vector<Vertex>>();
    t.robber_placement = pl.at("robber").get<Vertex>();
    t.placement_note = note_from_json(pl.at("note"));
    for (const auto& tj : j.at("turns")) {
      TurnRecord r;
      const auto actor = tj.at("actor").get<std::string>();
      if (actor != "cop" && actor != "robber") throw ParseError("bad actor '" + actor + "'");
      r.actor = actor == "cop" ? TurnRecord::Actor::kCop : TurnRecord::Actor::kRobber;
      r.moves = tj.at("moves").get<std::vector<Vertex>>();
      r.note = note_from_json(tj);
      t.turns.push_back(std::move(r));
    }
    t.cop_turns = j.at("cop_turns").get<int>();
    t.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trace: ") + e.what());
  }
}

namespace {

bool on_cop(const std::vector<Vertex>& cops, Vertex r) {
  return std::find(cops.begin(), cops.end(), r) != cops.end();
}

bool legal_step(const Graph& g, Vertex from, Vertex to) {
  return g.contains(to) && (from == to || g.has_edge(from, to));
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

int nearest_cop(const std::vector<int>& dist, int n, const std::vector<Vertex>& cops, Vertex v) {
  int best = kInfinity;
  for (Vertex c : cops) best = std::min(best, dist[static_cast<std::size_t>(c) * n + v]);
  return best;
}

Vertex greedy_choice(const Graph& g, const std::vector<int>& dist, const std::vector<Vertex>& cops,
                     const std::vector<Vertex>& options) {
  Vertex best = options.front();
  int best_d = -1;
  for (Vertex v : options) {
    const int d = nearest_cop(dist, g.size(), cops, v);
    if (d > best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out[v] = v;
  return out;
}

class Robber {
 public:
  Robber(const Graph& g, const RobberPolicy& policy, const SolveTable* table)
      : g_(g), policy_(policy), table_(table), rng_(policy.seed) {
    if (policy.kind == RobberPolicy::Kind::kGreedy) dist_ = distance_matrix(g);
  }

  Vertex place(const std::vector<Vertex>& cops) {
    switch (policy_.kind) {
      case RobberPolicy::Kind::kOptimal: {
        std::vector<Vertex> sorted = cops;
        std::sort(sorted.begin(), sorted.end());
        const auto pr = table_->ranker().rank(sorted);
        Vertex best = 0;
        int best_d = -1;
        for (Vertex v = 0; v < g_.size(); ++v) {
          const std::uint16_t d = table_->distance(pr, v, Side::kCop);
          if (d == SolveTable::kRobberSafe) return v;
          if (static_cast<int>(d) > best_d) {
            best_d = d;
            best = v;
          }
        }
        return best;
      }
      case RobberPolicy::Kind::kGreedy: return greedy_choice(g_, dist_, cops, all_vertices(g_));
      case RobberPolicy::Kind::kRandom: return pick_random(cops, all_vertices(g_), 0);
      case RobberPolicy::Kind::kScripted: return policy_.script.front();
    }
    return 0;
  }

  Vertex move(const std::vector<Vertex>& cops, Vertex robber) {
    switch (policy_.kind) {
      case RobberPolicy::Kind::kOptimal: {
        GameState s;
        s.cops = cops;
        std::sort(s.cops.begin(), s.cops.end());
        s.robber = robber;
        s.to_move = Side::kRobber;
        return optimal_robber_move(*table_, s);
      }
      case RobberPolicy::Kind::kGreedy:
        return greedy_choice(g_, dist_, cops, closed_neighborhood(g_, robber));
      case RobberPolicy::Kind::kRandom:
        return pick_random(cops, closed_neighborhood(g_, robber), robber);
      case RobberPolicy::Kind::kScripted: {
        ++script_pos_;
        return script_pos_ < policy_.script.size() ? policy_.script[script_pos_] : robber;
      }
    }
    return robber;
  }

 private:
  Vertex pick_random(const std::vector<Vertex>& cops, const std::vector<Vertex>& options, Vertex fallback) {
    std::vector<Vertex> free;
    for (Vertex v : options) {
      if (!on_cop(cops, v)) free.push_back(v);
    }
    if (free.empty()) return fallback;
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    return free[pick(rng_)];
  }

  const Graph& g_;
  const RobberPolicy& policy_;
  const SolveTable* table_;
  std::mt19937_64 rng_;
  std::vector<int> dist_;
  std::size_t script_pos_ = 0;
};

}  // namespace

Vertex greedy_robber_move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) {
  return greedy_choice(g, distance_matrix(g), cops, closed_neighborhood(g, robber));
}

Vertex greedy_robber_placement(const Graph& g, const std::vector<Vertex>& cops) {
  return greedy_choice(g, distance_matrix(g), cops, all_vertices(g));
}

GameTrace simulate(Controller& controller, const RobberPolicy& policy, int max_turns,
                   const SolveTable* table, const SolveOptions& options) {
  const Graph& g = controller.graph();
  if (max_turns < 0) throw PreconditionError("max_turns must be >= 0");
  std::optional<SolveTable> owned;
  if (policy.kind == RobberPolicy::Kind::kOptimal) {
    if (table == nullptr) {
      SolveOptions full = options;
      full.stop_at_first_win = false;
      owned.emplace(solve(g, controller.cop_count(), full));
      table = &*owned;
    }
    if (table->graph().name() != g.name() || table->graph().size() != g.size()) {
      throw PreconditionError("solve table is for a different graph");
    }
    if (table->cops() != controller.cop_count() || !table->complete()) {
      throw PreconditionError("optimal robber needs a complete table for " +
                              std::to_string(controller.cop_count()) + " cops");
    }
  }
  if (policy.kind == RobberPolicy::Kind::kScripted && policy.script.empty()) {
    throw PreconditionError("scripted robber needs a placement");
  }

  GameTrace trace;
  trace.graph = g.name();
  trace.strategy = controller.name();
  trace.params = controller.params();
  trace.params["robber"] = policy.describe();
  trace.params["max_turns"] = max_turns;

  std::vector<Vertex> cops = controller.place();
  if (static_cast<int>(cops.size()) != controller.cop_count()) {
    throw IllegalMove(controller.name() + " placed " + std::to_string(cops.size()) + " cops");
  }
  for (Vertex c : cops) {
    if (!g.contains(c)) throw IllegalMove("cop placed off the graph at " + std::to_string(c));
  }
  trace.cop_placement = cops;
  Robber robber_player(g, policy, table);
  Vertex robber = robber_player.place(cops);
  if (!g.contains(robber)) throw IllegalMove("robber placed off the graph at " + std::to_string(robber));
  trace.robber_placement = robber;
  if (on_cop(cops, robber)) {
    trace.placement_note = controller.note();
    trace.outcome = Outcome::kCapture;
    return trace;
  }
  auto verdict = controller.robber_placed(robber);
  trace.placement_note = controller.note();
  if (verdict) {
    trace.outcome = *verdict;
    return trace;
  }

  for (int turn = 0; turn < max_turns; ++turn) {
    std::vector<Vertex> next = controller.respond();
    if (next.size() != cops.size()) throw IllegalMove(controller.name() + " changed the cop count");
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (!legal_step(g, cops[i], next[i])) {
        throw IllegalMove(controller.name() + ": cop " + std::to_string(i) + " moved " +
                          std::to_string(cops[i]) + " -> " + std::to_string(next[i]) + " on turn " +
                          std::to_string(turn + 1));
      }
    }
    cops = std::move(next);
    ++trace.cop_turns;
    trace.turns.push_back({TurnRecord::Actor::kCop, cops, controller.note()});
    if (on_cop(cops, robber)) {
      trace.outcome = Outcome::kCapture;
      return trace;
    }
    const Vertex to = robber_player.move(cops, robber);
    if (!legal_step(g, robber, to)) {
      throw IllegalMove("robber moved " + std::to_string(robber) + " -> " + std::to_string(to) +
                        " on turn " + std::to_string(turn + 1));
    }
    const Vertex from = robber;
    robber = to;
    if (on_cop(cops, robber)) {
      trace.turns.push_back({TurnRecord::Actor::kRobber, {robber}, controller.note()});
      trace.outcome = Outcome::kCapture;
      return trace;
    }
    verdict = controller.robber_moved(from, robber);
    trace.turns.push_back({TurnRecord::Actor::kRobber, {robber}, controller.note()});
    if (verdict) {
      trace.outcome = *verdict;
      return trace;
    }
  }
  trace.outcome = Outcome::kTurnLimit;
  return trace;
}

ReplayReport verify_trace(const GameTrace& trace, const Graph& g) {
  ReplayReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.message = std::move(msg);
    return rep;
  };
  if (trace.graph != g.name()) return fail("trace graph " + trace.graph + " is not " + g.name());
  std::vector<Vertex> cops = trace.cop_placement;
  for (Vertex c : cops) {
    if (!g.contains(c)) return fail("cop placed off the graph");
  }
  Vertex robber = trace.robber_placement;
  if (!g.contains(robber)) return fail("robber placed off the graph");
  bool captured = on_cop(cops, robber);
  int cop_turns = 0;
  TurnRecord::Actor expected = TurnRecord::Actor::kCop;
  for (std::size_t i = 0; i < trace.turns.size(); ++i) {
    const auto& t = trace.turns[i];
    if (captured) return fail("moves recorded after capture at record " + std::to_string(i));
    if (t.actor != expected) return fail("turn order broken at record " + std::to_string(i));
    if (t.actor == TurnRecord::Actor::kCop) {
      if (t.moves.size() != cops.size()) return fail("cop count changed at record " + std::to_string(i));
      for (std::size_t c = 0; c < cops.size(); ++c) {
        if (!legal_step(g, cops[c], t.moves[c])) return fail("illegal cop move at record " + std::to_string(i));
      }
      cops = t.moves;
      ++cop_turns;
      expected = TurnRecord::Actor::kRobber;
    } else {
      if (t.moves.size() != 1 || !legal_step(g, robber, t.moves[0])) {
        return fail("illegal robber move at record " + std::to_string(i));
      }
      robber = t.moves[0];
      expected = TurnRecord::Actor::kCop;
    }
    captured = on_cop(cops, robber);
  }
  if (cop_turns != trace.cop_turns) return fail("cop turn count mismatch");
  if (captured) {
    rep.recomputed = Outcome::kCapture;
  } else if (trace.outcome == Outcome::kPushedOut && expected == TurnRecord::Actor::kCop) {
    rep.recomputed = Outcome::kPushedOut;
  } else {
    rep.recomputed = Outcome::kTurnLimit;
    const int limit = trace.params.value("max_turns", -1);
    if (limit >= 0 && cop_turns != limit) return fail("game stopped early without capture");
  }
  rep.ok = rep.recomputed == trace.outcome;
  if (!rep.ok) rep.message = "recorded " + to_string(trace.outcome) + ", replay gives " + to_string(rep.recomputed);
  return rep;
}

}  // namespace gpcops
