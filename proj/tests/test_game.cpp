#include <gtest/gtest.h>

#include "gpcops/errors.hpp"
#include "gpcops/game.hpp"
#include "gpcops/strategies.hpp"

using namespace gpcops;

TEST(Simulate, ZeroTurnsIsTurnLimit) {
  auto c = four_cop_controller({7, 2});
  const GameTrace t = simulate(*c, RobberPolicy::greedy(), 0);
  EXPECT_EQ(t.outcome, Outcome::kTurnLimit);
  EXPECT_TRUE(t.turns.empty());
  EXPECT_EQ(t.cop_placement.size(), 4u);
  EXPECT_EQ(t.cop_turns, 0);
}

TEST(Simulate, PlacementOnCopIsCapture) {
  auto c = four_cop_controller({7, 2});
  const Vertex cop = c->place().front();
  auto fresh = four_cop_controller({7, 2});
  const GameTrace t = simulate(*fresh, RobberPolicy::scripted({cop}), 100);
  EXPECT_EQ(t.outcome, Outcome::kCapture);
  EXPECT_TRUE(t.turns.empty());
  EXPECT_EQ(t.cop_turns, 0);
}

TEST(Simulate, GreedyIsDeterministicAndReplays) {
  auto a = gp_n3_controller(11);
  auto b = gp_n3_controller(11);
  const GameTrace ta = simulate(*a, RobberPolicy::greedy(), 550);
  const GameTrace tb = simulate(*b, RobberPolicy::greedy(), 550);
  EXPECT_EQ(ta.to_json().dump(), tb.to_json().dump());
  const ReplayReport r = verify_trace(ta, a->graph());
  EXPECT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.recomputed, ta.outcome);
}

TEST(Simulate, IllegalScriptedMoveThrows) {
  auto c = four_cop_controller({7, 2});
  // 0 and 3 are not adjacent in GP(7,2).
  EXPECT_THROW(simulate(*c, RobberPolicy::scripted({10, 10, 0, 3}), 100), IllegalMove);
}

TEST(Simulate, OptimalNeedsMatchingTable) {
  const Graph other = build_gp({8, 3});
  const SolveTable table = solve(other, 4);
  auto c = four_cop_controller({7, 2});
  EXPECT_THROW(simulate(*c, RobberPolicy::optimal(), 10, &table), PreconditionError);
}

TEST(GreedyRobber, MaximizesNearestCopDistance) {
  const Graph p = build_path(7);
  EXPECT_EQ(greedy_robber_placement(p, {0}), 6);
  EXPECT_EQ(greedy_robber_placement(p, {3}), 0);  // tie 0/6 to the smaller id
  EXPECT_EQ(greedy_robber_move(p, {1}, 3), 4);
  EXPECT_EQ(greedy_robber_move(p, {6}, 0), 0);
}

TEST(RobberPolicy, Parse) {
  EXPECT_EQ(RobberPolicy::parse("optimal").kind, RobberPolicy::Kind::kOptimal);
  EXPECT_EQ(RobberPolicy::parse("greedy").kind, RobberPolicy::Kind::kGreedy);
  EXPECT_EQ(RobberPolicy::parse("random", 9).seed, 9u);
  EXPECT_EQ(RobberPolicy::parse("random:42").seed, 42u);
  EXPECT_EQ(RobberPolicy::parse("scripted:3,4,5").script, (std::vector<Vertex>{3, 4, 5}));
  for (const char* bad : {"", "smart", "random:x", "scripted:", "scripted:1,,2", "scripted:-1"}) {
    EXPECT_THROW(RobberPolicy::parse(bad), ParseError) << bad;
  }
}

TEST(Trace, JsonRoundTrip) {
  auto c = four_cop_controller({8, 3});
  const GameTrace t = simulate(*c, RobberPolicy::random(3), 400);
  const auto j = t.to_json();
  const std::vector<std::string> keys = {"graph", "params", "placements", "turns", "cop_turns", "outcome"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  EXPECT_EQ(got, keys);
  const GameTrace back = GameTrace::from_json(j);
  EXPECT_EQ(back.to_json().dump(), j.dump());
  EXPECT_TRUE(verify_trace(back, c->graph()).ok);
  EXPECT_THROW(GameTrace::from_json(nlohmann::ordered_json::parse(R"({"graph": 3})")), ParseError);
}

TEST(Trace, VerifierCatchesTampering) {
  auto c = four_cop_controller({8, 3});
  const GameTrace t = simulate(*c, RobberPolicy::greedy(), 400);
  ASSERT_EQ(t.outcome, Outcome::kCapture);
  ASSERT_GE(t.turns.size(), 3u);

  GameTrace jump = t;
  jump.turns[1].moves[0] = (jump.turns[1].moves[0] + 5) % 16;  // robber teleports
  EXPECT_FALSE(verify_trace(jump, c->graph()).ok);

  GameTrace lie = t;
  lie.outcome = Outcome::kTurnLimit;
  EXPECT_FALSE(verify_trace(lie, c->graph()).ok);

  GameTrace cut = t;
  cut.turns.pop_back();  // now ends on a robber turn without capture
  cut.outcome = Outcome::kCapture;
  EXPECT_FALSE(verify_trace(cut, c->graph()).ok);
}

TEST(Outcome, Strings) {
  for (Outcome o : {Outcome::kCapture, Outcome::kPushedOut, Outcome::kTurnLimit}) {
    EXPECT_EQ(outcome_from_string(to_string(o)), o);
  }
  EXPECT_EQ(to_string(Outcome::kPushedOut), "PUSHED_OUT");
  EXPECT_THROW(outcome_from_string("WIN"), ParseError);
}
