// Copyright 2026 The ptlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptlab/analysis.hpp"

#include <gtest/gtest.h>

namespace ptlab {
namespace {

RealSqrt2 r(long n, long d = 1) { return RealSqrt2(make_rational(n, d)); }

// Values below come from an independent brute-force enumeration.
struct Expected {
  const char* game;
  RealSqrt2 average;
  RealSqrt2 worst;
};

TEST(ClassicalValue, MatchesBruteForceOracle) {
  const std::vector<Expected> table = {
      {"chsh", r(3, 4), r(3, 4)},
      {"ghz_mermin", r(3, 4), r(3, 4)},
      {"majority", r(3, 4), r(3, 4)},
      {"magic_square", r(8, 9), r(8, 9)},
      {"equality3", r(1), r(1)},
  };
  for (const auto& e : table) {
    const Game g = build_game(e.game);
    const ValueReport avg = classical_value(g, Mode::kAverage);
    EXPECT_EQ(avg.value, e.average) << e.game;
    ASSERT_TRUE(avg.strategy.has_value());
    EXPECT_EQ(win_probability(evaluate(*avg.strategy, g), g, Mode::kAverage), e.average) << e.game;

    const ValueReport worst = classical_value(g, Mode::kWorst);
    EXPECT_EQ(worst.value, e.worst) << e.game;
    ASSERT_TRUE(worst.strategy.has_value());
    EXPECT_EQ(win_probability(evaluate(*worst.strategy, g), g, Mode::kWorst), e.worst) << e.game;
  }
}

TEST(ClassicalValue, MajorityEnumeratesSixtyFourStrategies) {
  const ValueReport rep = classical_value(majority_game(), Mode::kAverage);
  EXPECT_EQ(rep.strategies_enumerated, 64u);
  EXPECT_EQ(rep.model, Model::kDeterministic);
}

TEST(ClassicalValue, PentagramVariantsBelowOne) {
  for (unsigned c = 0; c < 8; ++c) {
    const Game g = pentagram_tailored_game(c);
    EXPECT_EQ(classical_value(g, Mode::kAverage).value, r(3, 4)) << g.id;
    EXPECT_EQ(classical_value(g, Mode::kWorst).value, r(3, 4)) << g.id;
  }
}

TEST(ClassicalValue, JobsDoNotChangeTheAnswer) {
  const Game g = magic_square_game();
  const ValueReport one = classical_value(g, Mode::kAverage, 1);
  const ValueReport three = classical_value(g, Mode::kAverage, 3);
  EXPECT_EQ(one.value, three.value);
  EXPECT_EQ(std::get<DeterministicStrategy>(*one.strategy), std::get<DeterministicStrategy>(*three.strategy));
}

TEST(ClassicalValue, ComboUsesBestResponse) {
  const Game g = square_equality_combo_game();
  const ValueReport rep = classical_value(g, Mode::kAverage);
  EXPECT_EQ(rep.value, r(47, 48));
  ASSERT_TRUE(rep.strategy.has_value());
  EXPECT_EQ(win_probability(evaluate(*rep.strategy, g), g, Mode::kAverage), r(47, 48));
  try {
    classical_value(g, Mode::kWorst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpaceTooLarge);
  }
}

TEST(StrategySpaceTest, IndexRoundTrip) {
  const Layout l = main_game().layout;
  const StrategySpace space(l);
  EXPECT_EQ(space.size(), 262144u);
  const auto s = space.strategy(123456);
  EXPECT_EQ(s.outputs.size(), 5u);
  EXPECT_NO_THROW(validate(s, l));
  EXPECT_EQ(space.strategy(0).outputs[4], (std::vector<int>{0, 0}));
  EXPECT_EQ(space.strategy(space.size() - 1).outputs[3], (std::vector<int>{7, 7}));
}

TEST(NsValue, SmallGamesReachOne) {
  for (const char* id : {"chsh", "ghz_mermin", "majority"}) {
    for (Mode m : {Mode::kWorst, Mode::kAverage}) {
      const Game g = build_game(id);
      const ValueReport rep = ns_value(g, m);
      EXPECT_EQ(rep.value, r(1)) << id;
      ASSERT_TRUE(rep.lp.has_value());
      EXPECT_EQ(rep.lp->status, LpStatus::kOptimal);
      EXPECT_TRUE(verify(build_ns_program(g, m).lp, *rep.lp));
      ASSERT_TRUE(rep.behaviour.has_value());
      EXPECT_TRUE(is_nonsignalling(*rep.behaviour).ok());
      EXPECT_EQ(win_probability(*rep.behaviour, g, m), r(1));
    }
  }
}

TEST(NsValue, PrBoxPointSatisfiesChshProgram) {
  const Game g = chsh_game();
  const NsProgram ns = build_ns_program(g, Mode::kWorst);
  PRWiring w;
  w.boxes = {{0, 1}};
  w.settings = {{{0}, {1}}, {{0}, {1}}};
  w.outputs = {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}};
  const Behaviour pr = evaluate(w, g.layout);
  std::vector<Rational> point(static_cast<std::size_t>(ns.lp.variable_count()));
  for (std::size_t x = 0; x < g.layout.input_count(); ++x) {
    for (const auto& [a, p] : pr.row(x)) point[ns_variable(g.layout, x, a)] = p.rational_part();
  }
  point[ns.t] = 1;
  EXPECT_TRUE(is_feasible_point(ns.lp, point));
}

TEST(NsValue, SignallingPointViolatesProgram) {
  const Game g = chsh_game();
  const NsProgram ns = build_ns_program(g, Mode::kWorst);
  // Bob answers Alice's input: signalling, so some NS row must fail.
  std::vector<Rational> point(static_cast<std::size_t>(ns.lp.variable_count()));
  for (std::size_t x = 0; x < 4; ++x) point[ns_variable(g.layout, x, x >> 1)] = 1;
  EXPECT_FALSE(is_feasible_point(ns.lp, point));
}

TEST(NsValue, MainGameNeedsWitness) {
  const Game g = main_game();
  try {
    ns_value(g, Mode::kWorst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpaceTooLarge);
  }
  const Behaviour w = evaluate(registry_strategy("main_quantum"), g);
  for (Mode m : {Mode::kWorst, Mode::kAverage}) {
    const ValueReport rep = ns_value(g, m, w);
    EXPECT_EQ(rep.value, r(1));
    EXPECT_TRUE(verify(build_ns_program(g, m).lp, *rep.lp));
    EXPECT_EQ(*rep.behaviour, w);
  }
}

TEST(NsValue, RejectsLosingWitness) {
  const Game g = main_game();
  const Behaviour losing = evaluate(StrategySpace(g.layout).strategy(0), g.layout);
  EXPECT_THROW(ns_value(g, Mode::kWorst, losing), Error);
}

TEST(MajorityToChsh, Examples) {
  const Game maj = majority_game(), chsh = chsh_game();
  const Behaviour pr = evaluate(registry_strategy("majority_prbox"), maj);
  EXPECT_EQ(win_probability(chsh_from_majority_worst(pr), chsh, Mode::kWorst), r(1));
  EXPECT_EQ(win_probability(chsh_from_majority_average(pr), chsh, Mode::kAverage), r(1));

  const Behaviour qm = evaluate(registry_strategy("majority_quantum"), maj);
  const RealSqrt2 cos2(make_rational(1, 2), make_rational(1, 4));
  EXPECT_EQ(win_probability(chsh_from_majority_worst(qm), chsh, Mode::kWorst), cos2);
  EXPECT_EQ(win_probability(chsh_from_majority_average(qm), chsh, Mode::kAverage), cos2);

  const Behaviour noise = make_behaviour(maj.layout, [](std::span<const int>, std::span<const int>) { return r(1, 8); });
  EXPECT_EQ(win_probability(chsh_from_majority_worst(noise), chsh, Mode::kWorst), r(1, 2));
}

TEST(MajorityToChsh, AverageIdentityOnBestClassical) {
  const Game maj = majority_game(), chsh = chsh_game();
  const ValueReport best = classical_value(maj, Mode::kAverage);
  const Behaviour b = evaluate(*best.strategy, maj);
  EXPECT_EQ(win_probability(chsh_from_majority_average(b), chsh, Mode::kAverage), best.value);
  EXPECT_THROW(chsh_from_majority_average(evaluate(registry_strategy("ghz_mermin_prbox"), chsh)), Error);
}

// Over every deterministic majority strategy: the average reduction is an
// identity and the worst reduction never loses ground.
TEST(MajorityToChsh, ReductionPropertiesOverAllDeterministic) {
  const Game maj = majority_game(), chsh = chsh_game();
  const StrategySpace space(maj.layout);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Behaviour b = evaluate(space.strategy(i), maj.layout);
    ASSERT_EQ(win_probability(chsh_from_majority_average(b), chsh, Mode::kAverage),
              win_probability(b, maj, Mode::kAverage));
    ASSERT_GE(win_probability(chsh_from_majority_worst(b), chsh, Mode::kWorst),
              win_probability(b, maj, Mode::kWorst));
  }
}

TEST(ValueReportJson, ExactStrings) {
  const Json j = value_report_to_json(classical_value(chsh_game(), Mode::kAverage));
  EXPECT_EQ(j["value"], "3/4");
  EXPECT_EQ(parse_real_sqrt2(j["value"].get<std::string>()), r(3, 4));
  EXPECT_EQ(j["model"], model_name(Model::kDeterministic));
  const Json n = value_report_to_json(ns_value(chsh_game(), Mode::kWorst));
  EXPECT_EQ(n["certificate"]["recheck"], "pass");
}

}  // namespace
}  // namespace ptlab
