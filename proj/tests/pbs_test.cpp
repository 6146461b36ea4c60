// Copyright 2026 The ckc developers
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

#include "ckc/pbs.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "ckc/lcs.hpp"
#include "ckc/verifier.hpp"

namespace ckc {
namespace {

TEST(Pbs, RuleBasedThresholds) {
  const SelectionPolicy rule = SelectionPolicy::rule_based();
  EXPECT_EQ(select_strategy(20, 0, rule), StrategyId::Low);
  EXPECT_EQ(select_strategy(20, 1, rule), StrategyId::Low);
  EXPECT_EQ(select_strategy(20, 4, rule), StrategyId::Low);
  EXPECT_EQ(select_strategy(20, 5, rule), StrategyId::Mid);  // 4h = k: mid
  EXPECT_EQ(select_strategy(20, 10, rule), StrategyId::Mid);
  EXPECT_EQ(select_strategy(20, 15, rule), StrategyId::Mid);  // 4h = 3k: mid
  EXPECT_EQ(select_strategy(20, 16, rule), StrategyId::High);
  EXPECT_EQ(select_strategy(20, 20, rule), StrategyId::High);
  EXPECT_EQ(select_strategy(12, 2, rule), StrategyId::Low);
  EXPECT_EQ(select_strategy(12, 3, rule), StrategyId::Mid);
  EXPECT_EQ(select_strategy(12, 9, rule), StrategyId::Mid);
  EXPECT_EQ(select_strategy(12, 10, rule), StrategyId::High);
}

TEST(Pbs, SelectValidatesShape) {
  const SelectionPolicy rule = SelectionPolicy::rule_based();
  EXPECT_THROW(select_strategy(3, 1, rule), std::invalid_argument);
  EXPECT_THROW(select_strategy(4, -1, rule), std::invalid_argument);
  EXPECT_THROW(select_strategy(4, 5, rule), std::invalid_argument);
}

TEST(Pbs, DefaultPolicySwitchesAtWidthTen) {
  EXPECT_EQ(SelectionPolicy::default_for(8).mode, PolicyMode::Empirical);
  EXPECT_EQ(SelectionPolicy::default_for(10).mode, PolicyMode::Empirical);
  EXPECT_EQ(SelectionPolicy::default_for(12).mode, PolicyMode::RuleBased);
}

TEST(Pbs, EmpiricalPicksTheCheapestEmitter) {
  const SelectionPolicy emp = SelectionPolicy::empirical();
  for (int k : {4, 6, 8}) {
    for (int h = 0; h <= k; ++h) {
      StrategyId chosen = select_strategy(k, h, emp);
      std::vector<int> ih;
      for (int i = 1; i <= h; ++i) ih.push_back(i);
      HadamardPlacement p(k, ih);
      int best = emit(chosen, p).two_qubit;
      for (StrategyId s : {StrategyId::Low, StrategyId::Mid, StrategyId::High}) {
        EXPECT_LE(best, emit(s, p).two_qubit)
            << "k=" << k << " h=" << h << " chose " << strategy_name(chosen);
      }
    }
  }
}

TEST(Pbs, EmpiricalTieBreakPrefersLowThenMid) {
  // k = 4, h = 2: low and high tie at 19 while mid wins at 6; k = 2, h = 1:
  // all emitters are compared and a deterministic winner must come back.
  const SelectionPolicy emp = SelectionPolicy::empirical();
  EXPECT_EQ(select_strategy(4, 2, emp), StrategyId::Mid);
  StrategyId a = select_strategy(2, 1, emp);
  EXPECT_EQ(a, select_strategy(2, 1, emp));
}

TEST(Pbs, RuleMatchesEmpiricalAwayFromThresholds) {
  // At k = 20 the two policies agree everywhere except possibly at the rule
  // thresholds h = k/4 and h = 3k/4, where the margin is a handful of gates.
  const SelectionPolicy rule = SelectionPolicy::rule_based();
  const SelectionPolicy emp = SelectionPolicy::empirical();
  for (int h = 0; h <= 20; ++h) {
    if (h == 5 || h == 15) continue;
    EXPECT_EQ(select_strategy(20, h, rule), select_strategy(20, h, emp))
        << "h=" << h;
  }
}

TEST(Pbs, CompiledCircuitsVerify) {
  for (int k : {4, 6}) {
    for (int h = 0; h <= k; ++h) {
      MiningOptions opts;
      opts.exhaustive_cap = 1 << 10;
      for (const HadamardPlacement& p : placements_for(k, h, opts)) {
        for (const SelectionPolicy& policy :
             {SelectionPolicy::rule_based(), SelectionPolicy::empirical()}) {
          CompilationResult r = compile_pbs(p, policy);
          EXPECT_TRUE(verify(r.circuit, p).pass)
              << "k=" << k << " " << p.str();
          EXPECT_EQ(r.two_qubit, two_qubit_count(r.circuit));
        }
      }
    }
  }
}

TEST(Pbs, BeatsOrMatchesMidEverywhereAtTargetWidth) {
  for (int h = 0; h <= 20; ++h) {
    std::vector<int> ih;
    for (int i = 1; i <= h; ++i) ih.push_back(i);
    HadamardPlacement p(20, ih);
    CompilationResult pbs = compile_pbs(p, SelectionPolicy::default_for(20));
    CompilationResult mid = emit(StrategyId::Mid, p);
    EXPECT_LE(pbs.two_qubit, mid.two_qubit) << "h=" << h;
  }
}

TEST(Pbs, RuleBasedCanLoseNarrowlyWhereEmpiricalWins) {
  // At k = 12, h = 2 the crossover rule picks Low (67 two-qubit gates) while
  // Mid costs 66; empirical selection recovers the cheaper circuit. This is
  // why empirical mode is authoritative below the default-rule width cutoff.
  HadamardPlacement p(12, {1, 2});
  CompilationResult rule = compile_pbs(p, SelectionPolicy::rule_based());
  CompilationResult emp = compile_pbs(p, SelectionPolicy::empirical());
  EXPECT_EQ(rule.strategy, StrategyId::Low);
  EXPECT_EQ(rule.two_qubit, 67);
  EXPECT_EQ(emp.strategy, StrategyId::Mid);
  EXPECT_EQ(emp.two_qubit, 66);
}

}  // namespace
}  // namespace ckc
