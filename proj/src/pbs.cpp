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

namespace ckc {

namespace {

StrategyId rule_based_choice(int k, int h) {
  if (4 * h < k) return StrategyId::Low;     // includes h = 0
  if (4 * h <= 3 * k) return StrategyId::Mid;
  return StrategyId::High;                   // includes h = k
}

// Emits all three strategies for the canonical placement of the given shape
// and returns the one with the smallest two-qubit count (Low < Mid < High on
// ties). Emission depends only on (k, h), so any placement stands in.
StrategyId empirical_choice(int k, int h) {
  std::vector<int> wires;
  for (int i = 1; i <= h; ++i) wires.push_back(i);
  HadamardPlacement canon(k, std::move(wires));
  StrategyId best = StrategyId::Low;
  int best_count = -1;
  for (StrategyId s : {StrategyId::Low, StrategyId::Mid, StrategyId::High}) {
    CompilationResult r = emit(s, canon);
    if (best_count < 0 || r.two_qubit < best_count) {
      best = s;
      best_count = r.two_qubit;
    }
  }
  return best;
}

}  // namespace

StrategyId select_strategy(int k, int h, const SelectionPolicy& policy) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("kernel width must be even");
  if (h < 0 || h > k) throw std::invalid_argument("Hadamard count out of range");
  return policy.mode == PolicyMode::RuleBased ? rule_based_choice(k, h)
                                              : empirical_choice(k, h);
}

CompilationResult compile_pbs(const HadamardPlacement& p,
                              const SelectionPolicy& policy) {
  return emit(select_strategy(p.k, p.h(), policy), p);
}

}  // namespace ckc
