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

#ifndef CKC_PBS_HPP_
#define CKC_PBS_HPP_

#include "ckc/strategies.hpp"

namespace ckc {

enum class PolicyMode { RuleBased, Empirical };

struct SelectionPolicy {
  PolicyMode mode = PolicyMode::Empirical;

  static SelectionPolicy rule_based() { return {PolicyMode::RuleBased}; }
  static SelectionPolicy empirical() { return {PolicyMode::Empirical}; }
  // Rule-based thresholds are calibrated for k > 10 only.
  static SelectionPolicy default_for(int k) {
    return k > 10 ? rule_based() : empirical();
  }
};

// Rule-based: Low for h < k/4, Mid for k/4 <= h <= 3k/4 (inclusive), High for
// h > 3k/4; h = 0 picks Low and h = k picks High. Empirical: emit all three
// and take the smallest two-qubit count, ties broken Low < Mid < High.
StrategyId select_strategy(int k, int h, const SelectionPolicy& policy);

CompilationResult compile_pbs(const HadamardPlacement& p,
                              const SelectionPolicy& policy);

}  // namespace ckc

#endif  // CKC_PBS_HPP_
