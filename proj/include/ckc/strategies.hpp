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

#ifndef CKC_STRATEGIES_HPP_
#define CKC_STRATEGIES_HPP_

#include <optional>
#include <string>

#include "ckc/circuit.hpp"
#include "ckc/kernel.hpp"

namespace ckc {

enum class StrategyId { Low, Mid, High };
enum class HadamardParity { Even, Odd };

std::string strategy_name(StrategyId s);
std::optional<StrategyId> strategy_from_name(std::string_view name);

struct CompilationResult {
  Circuit circuit;
  StrategyId strategy;
  HadamardParity parity;
  int depth = 0;
  int two_qubit = 0;
};

// Three-block emitters for the logical realization on n = k + 2 wires.
// Gates are emitted for the canonical placement {1..h} and relabeled onto the
// actual placement, so depth and gate counts depend only on (k, h). Every
// emitter's output passes the verifier; a residual correction (an X/Z sign
// layer in the closed-form cases) is appended whenever the raw block
// structure alone does not.
Circuit emit_mid_even(const HadamardPlacement& p);
Circuit emit_mid_odd(const HadamardPlacement& p);
Circuit emit_low_even(const HadamardPlacement& p);
Circuit emit_low_odd(const HadamardPlacement& p);
Circuit emit_high_even(const HadamardPlacement& p);
Circuit emit_high_odd(const HadamardPlacement& p);

CompilationResult emit(StrategyId strategy, const HadamardPlacement& p);

// Closed-form two-qubit counts for every strategy and parity: the even-h
// formulas evaluated at block sizes (h, k-h), or (h+1, k-h+1) for odd h
// where the end wires join the blocks. nullopt is reserved for shapes with
// no closed form; every currently supported shape has one.
std::optional<long> closed_form_two_qubit_count(StrategyId s, int k, int h);

}  // namespace ckc

#endif  // CKC_STRATEGIES_HPP_
