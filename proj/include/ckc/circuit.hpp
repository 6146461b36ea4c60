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

#ifndef CKC_CIRCUIT_HPP_
#define CKC_CIRCUIT_HPP_

#include <string>
#include <vector>

#include "ckc/gate.hpp"

namespace ckc {

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n_wires) : n(n_wires) {}

  void append(const Gate& g);
  void append(const Circuit& c);

  // Reversed gate order with each gate inverted.
  Circuit inverse() const;

  // Rewires the circuit: perm[w] is the new wire for old wire w (1-based,
  // perm[0] unused). perm must be a permutation of 1..n.
  Circuit relabeled(const std::vector<int>& perm) const;
};

// ASAP layering depth: scan gates in order, placing each gate in the earliest
// layer after the last layer occupied by any of its wires.
int depth(const Circuit& c);

int two_qubit_count(const Circuit& c);

// JSON of the form {"n":3,"gates":[{"g":"H","q":[2]},...]}. Pdg is expanded
// into three P gates on serialization.
std::string serialize(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace ckc

#endif  // CKC_CIRCUIT_HPP_
