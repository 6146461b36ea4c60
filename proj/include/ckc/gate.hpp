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

#ifndef CKC_GATE_HPP_
#define CKC_GATE_HPP_

#include <stdexcept>
#include <string>

namespace ckc {

// Gate alphabet. Pdg (the inverse phase gate) is internal only: it never
// appears in serialized circuits, where it is expanded into three P gates.
enum class GateKind { H, P, Pdg, X, Z, CX, CZ };

// A gate on 1-based wires. q2 is 0 for single-qubit gates. For CX, q1 is the
// control and q2 the target. CZ wires are stored in ascending order.
struct Gate {
  GateKind kind;
  int q1;
  int q2;

  static Gate h(int q) { return {GateKind::H, q, 0}; }
  static Gate p(int q) { return {GateKind::P, q, 0}; }
  static Gate pdg(int q) { return {GateKind::Pdg, q, 0}; }
  static Gate x(int q) { return {GateKind::X, q, 0}; }
  static Gate z(int q) { return {GateKind::Z, q, 0}; }

  static Gate cx(int c, int t) {
    if (c == t) throw std::invalid_argument("degenerate two-qubit gate");
    return {GateKind::CX, c, t};
  }

  static Gate cz(int a, int b) {
    if (a == b) throw std::invalid_argument("degenerate two-qubit gate");
    if (a > b) std::swap(a, b);
    return {GateKind::CZ, a, b};
  }

  bool is_two_qubit() const {
    return kind == GateKind::CX || kind == GateKind::CZ;
  }

  Gate inverse() const {
    if (kind == GateKind::P) return {GateKind::Pdg, q1, q2};
    if (kind == GateKind::Pdg) return {GateKind::P, q1, q2};
    return *this;
  }

  bool operator==(const Gate&) const = default;
};

std::string gate_name(GateKind kind);

}  // namespace ckc

#endif  // CKC_GATE_HPP_
