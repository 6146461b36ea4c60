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

#ifndef CKC_PAULI_HPP_
#define CKC_PAULI_HPP_

#include <span>
#include <string>
#include <string_view>

#include "ckc/bitvec.hpp"
#include "ckc/circuit.hpp"
#include "ckc/gate.hpp"

namespace ckc {

// An n-qubit Hermitian Pauli in binary symplectic form. The represented
// operator is
//
//   sign * prod_i  i^{x_i z_i} X_i^{x_i} Z_i^{z_i}
//
// so (x,z) = (1,1) is the Hermitian Y. Wires are 1-based in the API; bit i-1
// of x/z belongs to wire i.
struct PauliOperator {
  BitVec x;
  BitVec z;
  int sign = +1;  // +1 or -1

  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x(n), z(n) {}

  std::size_t num_qubits() const { return x.size(); }
  bool is_identity() const { return !x.any() && !z.any() && sign == +1; }
  std::size_t weight() const;

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator single(std::size_t n, int wire, char kind);
  // Label form: optional sign, then one of IXYZ per wire starting at wire 1,
  // e.g. "-XIZY".
  static PauliOperator from_label(std::string_view label);

  std::string str() const;

  bool operator==(const PauliOperator&) const = default;
};

// A Pauli word with an explicit power of i, used where intermediate products
// leave the Hermitian form: value = i^i_exp * prod_i i^{x_i z_i} X^x Z^z.
struct PhasedPauli {
  BitVec x;
  BitVec z;
  unsigned i_exp = 0;  // mod 4

  PhasedPauli() = default;
  explicit PhasedPauli(std::size_t n) : x(n), z(n) {}
  explicit PhasedPauli(const PauliOperator& p)
      : x(p.x), z(p.z), i_exp(p.sign == +1 ? 0 : 2) {}

  // Right-multiplies by o, tracking the exact power of i.
  void mul_right(const PhasedPauli& o);

  // Requires i_exp even (the Hermitian case).
  PauliOperator to_pauli() const;
};

struct PauliProduct {
  PauliOperator value;
  bool i_parity;  // true iff the true product carries a leftover factor of +-i
};

// p * q. The true operator product equals value.sign * i^{i_parity} times the
// canonical Hermitian word with value's bits.
PauliProduct mul(const PauliOperator& p, const PauliOperator& q);

// 0 if p and q commute, 1 if they anticommute.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);

// g p g^dagger with exact sign tracking.
PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& g);

// Left-to-right fold of conjugate_by_gate; equals U p U^dagger for the
// circuit unitary U (first gate applied first).
PauliOperator conjugate_by_circuit(const PauliOperator& p, const Circuit& c);

// In-place gate conjugation used by hot loops; identical semantics to
// conjugate_by_gate.
void apply_gate_in_place(PauliOperator& p, const Gate& g);

struct SpanReduction {
  bool in_span = false;
  BitVec combination;      // one bit per generator
  int residual_sign = +1;  // p = residual_sign * (product of chosen generators)
};

// GF(2) reduction of p against a generator list, with sign tracking. in_span
// refers to the (x|z) bit vectors; when in_span, residual_sign relates p to
// the product of the selected generators taken in ascending list order.
SpanReduction reduce_mod_span(const PauliOperator& p,
                              std::span<const PauliOperator> generators);

}  // namespace ckc

#endif  // CKC_PAULI_HPP_
