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

#include "ckc/code.hpp"

#include <stdexcept>

namespace ckc {

CodeInstance::CodeInstance(int k_logical) : k(k_logical), n(k_logical + 2) {
  if (k < 1) throw std::invalid_argument("logical width must be positive");
  if (k % 2 != 0)
    throw std::invalid_argument("code family requires an even logical width");
}

std::pair<PauliOperator, PauliOperator> stabilizers(const CodeInstance& code) {
  std::size_t n = static_cast<std::size_t>(code.n);
  PauliOperator sx(n);
  PauliOperator sz(n);
  for (std::size_t i = 0; i < n; ++i) {
    sx.x.set(i, true);
    sz.z.set(i, true);
  }
  return {sx, sz};
}

std::pair<PauliOperator, PauliOperator> logical_reps(const CodeInstance& code,
                                                     int i) {
  if (i < 1 || i > code.k) throw std::invalid_argument("logical wire out of range");
  std::size_t n = static_cast<std::size_t>(code.n);
  PauliOperator lx(n);
  lx.x.set(0, true);
  lx.x.set(static_cast<std::size_t>(embed_wire(i)) - 1, true);
  PauliOperator lz(n);
  lz.z.set(static_cast<std::size_t>(embed_wire(i)) - 1, true);
  lz.z.set(n - 1, true);
  return {lx, lz};
}

PauliOperator embed_logical_pauli(const CodeInstance& code,
                                  const PauliOperator& logical) {
  if (logical.num_qubits() != static_cast<std::size_t>(code.k))
    throw std::invalid_argument("logical Pauli width mismatch");
  PhasedPauli acc(static_cast<std::size_t>(code.n));
  acc.i_exp = logical.sign == +1 ? 0 : 2;
  for (int i = 1; i <= code.k; ++i) {
    bool xb = logical.x.get(static_cast<std::size_t>(i) - 1);
    bool zb = logical.z.get(static_cast<std::size_t>(i) - 1);
    auto reps = logical_reps(code, i);
    if (xb) acc.mul_right(PhasedPauli(reps.first));
    if (zb) acc.mul_right(PhasedPauli(reps.second));
    // Reproduce the canonical i^{x_i z_i} of the logical wire.
    if (xb && zb) acc.i_exp = (acc.i_exp + 1) % 4;
  }
  return acc.to_pauli();
}

}  // namespace ckc
