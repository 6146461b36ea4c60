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

#include "ckc/tableau.hpp"

#include <stdexcept>

namespace ckc {

SymplecticMatrix SymplecticMatrix::identity(std::size_t n) {
  SymplecticMatrix f;
  f.n = n;
  f.rows.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    f.rows.push_back(PauliOperator::single(n, static_cast<int>(i) + 1, 'X'));
  for (std::size_t i = 0; i < n; ++i)
    f.rows.push_back(PauliOperator::single(n, static_cast<int>(i) + 1, 'Z'));
  return f;
}

bool SymplecticMatrix::is_symplectic() const {
  if (rows.size() != 2 * n) return false;
  for (const auto& r : rows)
    if (r.num_qubits() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_product(rows[i], rows[j]) != 0) return false;
      if (symplectic_product(rows[n + i], rows[n + j]) != 0) return false;
      int want = i == j ? 1 : 0;
      if (symplectic_product(rows[i], rows[n + j]) != want) return false;
    }
  }
  return true;
}

bool SymplecticMatrix::is_identity() const {
  if (rows.size() != 2 * n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i] != PauliOperator::single(n, static_cast<int>(i) + 1, 'X'))
      return false;
    if (rows[n + i] != PauliOperator::single(n, static_cast<int>(i) + 1, 'Z'))
      return false;
  }
  return true;
}

SymplecticMatrix tableau_of(const Circuit& c) {
  SymplecticMatrix f = SymplecticMatrix::identity(static_cast<std::size_t>(c.n));
  for (const auto& g : c.gates)
    for (auto& row : f.rows) apply_gate_in_place(row, g);
  return f;
}

PauliOperator apply_tableau(const SymplecticMatrix& f, const PauliOperator& p) {
  if (p.num_qubits() != f.n)
    throw std::invalid_argument("Pauli width mismatch");
  PhasedPauli acc(f.n);
  acc.i_exp = p.sign == +1 ? 0 : 2;
  for (std::size_t i = 0; i < f.n; ++i) {
    bool xb = p.x.get(i);
    bool zb = p.z.get(i);
    if (xb) acc.mul_right(PhasedPauli(f.rows[i]));
    if (zb) acc.mul_right(PhasedPauli(f.rows[f.n + i]));
    // Reproduce the canonical i^{x_i z_i} of the preimage wire.
    if (xb && zb) acc.i_exp = (acc.i_exp + 1) % 4;
  }
  return acc.to_pauli();
}

SymplecticMatrix multiply(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("tableau size mismatch");
  SymplecticMatrix out;
  out.n = a.n;
  out.rows.reserve(2 * a.n);
  for (const auto& row : a.rows) out.rows.push_back(apply_tableau(b, row));
  return out;
}

SymplecticMatrix inverse(const SymplecticMatrix& f) {
  const std::size_t n = f.n;
  // Bit part: F^{-1} = Omega F^T Omega, i.e. G[i][j] = F[swap(j)][swap(i)]
  // where swap exchanges the X and Z halves.
  auto bit = [&](std::size_t r, std::size_t c) {
    const PauliOperator& row = f.rows[r];
    return c < n ? row.x.get(c) : row.z.get(c - n);
  };
  auto swap_half = [&](std::size_t i) { return i < n ? i + n : i - n; };
  SymplecticMatrix g;
  g.n = n;
  g.rows.assign(2 * n, PauliOperator(n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if (!bit(swap_half(j), swap_half(i))) continue;
      if (j < n)
        g.rows[i].x.set(j, true);
      else
        g.rows[i].z.set(j - n, true);
    }
  }
  // Sign part: require F(G_i) to be exactly the basis Pauli of slot i.
  for (std::size_t i = 0; i < 2 * n; ++i) {
    PauliOperator image = apply_tableau(f, g.rows[i]);
    g.rows[i].sign = image.sign;
  }
  return g;
}

}  // namespace ckc
