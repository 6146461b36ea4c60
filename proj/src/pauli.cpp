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

#include "ckc/pauli.hpp"

#include <stdexcept>

namespace ckc {

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < num_qubits(); ++i)
    if (x.get(i) || z.get(i)) ++w;
  return w;
}

PauliOperator PauliOperator::single(std::size_t n, int wire, char kind) {
  if (wire < 1 || static_cast<std::size_t>(wire) > n)
    throw std::invalid_argument("wire index out of range");
  PauliOperator p(n);
  std::size_t i = static_cast<std::size_t>(wire) - 1;
  switch (kind) {
    case 'X':
      p.x.set(i, true);
      break;
    case 'Y':
      p.x.set(i, true);
      p.z.set(i, true);
      break;
    case 'Z':
      p.z.set(i, true);
      break;
    default:
      throw std::invalid_argument("Pauli kind must be X, Y or Z");
  }
  return p;
}

PauliOperator PauliOperator::from_label(std::string_view label) {
  int sign = +1;
  if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
    sign = label.front() == '+' ? +1 : -1;
    label.remove_prefix(1);
  }
  PauliOperator p(label.size());
  p.sign = sign;
  for (std::size_t i = 0; i < label.size(); ++i) {
    switch (label[i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i, true);
        break;
      case 'Y':
        p.x.set(i, true);
        p.z.set(i, true);
        break;
      case 'Z':
        p.z.set(i, true);
        break;
      default:
        throw std::invalid_argument("Pauli label must use IXYZ");
    }
  }
  return p;
}

std::string PauliOperator::str() const {
  std::string s(1, sign == +1 ? '+' : '-');
  bool trivial = true;
  for (std::size_t i = 0; i < num_qubits(); ++i) {
    bool xb = x.get(i);
    bool zb = z.get(i);
    if (!xb && !zb) continue;
    trivial = false;
    s += xb ? (zb ? 'Y' : 'X') : 'Z';
    s += std::to_string(i + 1);
  }
  if (trivial) s += 'I';
  return s;
}

void PhasedPauli::mul_right(const PhasedPauli& o) {
  if (x.size() != o.x.size())
    throw std::invalid_argument("Pauli width mismatch");
  // Per wire, X^a Z^b X^c Z^d = (-1)^{bc} X^{a+c} Z^{b+d}; collecting the
  // canonical i^{xz} factors of both inputs and the result gives
  //   i_exp += ab + cd + 2bc - (a^c)(b^d)  (mod 4).
  unsigned phase = i_exp + o.i_exp;
  phase += static_cast<unsigned>(x.count_and(z) % 4);
  phase += static_cast<unsigned>(o.x.count_and(o.z) % 4);
  phase += static_cast<unsigned>(2 * (z.count_and(o.x) % 2));
  x ^= o.x;
  z ^= o.z;
  phase += 4 - static_cast<unsigned>(x.count_and(z) % 4);
  i_exp = phase % 4;
}

PauliOperator PhasedPauli::to_pauli() const {
  if (i_exp % 2 != 0)
    throw std::logic_error("phased Pauli is not Hermitian");
  PauliOperator p;
  p.x = x;
  p.z = z;
  p.sign = i_exp == 0 ? +1 : -1;
  return p;
}

PauliProduct mul(const PauliOperator& p, const PauliOperator& q) {
  PhasedPauli acc(p);
  acc.mul_right(PhasedPauli(q));
  PauliProduct out;
  out.i_parity = (acc.i_exp & 1u) != 0;
  out.value.x = acc.x;
  out.value.z = acc.z;
  out.value.sign = (acc.i_exp & 2u) ? -1 : +1;
  return out;
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("Pauli width mismatch");
  return (p.x.parity_and(q.z) ^ p.z.parity_and(q.x)) ? 1 : 0;
}

void apply_gate_in_place(PauliOperator& p, const Gate& g) {
  std::size_t a = static_cast<std::size_t>(g.q1) - 1;
  switch (g.kind) {
    case GateKind::H: {
      bool xa = p.x.get(a), za = p.z.get(a);
      if (xa && za) p.sign = -p.sign;
      p.x.set(a, za);
      p.z.set(a, xa);
      break;
    }
    case GateKind::P: {
      bool xa = p.x.get(a), za = p.z.get(a);
      if (xa && za) p.sign = -p.sign;
      p.z.set(a, za ^ xa);
      break;
    }
    case GateKind::Pdg: {
      bool xa = p.x.get(a), za = p.z.get(a);
      if (xa && !za) p.sign = -p.sign;
      p.z.set(a, za ^ xa);
      break;
    }
    case GateKind::X: {
      if (p.z.get(a)) p.sign = -p.sign;
      break;
    }
    case GateKind::Z: {
      if (p.x.get(a)) p.sign = -p.sign;
      break;
    }
    case GateKind::CX: {
      std::size_t t = static_cast<std::size_t>(g.q2) - 1;
      bool xc = p.x.get(a), zc = p.z.get(a);
      bool xt = p.x.get(t), zt = p.z.get(t);
      if (xc && zt && (xt == zc)) p.sign = -p.sign;
      p.x.set(t, xt ^ xc);
      p.z.set(a, zc ^ zt);
      break;
    }
    case GateKind::CZ: {
      std::size_t b = static_cast<std::size_t>(g.q2) - 1;
      bool xa = p.x.get(a), za = p.z.get(a);
      bool xb = p.x.get(b), zb = p.z.get(b);
      if (xa && xb && (za != zb)) p.sign = -p.sign;
      p.z.set(a, za ^ xb);
      p.z.set(b, zb ^ xa);
      break;
    }
  }
}

PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& g) {
  PauliOperator out = p;
  apply_gate_in_place(out, g);
  return out;
}

PauliOperator conjugate_by_circuit(const PauliOperator& p, const Circuit& c) {
  if (p.num_qubits() != static_cast<std::size_t>(c.n))
    throw std::invalid_argument("Pauli width mismatch");
  PauliOperator out = p;
  for (const auto& g : c.gates) apply_gate_in_place(out, g);
  return out;
}

SpanReduction reduce_mod_span(const PauliOperator& p,
                              std::span<const PauliOperator> generators) {
  const std::size_t n = p.num_qubits();
  const std::size_t m = generators.size();
  const std::size_t cols = 2 * n;

  // Row-echelon form of the generators' (x|z) rows with combination tracking.
  std::vector<BitVec> rows(m, BitVec(cols));
  std::vector<BitVec> combos(m, BitVec(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (generators[i].num_qubits() != n)
      throw std::invalid_argument("generator width mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      rows[i].set(j, generators[i].x.get(j));
      rows[i].set(n + j, generators[i].z.get(j));
    }
    combos[i].set(i, true);
  }
  std::vector<std::size_t> pivot_of_row(m, cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t pivot = m;
    for (std::size_t r = rank; r < m; ++r) {
      if (rows[r].get(c)) {
        pivot = r;
        break;
      }
    }
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(combos[rank], combos[pivot]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != rank && rows[r].get(c)) {
        rows[r] ^= rows[rank];
        combos[r] ^= combos[rank];
      }
    }
    pivot_of_row[rank] = c;
    ++rank;
  }

  BitVec residual(cols);
  for (std::size_t j = 0; j < n; ++j) {
    residual.set(j, p.x.get(j));
    residual.set(n + j, p.z.get(j));
  }
  SpanReduction out;
  out.combination = BitVec(m);
  for (std::size_t r = 0; r < rank; ++r) {
    if (residual.get(pivot_of_row[r])) {
      residual ^= rows[r];
      out.combination ^= combos[r];
    }
  }
  out.in_span = !residual.any();
  if (!out.in_span) return out;

  PhasedPauli prod(n);
  for (std::size_t i = 0; i < m; ++i)
    if (out.combination.get(i)) prod.mul_right(PhasedPauli(generators[i]));
  PhasedPauli target(p);
  unsigned diff = (4 + target.i_exp - prod.i_exp) % 4;
  if (diff % 2 != 0)
    throw std::logic_error("span product differs from target by a factor of i");
  out.residual_sign = diff == 0 ? +1 : -1;
  return out;
}

}  // namespace ckc
