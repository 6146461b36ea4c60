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

#include "ckc/lcs.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace ckc {

ConstraintSystem build_constraints(const HadamardPlacement& p) {
  CodeInstance code(p.k);
  LogicalAction act = logical_action(p);
  ConstraintSystem cs;
  cs.k = p.k;
  cs.n = code.n;
  for (int i = 1; i <= p.k; ++i) {
    auto reps = logical_reps(code, i);
    cs.rows.emplace_back(
        reps.first,
        embed_logical_pauli(code, act.x_images[static_cast<std::size_t>(i) - 1]));
  }
  for (int i = 1; i <= p.k; ++i) {
    auto reps = logical_reps(code, i);
    cs.rows.emplace_back(
        reps.second,
        embed_logical_pauli(code, act.z_images[static_cast<std::size_t>(i) - 1]));
  }
  auto stab = stabilizers(code);
  cs.rows.emplace_back(stab.first, stab.first);
  cs.rows.emplace_back(stab.second, stab.second);
  return cs;
}

namespace {

BitVec pauli_bits(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    v.set(i, p.x.get(i));
    v.set(n + i, p.z.get(i));
  }
  return v;
}

// Finds any Pauli v with symplectic_product(v, constraints[j]) == b[j].
std::optional<PauliOperator> solve_pairings(
    const std::vector<PauliOperator>& constraints, const std::vector<bool>& b,
    std::size_t n) {
  const std::size_t cols = 2 * n;
  std::vector<BitVec> rows;  // [c.z | c.x | b] over 2n+1 columns
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    BitVec row(cols + 1);
    for (std::size_t i = 0; i < n; ++i) {
      row.set(i, constraints[j].z.get(i));
      row.set(n + i, constraints[j].x.get(i));
    }
    row.set(cols, b[j]);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].get(cols)) return std::nullopt;
  PauliOperator v(n);
  for (std::size_t r = 0; r < rank; ++r) {
    if (!rows[r].get(cols)) continue;
    std::size_t col = pivot_col[r];
    if (col < n)
      v.x.set(col, true);
    else
      v.z.set(col - n, true);
  }
  return v;
}

// Exact tableau with in_rows[i] |-> out_rows[i], both full signed symplectic
// bases of the same 2n-dimensional space.
SymplecticMatrix solve_from_basis(const std::vector<PauliOperator>& in_rows,
                                  const std::vector<PauliOperator>& out_rows,
                                  std::size_t n) {
  const std::size_t dim = 2 * n;
  if (in_rows.size() != dim || out_rows.size() != dim)
    throw std::logic_error("basis size mismatch");
  // Invert the input bit basis by Gauss-Jordan elimination.
  std::vector<BitVec> mat(dim);
  std::vector<BitVec> inv(dim, BitVec(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    mat[i] = pauli_bits(in_rows[i]);
    inv[i].set(i, true);
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = dim;
    for (std::size_t r = col; r < dim; ++r) {
      if (mat[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == dim) throw std::logic_error("constraint basis is singular");
    std::swap(mat[col], mat[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != col && mat[r].get(col)) {
        mat[r] ^= mat[col];
        inv[r] ^= inv[col];
      }
    }
  }
  SymplecticMatrix f;
  f.n = n;
  f.rows.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    // Basis expansion of the i-th computational row; the same combination of
    // outputs, multiplied in ascending order, is its image.
    PhasedPauli pin(n);
    PhasedPauli pout(n);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!inv[i].get(j)) continue;
      pin.mul_right(PhasedPauli(in_rows[j]));
      pout.mul_right(PhasedPauli(out_rows[j]));
    }
    unsigned diff = (4 + pout.i_exp - pin.i_exp) % 4;
    if (diff % 2 != 0)
      throw std::logic_error("basis image differs by a factor of i");
    PauliOperator row(n);
    row.x = pout.x;
    row.z = pout.z;
    row.sign = diff == 0 ? +1 : -1;
    f.rows.push_back(std::move(row));
  }
  if (!f.is_symplectic())
    throw std::logic_error("solved tableau is not symplectic");
  return f;
}

struct CompletedBasis {
  std::vector<PauliOperator> in_rows;   // 2n rows
  std::vector<PauliOperator> out_rows;  // 2n rows, pure-error images last
};

CompletedBasis complete_basis(const ConstraintSystem& cs) {
  const std::size_t n = static_cast<std::size_t>(cs.n);
  CompletedBasis basis;
  std::vector<PauliOperator> outs;
  for (const auto& [input, output] : cs.rows) {
    basis.in_rows.push_back(input);
    outs.push_back(output);
  }
  // Pure errors: the destabilizer partners of X_[n] and Z_[n].
  PauliOperator e1 = PauliOperator::single(n, static_cast<int>(n), 'Z');
  PauliOperator e2 = PauliOperator::single(n, 1, 'X');

  std::vector<bool> b1;
  for (const auto& row : basis.in_rows)
    b1.push_back(symplectic_product(e1, row) != 0);
  auto e1_out = solve_pairings(outs, b1, n);
  if (!e1_out) throw std::logic_error("pure-error completion failed");

  std::vector<PauliOperator> cons2 = outs;
  cons2.push_back(*e1_out);
  std::vector<bool> b2;
  for (const auto& row : basis.in_rows)
    b2.push_back(symplectic_product(e2, row) != 0);
  b2.push_back(symplectic_product(e2, e1) != 0);
  auto e2_out = solve_pairings(cons2, b2, n);
  if (!e2_out) throw std::logic_error("pure-error completion failed");

  basis.in_rows.push_back(std::move(e1));
  basis.in_rows.push_back(std::move(e2));
  basis.out_rows = std::move(outs);
  basis.out_rows.push_back(std::move(*e1_out));
  basis.out_rows.push_back(std::move(*e2_out));
  return basis;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// C(k,h), saturating just above the cap.
unsigned long long binomial_capped(int k, int h, unsigned long long cap) {
  unsigned long long c = 1;
  for (int i = 0; i < h; ++i) {
    c = c * static_cast<unsigned long long>(k - i) /
        static_cast<unsigned long long>(i + 1);
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

std::vector<HadamardPlacement> placements_for(int k, int h,
                                              const MiningOptions& opt) {
  if (k < 1 || h < 0 || h > k) throw std::invalid_argument("bad kernel shape");
  std::vector<HadamardPlacement> out;
  unsigned long long cap =
      std::max(static_cast<unsigned long long>(opt.exhaustive_cap),
               static_cast<unsigned long long>(opt.samples));
  if (binomial_capped(k, h, cap) <= cap) {
    std::vector<int> idx(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      out.emplace_back(k, idx);
      int pos = h - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - (h - 1 - pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < h; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
  }
  std::uint64_t state = opt.seed ^ (static_cast<std::uint64_t>(k) << 32) ^
                        static_cast<std::uint64_t>(h);
  std::set<std::vector<int>> seen;
  int attempts = 0;
  while (static_cast<int>(seen.size()) < opt.samples) {
    if (++attempts > 1000 * opt.samples)
      throw std::logic_error("placement sampling stalled");
    std::vector<int> pool(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < h; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      splitmix64(state) % static_cast<std::uint64_t>(k - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + h);
    std::sort(subset.begin(), subset.end());
    seen.insert(std::move(subset));
  }
  for (const auto& subset : seen) out.emplace_back(k, subset);
  return out;
}

SymplecticMatrix solve_base(const ConstraintSystem& cs) {
  CompletedBasis basis = complete_basis(cs);
  return solve_from_basis(basis.in_rows, basis.out_rows,
                          static_cast<std::size_t>(cs.n));
}

std::vector<SolutionDescriptor> enumerate_solutions(const ConstraintSystem& cs) {
  const std::size_t n = static_cast<std::size_t>(cs.n);
  CompletedBasis basis = complete_basis(cs);
  CodeInstance code(cs.k);
  auto stab = stabilizers(code);
  std::vector<SolutionDescriptor> out;
  for (int label = 0; label < 8; ++label) {
    int a11 = (label >> 2) & 1;
    int a12 = (label >> 1) & 1;
    int a22 = label & 1;
    std::vector<PauliOperator> outs = basis.out_rows;
    PauliOperator& e1 = outs[outs.size() - 2];
    PauliOperator& e2 = outs[outs.size() - 1];
    if (a11) e1.x ^= stab.first.x;
    if (a12) {
      e1.z ^= stab.second.z;
      e2.x ^= stab.first.x;
    }
    if (a22) e2.z ^= stab.second.z;
    SolutionDescriptor desc;
    desc.label = label;
    desc.a = {{{a11, a12}, {a12, a22}}};
    desc.f = solve_from_basis(basis.in_rows, outs, n);
    desc.circuit = synthesize(desc.f);
    out.push_back(std::move(desc));
  }
  return out;
}

Circuit synthesize(const SymplecticMatrix& f) {
  if (!f.is_symplectic())
    throw std::invalid_argument("matrix is not symplectic");
  const std::size_t n = f.n;
  SymplecticMatrix g = f;
  std::vector<Gate> applied;
  auto apply = [&](const Gate& gate) {
    for (auto& row : g.rows) apply_gate_in_place(row, gate);
    applied.push_back(gate);
  };

  for (std::size_t j = 0; j < n; ++j) {
    const int w = static_cast<int>(j) + 1;
    // (a) Put an X pivot on wire j of the X row.
    if (!g.rows[j].x.get(j)) {
      if (g.rows[j].z.get(j)) {
        apply(Gate::h(w));
      } else {
        std::size_t src = n;
        for (std::size_t l = j + 1; l < n && src == n; ++l)
          if (g.rows[j].x.get(l)) src = l;
        if (src == n) {
          for (std::size_t l = j + 1; l < n && src == n; ++l)
            if (g.rows[j].z.get(l)) src = l;
          if (src == n) throw std::logic_error("synthesis pivot not found");
          apply(Gate::h(static_cast<int>(src) + 1));
        }
        apply(Gate::cx(static_cast<int>(src) + 1, w));
      }
    }
    // (b) Clear the X-row tail.
    for (std::size_t l = j + 1; l < n; ++l)
      if (g.rows[j].x.get(l)) apply(Gate::cx(w, static_cast<int>(l) + 1));
    // (c) Clear the X-row Z part.
    if (g.rows[j].z.get(j)) apply(Gate::pdg(w));
    for (std::size_t l = j + 1; l < n; ++l)
      if (g.rows[j].z.get(l)) apply(Gate::cz(w, static_cast<int>(l) + 1));
    // (d) Reduce the Z row to Z_w without disturbing the X row.
    for (std::size_t l = j + 1; l < n; ++l)
      if (g.rows[n + j].x.get(l) && g.rows[n + j].z.get(l))
        apply(Gate::pdg(static_cast<int>(l) + 1));
    for (std::size_t l = j + 1; l < n; ++l)
      if (g.rows[n + j].x.get(l)) apply(Gate::h(static_cast<int>(l) + 1));
    for (std::size_t l = j + 1; l < n; ++l)
      if (g.rows[n + j].z.get(l)) apply(Gate::cx(static_cast<int>(l) + 1, w));
    if (g.rows[n + j].x.get(j)) {
      apply(Gate::h(w));
      apply(Gate::pdg(w));
      apply(Gate::h(w));
    }
  }
  // (e) Trailing sign layer.
  for (std::size_t j = 0; j < n; ++j) {
    const int w = static_cast<int>(j) + 1;
    if (g.rows[j].sign < 0) apply(Gate::z(w));
    if (g.rows[n + j].sign < 0) apply(Gate::x(w));
  }
  if (!g.is_identity()) throw std::logic_error("synthesis did not converge");

  Circuit out(static_cast<int>(n));
  for (auto it = applied.rbegin(); it != applied.rend(); ++it)
    out.append(it->inverse());
  return out;
}

std::vector<int> classify_position_invariant(int k, int h,
                                             const MiningOptions& opt) {
  auto placements = placements_for(k, h, opt);
  std::array<std::optional<int>, 8> first_depth;
  std::array<bool, 8> invariant;
  invariant.fill(true);
  for (const auto& p : placements) {
    auto sols = enumerate_solutions(build_constraints(p));
    for (const auto& sol : sols) {
      int d = depth(sol.circuit);
      auto& ref = first_depth[static_cast<std::size_t>(sol.label)];
      if (!ref)
        ref = d;
      else if (*ref != d)
        invariant[static_cast<std::size_t>(sol.label)] = false;
    }
  }
  std::vector<int> out;
  for (int label = 0; label < 8; ++label)
    if (invariant[static_cast<std::size_t>(label)]) out.push_back(label);
  return out;
}

std::vector<SweepRow> depth_sweep(int k, const std::vector<int>& labels,
                                  const std::vector<HadamardPlacement>& placements) {
  std::vector<SweepRow> out;
  for (const auto& p : placements) {
    if (p.k != k) throw std::invalid_argument("placement width mismatch");
    auto sols = enumerate_solutions(build_constraints(p));
    for (int label : labels) {
      if (label < 0 || label > 7)
        throw std::invalid_argument("solution label out of range");
      const auto& sol = sols[static_cast<std::size_t>(label)];
      SweepRow row;
      row.placement = p;
      row.h = p.h();
      row.label = label;
      row.depth = depth(sol.circuit);
      row.two_qubit = two_qubit_count(sol.circuit);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace ckc
