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

#ifndef CKC_TABLEAU_HPP_
#define CKC_TABLEAU_HPP_

#include <cstddef>
#include <vector>

#include "ckc/circuit.hpp"
#include "ckc/pauli.hpp"

namespace ckc {

// Clifford tableau over GF(2): row r < n is the image of X_{r+1}, row n + r
// the image of Z_{r+1}, each stored as a signed Pauli. The 2n x 2n bit matrix
// F acts on row vectors [a|b] and satisfies F Omega F^T = Omega.
struct SymplecticMatrix {
  std::size_t n = 0;
  std::vector<PauliOperator> rows;  // size 2n

  SymplecticMatrix() = default;
  static SymplecticMatrix identity(std::size_t n);

  bool is_symplectic() const;
  bool is_identity() const;

  bool operator==(const SymplecticMatrix&) const = default;
};

SymplecticMatrix tableau_of(const Circuit& c);

// Image of p under the tableau, sign included.
PauliOperator apply_tableau(const SymplecticMatrix& f, const PauliOperator& p);

// Tableau of "a then b": multiply(a, b).F == a.F * b.F.
SymplecticMatrix multiply(const SymplecticMatrix& a, const SymplecticMatrix& b);

SymplecticMatrix inverse(const SymplecticMatrix& f);

}  // namespace ckc

#endif  // CKC_TABLEAU_HPP_
