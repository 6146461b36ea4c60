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

#ifndef CKC_CODE_HPP_
#define CKC_CODE_HPP_

#include <utility>

#include "ckc/pauli.hpp"

namespace ckc {

// Distance-2 error-detecting code on n = k + 2 physical qubits with
// stabilizers X_[n] and Z_[n]. Logical wire i sits on physical wire i + 1.
struct CodeInstance {
  int k;
  int n;

  explicit CodeInstance(int k_logical);
};

inline int embed_wire(int logical_wire) { return logical_wire + 1; }

// (X_[n], Z_[n]).
std::pair<PauliOperator, PauliOperator> stabilizers(const CodeInstance& code);

// Representatives (X_1 X_{i+1}, Z_{i+1} Z_n) for logical wire i in 1..k.
std::pair<PauliOperator, PauliOperator> logical_reps(const CodeInstance& code,
                                                     int i);

// Multiplies logical_reps factors per the logical operator's binary form,
// ascending logical index, X-part before Z-part per wire. Exact sign.
PauliOperator embed_logical_pauli(const CodeInstance& code,
                                  const PauliOperator& logical);

}  // namespace ckc

#endif  // CKC_CODE_HPP_
