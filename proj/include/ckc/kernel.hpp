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

#ifndef CKC_KERNEL_HPP_
#define CKC_KERNEL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ckc/circuit.hpp"
#include "ckc/pauli.hpp"

namespace ckc {

// Which of the k kernel wires carry the Hadamard conjugation layer.
struct HadamardPlacement {
  int k = 0;
  std::vector<int> ih;  // sorted ascending, unique, values in 1..k

  HadamardPlacement() = default;
  HadamardPlacement(int k_wires, std::vector<int> hadamard_wires);

  int h() const { return static_cast<int>(ih.size()); }
  bool has(int wire) const;
  std::vector<int> complement() const;

  // Text form "k=20;Ih=1,3,5" ("Ih=" empty for the empty set).
  static HadamardPlacement parse(std::string_view text);
  std::string str() const;

  bool operator==(const HadamardPlacement&) const = default;
};

// The simulation kernel on k wires:
//   H_{Ih} . CX(1->k) .. CX(k-1->k) . P_k . CX(k-1->k) .. CX(1->k) . H_{Ih}
Circuit build_cqsk(const HadamardPlacement& p);

// Conjugation images of the single-wire generators under the kernel.
struct LogicalAction {
  std::vector<PauliOperator> x_images;  // index i-1 holds the image of X_i
  std::vector<PauliOperator> z_images;

  static LogicalAction identity(int k);
};

LogicalAction logical_action(const HadamardPlacement& p);

}  // namespace ckc

#endif  // CKC_KERNEL_HPP_
