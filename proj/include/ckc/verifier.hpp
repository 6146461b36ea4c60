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

#ifndef CKC_VERIFIER_HPP_
#define CKC_VERIFIER_HPP_

#include <string>
#include <vector>

#include "ckc/circuit.hpp"
#include "ckc/code.hpp"
#include "ckc/kernel.hpp"

namespace ckc {

enum class ConstraintStatus { Exact, UpToStabilizer, SignFlip, Fail };

std::string constraint_status_name(ConstraintStatus s);

struct ConstraintRecord {
  std::string id;  // "X3", "Z1", "stab_X", "stab_Z"
  ConstraintStatus status;
  std::string stabilizer_factor;  // "I", "X[n]", "Z[n]", or "X[n]Z[n]"
  int sign;                       // +1 or -1; meaningful when in span
};

struct VerificationReport {
  int k = 0;
  std::vector<int> ih;
  std::vector<ConstraintRecord> constraints;
  bool pass = false;

  std::string to_json() const;
};

// Per-generator check that the candidate realizes the kernel's conjugation
// action on the embedded logical operators, exactly or up to a +1 stabilizer
// factor.
VerificationReport check_logical_constraints(const Circuit& candidate,
                                             const HadamardPlacement& p);
// Same check against an explicit target action (used for residual and
// solution-space checks against the identity kernel).
VerificationReport check_logical_constraints(const Circuit& candidate,
                                             const LogicalAction& action,
                                             const CodeInstance& code);

// Checks that X_[n] and Z_[n] map into the stabilizer span, sign +-1.
VerificationReport check_stabilizer_preservation(const Circuit& candidate);

// Both checks combined; pass iff every logical constraint is Exact or
// UpToStabilizer with sign +1 and both stabilizer images stay in the span.
VerificationReport verify(const Circuit& candidate, const HadamardPlacement& p);

}  // namespace ckc

#endif  // CKC_VERIFIER_HPP_
