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

#ifndef CKC_LCS_HPP_
#define CKC_LCS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "ckc/circuit.hpp"
#include "ckc/code.hpp"
#include "ckc/kernel.hpp"
#include "ckc/tableau.hpp"

namespace ckc {

// Signed input -> output rows pinning a logical Clifford: 2k embedded logical
// generator images plus the two stabilizer rows.
struct ConstraintSystem {
  int k = 0;
  int n = 0;
  std::vector<std::pair<PauliOperator, PauliOperator>> rows;
};

ConstraintSystem build_constraints(const HadamardPlacement& p);

// One symplectic solution of the constraint system: completes the constrained
// rows to a full symplectic basis with pure-error partners for the stabilizer
// rows, then solves for the basis-change tableau with exact signs.
SymplecticMatrix solve_base(const ConstraintSystem& cs);

// The full solution set: one tableau per symmetric 2x2 GF(2) matrix A, where
// A determines which stabilizer factors multiply the two pure-error images.
// label = A11*4 + A12*2 + A22 in 0..7; label 0 is the base solution.
struct SolutionDescriptor {
  int label = 0;
  std::array<std::array<int, 2>, 2> a{};
  SymplecticMatrix f;
  Circuit circuit;
};

std::vector<SolutionDescriptor> enumerate_solutions(const ConstraintSystem& cs);

// Exact circuit extraction: staged GF(2) elimination over {H,P,CX,CZ} plus a
// trailing X/Z layer for the phase bits. tableau_of(synthesize(f)) == f.
Circuit synthesize(const SymplecticMatrix& f);

struct MiningOptions {
  int exhaustive_cap = 256;  // enumerate all placements when C(k,h) <= cap
  int samples = 10;          // otherwise this many seeded samples
  std::uint64_t seed = 0x5EEDULL;
};

// The placement set a mining pass works over: every size-h subset of [k] when
// C(k,h) <= max(exhaustive_cap, samples), else `samples` distinct seeded draws.
std::vector<HadamardPlacement> placements_for(int k, int h,
                                              const MiningOptions& opt = {});

// Labels whose synthesized depth is constant across the tested placements.
std::vector<int> classify_position_invariant(int k, int h,
                                             const MiningOptions& opt = {});

struct SweepRow {
  HadamardPlacement placement;
  int h = 0;
  int label = 0;
  int depth = 0;
  int two_qubit = 0;
};

std::vector<SweepRow> depth_sweep(int k, const std::vector<int>& labels,
                                  const std::vector<HadamardPlacement>& placements);

}  // namespace ckc

#endif  // CKC_LCS_HPP_
