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

#ifndef CKC_NOISE_HPP_
#define CKC_NOISE_HPP_

#include <cstdint>

#include "ckc/circuit.hpp"
#include "ckc/code.hpp"
#include "ckc/pauli.hpp"

namespace ckc {

struct NoiseModel {
  double p1 = 0.0;  // depolarizing rate after each single-qubit gate
  double p2 = 0.0;  // after each two-qubit gate, uniform over the 15 pairs
};

// Counter-based per-shot generator: the stream for (seed, shot) is
// independent of how shots are batched over threads.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint64_t shot);

  std::uint64_t next();
  double uniform();                       // in [0, 1)
  std::uint64_t below(std::uint64_t m);   // in [0, m)

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Identity with probability 1-p, otherwise uniform over the non-identity
// Paulis on the gate's wires (3 single-qubit, 15 two-qubit).
PauliOperator sample_gate_error(const Gate& g, std::size_t n,
                                const NoiseModel& model, ShotRng& rng);

// Pauli-frame propagation: per gate, conjugate the frame through the ideal
// gate, then multiply the sampled error in. Returns the net end-of-circuit
// error (global phase irrelevant; sign tracked modulo i).
PauliOperator run_frame(const Circuit& c, const NoiseModel& model,
                        ShotRng& rng);

enum class FrameOutcome { Rejected, AcceptedFault, Success };

// Syndrome bits are the symplectic products with X_[n] and Z_[n]; any hit
// rejects the shot. Accepted frames succeed iff their bits lie in the
// stabilizer span (sign ignored).
FrameOutcome classify_frame(const PauliOperator& e, const CodeInstance& code);

struct SimStats {
  std::uint64_t shots = 0;
  std::uint64_t accepted = 0;
  std::uint64_t success = 0;
  double p_acc = 0.0;   // accepted / shots
  double p_succ = 0.0;  // success / shots (so p_succ <= p_acc always)
  double p_acc_halfwidth = 0.0;
  double p_succ_halfwidth = 0.0;
  std::uint64_t seed = 0;
};

// Monte Carlo over independent per-shot streams. Results are identical for
// any thread count; threads = 0 picks the hardware concurrency.
SimStats simulate(const Circuit& c, const NoiseModel& model,
                  std::uint64_t shots, std::uint64_t seed, int threads = 0);

// 95% Wilson score half-width for successes/trials.
double wilson_halfwidth(std::uint64_t successes, std::uint64_t trials);

}  // namespace ckc

#endif  // CKC_NOISE_HPP_
