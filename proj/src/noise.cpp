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

#include "ckc/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ckc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Draws the error for one gate and xors its bits into (x, z). Returns true if
// a non-identity error fired. No RNG draw happens when the rate is zero.
bool sample_error_bits(const Gate& g, const NoiseModel& model, ShotRng& rng,
                       BitVec& x, BitVec& z) {
  const bool two = g.is_two_qubit();
  const double p = two ? model.p2 : model.p1;
  if (p <= 0.0) return false;
  if (rng.uniform() >= p) return false;
  if (two) {
    std::uint64_t r = rng.below(15) + 1;  // 4 bits, never 0000
    std::size_t a = static_cast<std::size_t>(g.q1) - 1;
    std::size_t b = static_cast<std::size_t>(g.q2) - 1;
    if (r & 1) x.flip(a);
    if (r & 2) z.flip(a);
    if (r & 4) x.flip(b);
    if (r & 8) z.flip(b);
  } else {
    std::uint64_t r = rng.below(3) + 1;  // 2 bits, never 00
    std::size_t a = static_cast<std::size_t>(g.q1) - 1;
    if (r & 1) x.flip(a);
    if (r & 2) z.flip(a);
  }
  return true;
}

}  // namespace

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t shot)
    : state_(mix_seed(seed, shot)) {}

std::uint64_t ShotRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

double ShotRng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t ShotRng::below(std::uint64_t m) { return next() % m; }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix64(a + kGolden * (b + 1));
}

PauliOperator sample_gate_error(const Gate& g, std::size_t n,
                                const NoiseModel& model, ShotRng& rng) {
  PauliOperator e(n);
  sample_error_bits(g, model, rng, e.x, e.z);
  return e;
}

PauliOperator run_frame(const Circuit& c, const NoiseModel& model,
                        ShotRng& rng) {
  PauliOperator frame(static_cast<std::size_t>(c.n));
  for (const auto& g : c.gates) {
    apply_gate_in_place(frame, g);
    sample_error_bits(g, model, rng, frame.x, frame.z);
  }
  frame.sign = +1;  // global phase is irrelevant for frame statistics
  return frame;
}

FrameOutcome classify_frame(const PauliOperator& e, const CodeInstance& code) {
  if (e.num_qubits() != static_cast<std::size_t>(code.n))
    throw std::invalid_argument("frame width mismatch");
  auto stab = stabilizers(code);
  if (symplectic_product(e, stab.first) != 0 ||
      symplectic_product(e, stab.second) != 0)
    return FrameOutcome::Rejected;
  const std::size_t n = static_cast<std::size_t>(code.n);
  std::size_t px = e.x.popcount();
  std::size_t pz = e.z.popcount();
  if ((px == 0 || px == n) && (pz == 0 || pz == n))
    return FrameOutcome::Success;
  return FrameOutcome::AcceptedFault;
}

double wilson_halfwidth(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return 1.0;
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  return z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) /
         (1.0 + z2 / nt);
}

SimStats simulate(const Circuit& c, const NoiseModel& model,
                  std::uint64_t shots, std::uint64_t seed, int threads) {
  if (shots == 0) throw std::invalid_argument("need at least one shot");
  if (model.p1 < 0.0 || model.p1 > 1.0 || model.p2 < 0.0 || model.p2 > 1.0)
    throw std::invalid_argument("noise rates must lie in [0,1]");
  CodeInstance code(c.n - 2);

  unsigned worker_count = threads > 0
                              ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  if (static_cast<std::uint64_t>(worker_count) > shots)
    worker_count = static_cast<unsigned>(shots);

  std::vector<std::uint64_t> accepted(worker_count, 0);
  std::vector<std::uint64_t> success(worker_count, 0);
  auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t acc = 0;
    std::uint64_t suc = 0;
    for (std::uint64_t shot = lo; shot < hi; ++shot) {
      ShotRng rng(seed, shot);
      PauliOperator frame = run_frame(c, model, rng);
      switch (classify_frame(frame, code)) {
        case FrameOutcome::Rejected:
          break;
        case FrameOutcome::AcceptedFault:
          ++acc;
          break;
        case FrameOutcome::Success:
          ++acc;
          ++suc;
          break;
      }
    }
    accepted[w] = acc;
    success[w] = suc;
  };

  if (worker_count <= 1) {
    run_range(0, 0, shots);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = shots / worker_count;
    std::uint64_t extra = shots % worker_count;
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < worker_count; ++w) {
      std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
      pool.emplace_back(run_range, w, lo, hi);
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }

  SimStats stats;
  stats.shots = shots;
  stats.seed = seed;
  for (unsigned w = 0; w < worker_count; ++w) {
    stats.accepted += accepted[w];
    stats.success += success[w];
  }
  stats.p_acc = static_cast<double>(stats.accepted) / static_cast<double>(shots);
  stats.p_succ = static_cast<double>(stats.success) / static_cast<double>(shots);
  stats.p_acc_halfwidth = wilson_halfwidth(stats.accepted, shots);
  stats.p_succ_halfwidth = wilson_halfwidth(stats.success, shots);
  return stats;
}

}  // namespace ckc
