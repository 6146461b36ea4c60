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

#include "ckc/verifier.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ckc/pauli.hpp"

namespace ckc {

std::string constraint_status_name(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::Exact:
      return "exact";
    case ConstraintStatus::UpToStabilizer:
      return "up_to_stabilizer";
    case ConstraintStatus::SignFlip:
      return "sign_flip";
    case ConstraintStatus::Fail:
      return "fail";
  }
  throw std::logic_error("unknown constraint status");
}

namespace {

std::string factor_name(const BitVec& combination) {
  bool xs = combination.get(0);
  bool zs = combination.get(1);
  if (xs && zs) return "X[n]Z[n]";
  if (xs) return "X[n]";
  if (zs) return "Z[n]";
  return "I";
}

// Classifies image relative to target modulo the stabilizer group.
ConstraintRecord classify(std::string id, const PauliOperator& image,
                          const PauliOperator& target,
                          std::span<const PauliOperator> span_gens) {
  ConstraintRecord rec;
  rec.id = std::move(id);
  rec.stabilizer_factor = "I";
  rec.sign = +1;
  PauliProduct prod = mul(image, target);
  if (prod.i_parity) {
    rec.status = ConstraintStatus::Fail;
    return rec;
  }
  SpanReduction red = reduce_mod_span(prod.value, span_gens);
  if (!red.in_span) {
    rec.status = ConstraintStatus::Fail;
    return rec;
  }
  rec.stabilizer_factor = factor_name(red.combination);
  rec.sign = red.residual_sign;
  if (red.residual_sign < 0)
    rec.status = ConstraintStatus::SignFlip;
  else if (rec.stabilizer_factor == "I")
    rec.status = ConstraintStatus::Exact;
  else
    rec.status = ConstraintStatus::UpToStabilizer;
  return rec;
}

bool logical_ok(const ConstraintRecord& rec) {
  return rec.status == ConstraintStatus::Exact ||
         rec.status == ConstraintStatus::UpToStabilizer;
}

}  // namespace

VerificationReport check_logical_constraints(const Circuit& candidate,
                                             const LogicalAction& action,
                                             const CodeInstance& code) {
  if (candidate.n != code.n)
    throw std::invalid_argument("candidate width mismatch");
  auto stab = stabilizers(code);
  const std::vector<PauliOperator> span_gens{stab.first, stab.second};
  VerificationReport rep;
  rep.k = code.k;
  for (int i = 1; i <= code.k; ++i) {
    auto reps = logical_reps(code, i);
    PauliOperator image = conjugate_by_circuit(reps.first, candidate);
    PauliOperator target = embed_logical_pauli(
        code, action.x_images[static_cast<std::size_t>(i) - 1]);
    rep.constraints.push_back(
        classify("X" + std::to_string(i), image, target, span_gens));
  }
  for (int i = 1; i <= code.k; ++i) {
    auto reps = logical_reps(code, i);
    PauliOperator image = conjugate_by_circuit(reps.second, candidate);
    PauliOperator target = embed_logical_pauli(
        code, action.z_images[static_cast<std::size_t>(i) - 1]);
    rep.constraints.push_back(
        classify("Z" + std::to_string(i), image, target, span_gens));
  }
  rep.pass = true;
  for (const auto& rec : rep.constraints)
    if (!logical_ok(rec)) rep.pass = false;
  return rep;
}

VerificationReport check_logical_constraints(const Circuit& candidate,
                                             const HadamardPlacement& p) {
  CodeInstance code(p.k);
  VerificationReport rep =
      check_logical_constraints(candidate, logical_action(p), code);
  rep.ih = p.ih;
  return rep;
}

VerificationReport check_stabilizer_preservation(const Circuit& candidate) {
  if (candidate.n < 2 || candidate.n % 2 != 0)
    throw std::invalid_argument("candidate width must be even");
  CodeInstance code(candidate.n - 2);
  auto stab = stabilizers(code);
  const std::vector<PauliOperator> span_gens{stab.first, stab.second};
  VerificationReport rep;
  rep.k = code.k;
  rep.constraints.push_back(classify(
      "stab_X", conjugate_by_circuit(stab.first, candidate), stab.first,
      span_gens));
  rep.constraints.push_back(classify(
      "stab_Z", conjugate_by_circuit(stab.second, candidate), stab.second,
      span_gens));
  // Any sign is acceptable for stabilizer preservation; only span matters.
  rep.pass = rep.constraints[0].status != ConstraintStatus::Fail &&
             rep.constraints[1].status != ConstraintStatus::Fail;
  return rep;
}

VerificationReport verify(const Circuit& candidate, const HadamardPlacement& p) {
  VerificationReport rep = check_logical_constraints(candidate, p);
  VerificationReport stab = check_stabilizer_preservation(candidate);
  rep.pass = rep.pass && stab.pass;
  for (auto& rec : stab.constraints) rep.constraints.push_back(std::move(rec));
  return rep;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["Ih"] = ih;
  j["pass"] = pass;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& rec : constraints) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    r["status"] = constraint_status_name(rec.status);
    r["stabilizer_factor"] = rec.stabilizer_factor;
    r["sign"] = rec.sign;
    recs.push_back(std::move(r));
  }
  j["constraints"] = std::move(recs);
  return j.dump();
}

}  // namespace ckc
