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

#include "ckc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ckc {

namespace {

using json = nlohmann::ordered_json;

void check_wire(int q, int n) {
  if (q < 1 || q > n) throw std::invalid_argument("wire index out of range");
}

void validate_gate(const Gate& g, int n) {
  check_wire(g.q1, n);
  if (g.is_two_qubit()) {
    check_wire(g.q2, n);
    if (g.q1 == g.q2) throw std::invalid_argument("degenerate two-qubit gate");
  }
}

}  // namespace

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::P:
      return "P";
    case GateKind::Pdg:
      return "Pdg";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::CX:
      return "CX";
    case GateKind::CZ:
      return "CZ";
  }
  throw std::logic_error("unknown gate kind");
}

void Circuit::append(const Gate& g) {
  validate_gate(g, n);
  gates.push_back(g);
}

void Circuit::append(const Circuit& c) {
  if (c.n != n) throw std::invalid_argument("circuit width mismatch");
  gates.insert(gates.end(), c.gates.begin(), c.gates.end());
}

Circuit Circuit::inverse() const {
  Circuit inv(n);
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    inv.gates.push_back(it->inverse());
  return inv;
}

Circuit Circuit::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int w = 1; w <= n; ++w) {
    if (perm[w] < 1 || perm[w] > n || seen[perm[w]])
      throw std::invalid_argument("not a permutation");
    seen[perm[w]] = true;
  }
  Circuit out(n);
  out.gates.reserve(gates.size());
  for (const auto& g : gates) {
    Gate r = g;
    r.q1 = perm[g.q1];
    if (g.is_two_qubit()) r.q2 = perm[g.q2];
    if (r.kind == GateKind::CZ && r.q1 > r.q2) std::swap(r.q1, r.q2);
    out.gates.push_back(r);
  }
  return out;
}

int depth(const Circuit& c) {
  std::vector<int> last(c.n + 1, 0);
  int d = 0;
  for (const auto& g : c.gates) {
    int layer = last[g.q1] + 1;
    if (g.is_two_qubit()) layer = std::max(layer, last[g.q2] + 1);
    last[g.q1] = layer;
    if (g.is_two_qubit()) last[g.q2] = layer;
    d = std::max(d, layer);
  }
  return d;
}

int two_qubit_count(const Circuit& c) {
  int count = 0;
  for (const auto& g : c.gates)
    if (g.is_two_qubit()) ++count;
  return count;
}

std::string serialize(const Circuit& c) {
  json out;
  out["n"] = c.n;
  out["gates"] = json::array();
  for (const auto& g : c.gates) {
    int reps = g.kind == GateKind::Pdg ? 3 : 1;
    GateKind kind = g.kind == GateKind::Pdg ? GateKind::P : g.kind;
    for (int r = 0; r < reps; ++r) {
      json jg;
      jg["g"] = gate_name(kind);
      if (g.is_two_qubit()) {
        jg["q"] = {g.q1, g.q2};
      } else {
        jg["q"] = {g.q1};
      }
      out["gates"].push_back(jg);
    }
  }
  return out.dump();
}

Circuit parse_circuit(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad circuit JSON: ") + e.what());
  }
  if (!in.is_object() || !in.contains("n") || !in.contains("gates"))
    throw std::invalid_argument("circuit JSON must have \"n\" and \"gates\"");
  if (!in["n"].is_number_integer() || in["n"].get<int>() < 1)
    throw std::invalid_argument("\"n\" must be a positive integer");
  Circuit c(in["n"].get<int>());
  if (!in["gates"].is_array())
    throw std::invalid_argument("\"gates\" must be an array");
  for (const auto& jg : in["gates"]) {
    if (!jg.is_object() || !jg.contains("g") || !jg.contains("q") ||
        !jg["g"].is_string() || !jg["q"].is_array())
      throw std::invalid_argument("bad gate entry");
    const std::string name = jg["g"].get<std::string>();
    std::vector<int> q;
    for (const auto& jq : jg["q"]) {
      if (!jq.is_number_integer())
        throw std::invalid_argument("bad gate wire list");
      q.push_back(jq.get<int>());
    }
    Gate g{GateKind::H, 0, 0};
    if (name == "H" || name == "P" || name == "X" || name == "Z") {
      if (q.size() != 1)
        throw std::invalid_argument("single-qubit gate needs one wire");
      GateKind kind = name == "H"   ? GateKind::H
                      : name == "P" ? GateKind::P
                      : name == "X" ? GateKind::X
                                    : GateKind::Z;
      g = {kind, q[0], 0};
    } else if (name == "CX" || name == "CZ") {
      if (q.size() != 2)
        throw std::invalid_argument("two-qubit gate needs two wires");
      g = name == "CX" ? Gate::cx(q[0], q[1]) : Gate::cz(q[0], q[1]);
    } else {
      throw std::invalid_argument("unknown gate kind: " + name);
    }
    c.append(g);
  }
  return c;
}

}  // namespace ckc
