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

#include "ckc/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ckc/circuit.hpp"
#include "ckc/kernel.hpp"
#include "ckc/lcs.hpp"
#include "ckc/noise.hpp"
#include "ckc/pbs.hpp"
#include "ckc/strategies.hpp"
#include "ckc/verifier.hpp"

namespace ckc {

namespace {

constexpr const char* kCsvHeader = "# ckc csv v1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kBoolFlags = {"--lcs-all", "--exhaustive",
                                          "--no-verify"};

struct Flags {
  std::map<std::string, std::string> values;
  std::set<std::string> booleans;

  bool has(const std::string& name) const {
    return values.count(name) != 0 || booleans.count(name) != 0;
  }
};

Flags parse_flags(const std::vector<std::string>& args, std::size_t start) {
  Flags f;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0)
      throw UsageError("unexpected argument '" + tok + "'");
    std::size_t eq = tok.find('=');
    if (eq != std::string::npos) {
      f.values[tok.substr(0, eq)] = tok.substr(eq + 1);
      continue;
    }
    if (kBoolFlags.count(tok)) {
      f.booleans.insert(tok);
      continue;
    }
    if (i + 1 >= args.size())
      throw UsageError("flag '" + tok + "' needs a value");
    f.values[tok] = args[++i];
  }
  return f;
}

long parse_long(const std::string& text, const std::string& flag) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("flag '" + flag + "' needs an integer, got '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const std::string& flag) {
  try {
    std::size_t pos = 0;
    double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("flag '" + flag + "' needs a number, got '" + text + "'");
  }
}

int require_k(const Flags& f) {
  auto it = f.values.find("--k");
  if (it == f.values.end()) throw UsageError("--k is required");
  long k = parse_long(it->second, "--k");
  if (k < 2 || k % 2 != 0) throw UsageError("k must be even");
  return static_cast<int>(k);
}

std::vector<int> parse_wire_list(const std::string& text) {
  std::vector<int> wires;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty())
      wires.push_back(static_cast<int>(parse_long(item, "--ih")));
  return wires;
}

std::uint64_t seed_of(const Flags& f, const std::string& flag,
                      std::uint64_t fallback) {
  auto it = f.values.find(flag);
  if (it == f.values.end()) return fallback;
  long v = parse_long(it->second, flag);
  if (v < 0) throw UsageError("flag '" + flag + "' must be non-negative");
  return static_cast<std::uint64_t>(v);
}

// Resolves --ih (explicit wires) or --h (count, seeded sample) to a placement.
HadamardPlacement resolve_placement(const Flags& f, int k) {
  const bool has_ih = f.values.count("--ih") != 0;
  const bool has_h = f.values.count("--h") != 0;
  if (has_ih == has_h)
    throw UsageError("exactly one of --ih and --h is required");
  try {
    if (has_ih) return HadamardPlacement(k, parse_wire_list(f.values.at("--ih")));
    long h = parse_long(f.values.at("--h"), "--h");
    if (h < 0 || h > k) throw UsageError("--h must lie in 0..k");
    MiningOptions opt;
    opt.exhaustive_cap = 1;
    opt.samples = 1;
    opt.seed = seed_of(f, "--placement-seed", seed_of(f, "--seed", 0));
    return placements_for(k, static_cast<int>(h), opt).front();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string placement_field(const HadamardPlacement& p) {
  if (p.ih.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.ih.size(); ++i) {
    if (i > 0) s += '+';
    s += std::to_string(p.ih[i]);
  }
  return s;
}

std::string format_rate(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

// Writes to --out if given, else to the session stream.
void deliver(const Flags& f, std::ostream& out, const std::string& text) {
  auto it = f.values.find("--out");
  if (it == f.values.end()) {
    out << text;
    return;
  }
  std::ofstream file(it->second);
  if (!file) throw std::runtime_error("cannot open output file " + it->second);
  file << text;
}

std::string format_choice(const Flags& f) {
  auto it = f.values.find("--format");
  if (it == f.values.end()) return "";
  if (it->second != "json" && it->second != "csv")
    throw UsageError("--format must be json or csv");
  return it->second;
}

SelectionPolicy policy_of(const Flags& f, int k) {
  auto it = f.values.find("--policy");
  if (it == f.values.end()) return SelectionPolicy::default_for(k);
  if (it->second == "rule") return SelectionPolicy::rule_based();
  if (it->second == "empirical") return SelectionPolicy::empirical();
  throw UsageError("--policy must be rule or empirical");
}

int cmd_compile(const Flags& f, std::ostream& out) {
  int k = require_k(f);
  HadamardPlacement p = resolve_placement(f, k);
  const bool has_strategy = f.values.count("--strategy") != 0;
  if (has_strategy && f.values.count("--policy") != 0)
    throw UsageError("--strategy and --policy are mutually exclusive");
  CompilationResult result;
  if (has_strategy) {
    auto s = strategy_from_name(f.values.at("--strategy"));
    if (!s) throw UsageError("--strategy must be low, mid or high");
    result = emit(*s, p);
  } else {
    result = compile_pbs(p, policy_of(f, k));
  }
  nlohmann::ordered_json metrics;
  metrics["strategy"] = strategy_name(result.strategy);
  metrics["depth"] = result.depth;
  metrics["twoq"] = result.two_qubit;
  deliver(f, out, serialize(result.circuit) + "\n" + metrics.dump() + "\n");
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  int k = require_k(f);
  HadamardPlacement p = resolve_placement(f, k);
  auto it = f.values.find("--circuit");
  if (it == f.values.end()) throw UsageError("--circuit is required");
  std::ifstream file(it->second);
  if (!file) throw UsageError("cannot open circuit file " + it->second);
  Circuit candidate;
  try {
    // compile output carries the circuit document first and a metrics line
    // after it; read exactly one JSON document and ignore trailing content.
    nlohmann::json doc;
    file >> doc;
    candidate = parse_circuit(doc.dump());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad circuit JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  VerificationReport rep;
  try {
    rep = verify(candidate, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  deliver(f, out, rep.to_json() + "\n");
  return rep.pass ? kExitOk : kExitVerification;
}

int cmd_enumerate_lcs(const Flags& f, std::ostream& out) {
  int k = require_k(f);
  HadamardPlacement p = resolve_placement(f, k);
  auto sols = enumerate_solutions(build_constraints(p));
  std::string format = format_choice(f);
  if (format.empty()) format = "json";
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["k"] = p.k;
    j["Ih"] = p.ih;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& sol : sols) {
      nlohmann::ordered_json s;
      s["label"] = sol.label;
      s["a"] = {{sol.a[0][0], sol.a[0][1]}, {sol.a[1][0], sol.a[1][1]}};
      s["depth"] = depth(sol.circuit);
      s["twoq"] = two_qubit_count(sol.circuit);
      s["circuit"] = nlohmann::ordered_json::parse(serialize(sol.circuit));
      list.push_back(std::move(s));
    }
    j["solutions"] = std::move(list);
    os << j.dump() << "\n";
  } else {
    os << kCsvHeader << "\n" << "k,h,placement,label,depth,twoq\n";
    for (const auto& sol : sols)
      os << p.k << ',' << p.h() << ',' << placement_field(p) << ',' << "lcs"
         << sol.label << ',' << depth(sol.circuit) << ','
         << two_qubit_count(sol.circuit) << "\n";
  }
  deliver(f, out, os.str());
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  int k = require_k(f);
  const bool lcs_all = f.booleans.count("--lcs-all") != 0;
  std::vector<StrategyId> strategies;
  if (auto it = f.values.find("--strategies"); it != f.values.end()) {
    std::istringstream in(it->second);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto s = strategy_from_name(item);
      if (!s) throw UsageError("--strategies entries must be low, mid or high");
      strategies.push_back(*s);
    }
  } else if (!lcs_all) {
    strategies = {StrategyId::Low, StrategyId::Mid, StrategyId::High};
  }
  const bool check = f.booleans.count("--no-verify") == 0;

  MiningOptions opt;
  opt.seed = seed_of(f, "--placement-seed", seed_of(f, "--seed", 0));
  if (f.booleans.count("--exhaustive")) {
    opt.exhaustive_cap = 100000;
    auto binom = [](int kk, int hh) {
      unsigned long long c = 1;
      for (int i = 0; i < hh; ++i) {
        c = c * static_cast<unsigned long long>(kk - i) /
            static_cast<unsigned long long>(i + 1);
        if (c > 100000) break;
      }
      return c;
    };
    for (int h = 0; h <= k; ++h)
      if (binom(k, h) > static_cast<unsigned long long>(opt.exhaustive_cap))
        throw UsageError("exhaustive sweep too large for k=" + std::to_string(k));
  } else {
    opt.exhaustive_cap = opt.samples;  // all placements only when C(k,h) <= 10
  }

  std::ostringstream os;
  os << kCsvHeader << "\n" << "k,h,placement,label,depth,twoq\n";
  for (int h = 0; h <= k; ++h) {
    for (const auto& p : placements_for(k, h, opt)) {
      for (StrategyId s : strategies) {
        CompilationResult r = emit(s, p);
        if (check && !verify(r.circuit, p).pass)
          throw VerificationError("emitted circuit failed verification");
        os << k << ',' << h << ',' << placement_field(p) << ','
           << strategy_name(s) << ',' << r.depth << ',' << r.two_qubit << "\n";
      }
      if (lcs_all) {
        for (const auto& sol : enumerate_solutions(build_constraints(p))) {
          if (check && !verify(sol.circuit, p).pass)
            throw VerificationError("solution circuit failed verification");
          os << k << ',' << h << ',' << placement_field(p) << ',' << "lcs"
             << sol.label << ',' << depth(sol.circuit) << ','
             << two_qubit_count(sol.circuit) << "\n";
        }
      }
    }
  }
  deliver(f, out, os.str());
  return kExitOk;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  int k = require_k(f);
  NoiseModel model;
  if (auto it = f.values.find("--p1"); it != f.values.end())
    model.p1 = parse_double(it->second, "--p1");
  if (auto it = f.values.find("--p2"); it != f.values.end())
    model.p2 = parse_double(it->second, "--p2");
  if (model.p1 < 0.0 || model.p1 > 1.0 || model.p2 < 0.0 || model.p2 > 1.0)
    throw UsageError("noise rates must lie in [0,1]");
  std::uint64_t shots = 100000;
  if (auto it = f.values.find("--shots"); it != f.values.end()) {
    long v = parse_long(it->second, "--shots");
    if (v < 1) throw UsageError("--shots must be positive");
    shots = static_cast<std::uint64_t>(v);
  }
  std::uint64_t seed = seed_of(f, "--seed", 0);
  int threads = 0;
  if (auto it = f.values.find("--threads"); it != f.values.end())
    threads = static_cast<int>(parse_long(it->second, "--threads"));
  SelectionPolicy policy = policy_of(f, k);
  const bool check = f.booleans.count("--no-verify") == 0;

  std::vector<HadamardPlacement> placements;
  if (f.values.count("--ih") != 0 || f.values.count("--h") != 0) {
    placements.push_back(resolve_placement(f, k));
  } else {
    MiningOptions opt;
    opt.exhaustive_cap = 1;
    opt.samples = 1;
    opt.seed = seed_of(f, "--placement-seed", seed);
    for (int h = 1; h < k; ++h)
      placements.push_back(placements_for(k, h, opt).front());
  }

  std::ostringstream os;
  os << kCsvHeader << "\n"
     << "k,h,placement,strategy,p1,p2,shots,seed,p_acc,p_acc_ci,p_succ,"
        "p_succ_ci,depth,twoq\n";
  for (const auto& p : placements) {
    struct Variant {
      std::string name;
      CompilationResult result;
    };
    std::vector<Variant> variants;
    variants.push_back({"mid", emit(StrategyId::Mid, p)});
    variants.push_back({"pbs", compile_pbs(p, policy)});
    for (const auto& v : variants) {
      if (check && !verify(v.result.circuit, p).pass)
        throw VerificationError("emitted circuit failed verification");
      SimStats stats = simulate(v.result.circuit, model, shots, seed, threads);
      os << k << ',' << p.h() << ',' << placement_field(p) << ',' << v.name
         << ',' << format_rate(model.p1) << ',' << format_rate(model.p2) << ','
         << stats.shots << ',' << stats.seed << ',' << format_rate(stats.p_acc)
         << ',' << format_rate(stats.p_acc_halfwidth) << ','
         << format_rate(stats.p_succ) << ','
         << format_rate(stats.p_succ_halfwidth) << ',' << v.result.depth << ','
         << v.result.two_qubit << "\n";
    }
  }
  deliver(f, out, os.str());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  static const char* kUsage =
      "usage: ckc <compile|verify|sweep|simulate|enumerate-lcs> [flags]\n"
      "  compile       --k K (--ih 1,3|--h N) [--strategy low|mid|high]"
      " [--policy rule|empirical]\n"
      "  verify        --k K (--ih 1,3|--h N) --circuit FILE\n"
      "  sweep         --k K [--strategies low,mid,high] [--lcs-all]"
      " [--exhaustive] [--seed S]\n"
      "  simulate      --k K [--ih 1,3] [--p1 P] [--p2 P] [--shots N]"
      " [--seed S] [--policy rule|empirical]\n"
      "  enumerate-lcs --k K (--ih 1,3|--h N) [--format json|csv]\n"
      "common: --out FILE, --format json|csv, --placement-seed S, --threads T,"
      " --no-verify\n";
  try {
    if (args.empty()) throw UsageError("missing command");
    const std::string& cmd = args[0];
    Flags f = parse_flags(args, 1);
    if (cmd == "compile") return cmd_compile(f, out);
    if (cmd == "verify") return cmd_verify(f, out);
    if (cmd == "sweep") return cmd_sweep(f, out);
    if (cmd == "simulate") return cmd_simulate(f, out);
    if (cmd == "enumerate-lcs") return cmd_enumerate_lcs(f, out);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ckc
