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

#include "ckc/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ckc {

HadamardPlacement::HadamardPlacement(int k_wires, std::vector<int> hadamard_wires)
    : k(k_wires), ih(std::move(hadamard_wires)) {
  if (k < 1) throw std::invalid_argument("kernel width must be positive");
  std::sort(ih.begin(), ih.end());
  for (std::size_t i = 0; i < ih.size(); ++i) {
    if (ih[i] < 1 || ih[i] > k)
      throw std::invalid_argument("Hadamard wire out of range");
    if (i > 0 && ih[i] == ih[i - 1])
      throw std::invalid_argument("duplicate Hadamard wire");
  }
}

bool HadamardPlacement::has(int wire) const {
  return std::binary_search(ih.begin(), ih.end(), wire);
}

std::vector<int> HadamardPlacement::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k) - ih.size());
  for (int i = 1; i <= k; ++i)
    if (!has(i)) out.push_back(i);
  return out;
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in placement text");
  return value;
}

}  // namespace

HadamardPlacement HadamardPlacement::parse(std::string_view text) {
  constexpr std::string_view kPrefix = "k=";
  constexpr std::string_view kSep = ";Ih=";
  if (text.substr(0, kPrefix.size()) != kPrefix)
    throw std::invalid_argument("placement text must start with 'k='");
  std::size_t sep = text.find(kSep);
  if (sep == std::string_view::npos)
    throw std::invalid_argument("placement text must contain ';Ih='");
  int k = parse_int(text.substr(kPrefix.size(), sep - kPrefix.size()));
  std::string_view list = text.substr(sep + kSep.size());
  std::vector<int> wires;
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    std::string_view item =
        comma == std::string_view::npos ? list : list.substr(0, comma);
    wires.push_back(parse_int(item));
    if (comma == std::string_view::npos) {
      list = {};
    } else {
      list = list.substr(comma + 1);
      if (list.empty())
        throw std::invalid_argument("trailing comma in placement list");
    }
  }
  return HadamardPlacement(k, std::move(wires));
}

std::string HadamardPlacement::str() const {
  std::string s = "k=" + std::to_string(k) + ";Ih=";
  for (std::size_t i = 0; i < ih.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(ih[i]);
  }
  return s;
}

Circuit build_cqsk(const HadamardPlacement& p) {
  Circuit c(p.k);
  for (int w : p.ih) c.append(Gate::h(w));
  for (int w = 1; w < p.k; ++w) c.append(Gate::cx(w, p.k));
  c.append(Gate::p(p.k));
  for (int w = p.k - 1; w >= 1; --w) c.append(Gate::cx(w, p.k));
  for (int w : p.ih) c.append(Gate::h(w));
  return c;
}

LogicalAction LogicalAction::identity(int k) {
  LogicalAction a;
  a.x_images.reserve(static_cast<std::size_t>(k));
  a.z_images.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    a.x_images.push_back(PauliOperator::single(static_cast<std::size_t>(k), i, 'X'));
    a.z_images.push_back(PauliOperator::single(static_cast<std::size_t>(k), i, 'Z'));
  }
  return a;
}

LogicalAction logical_action(const HadamardPlacement& p) {
  Circuit kernel = build_cqsk(p);
  LogicalAction a = LogicalAction::identity(p.k);
  for (auto& img : a.x_images) img = conjugate_by_circuit(img, kernel);
  for (auto& img : a.z_images) img = conjugate_by_circuit(img, kernel);
  return a;
}

}  // namespace ckc
