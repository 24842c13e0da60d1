// Copyright 2026 The nmrlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmrlogic/pc.hpp"

#include <algorithm>
#include <map>

namespace nmrlogic {
namespace {

template <int Radix>
std::uint8_t distinct(const std::array<std::uint8_t, Radix>& line) {
  std::array<bool, Radix> seen{};
  std::uint8_t n = 0;
  for (auto v : line) {
    if (!seen[v]) {
      seen[v] = true;
      ++n;
    }
  }
  return n;
}

template <int Radix>
typename LogicSpace<Radix>::Digits to_digits(const TernaryFunction& f)
  requires(Radix == 3)
{
  typename LogicSpace<3>::Digits d{};
  for (int i = 0; i < kTernaryCells; ++i) d[i] = static_cast<std::uint8_t>(f.cell(i).digit());
  return d;
}

}  // namespace

template <int Radix>
BasicLineCounts<Radix> row_counts(const typename LogicSpace<Radix>::Digits& f) {
  BasicLineCounts<Radix> c;
  for (int a = 0; a < Radix; ++a) {
    std::array<std::uint8_t, Radix> line{};
    for (int b = 0; b < Radix; ++b) line[b] = f[Radix * a + b];
    c.counts[a] = distinct<Radix>(line);
  }
  std::sort(c.counts.begin(), c.counts.end());
  return c;
}

template <int Radix>
BasicLineCounts<Radix> column_counts(const typename LogicSpace<Radix>::Digits& f) {
  BasicLineCounts<Radix> c;
  for (int b = 0; b < Radix; ++b) {
    std::array<std::uint8_t, Radix> line{};
    for (int a = 0; a < Radix; ++a) line[a] = f[Radix * a + b];
    c.counts[b] = distinct<Radix>(line);
  }
  std::sort(c.counts.begin(), c.counts.end());
  return c;
}

LineCounts row_counts(const TernaryFunction& f) { return row_counts<3>(to_digits<3>(f)); }
LineCounts column_counts(const TernaryFunction& f) { return column_counts<3>(to_digits<3>(f)); }

PcSignature pc_signature(const TernaryFunction& f) {
  const auto d = to_digits<3>(f);
  return PcSignature(row_counts<3>(d), column_counts<3>(d));
}

template <int Radix>
std::vector<BasicPcClass<Radix>> pc_classify() {
  using Space = LogicSpace<Radix>;
  const auto npn = classify<Radix>();
  std::vector<std::uint32_t> canonical(Space::kFunctions);
  for (const auto& cls : npn) {
    for (auto m : cls.members) canonical[m.value] = cls.canonical.value;
  }

  std::map<BasicPcSignature<Radix>, BasicPcClass<Radix>> by_signature;
  for (std::uint32_t i = 0; i < Space::kFunctions; ++i) {
    const auto d = Space::decode(i);
    const BasicPcSignature<Radix> sig(row_counts<Radix>(d), column_counts<Radix>(d));
    auto& cls = by_signature[sig];
    cls.signature = sig;
    cls.members.push_back(FunctionIndex{i});
    const FunctionIndex c{canonical[i]};
    if (std::find(cls.npn_classes.begin(), cls.npn_classes.end(), c) == cls.npn_classes.end()) {
      cls.npn_classes.push_back(c);
    }
  }

  std::vector<BasicPcClass<Radix>> out;
  out.reserve(by_signature.size());
  for (auto& [sig, cls] : by_signature) {
    std::sort(cls.npn_classes.begin(), cls.npn_classes.end());
    out.push_back(std::move(cls));
  }
  return out;
}

template BasicLineCounts<2> row_counts<2>(const LogicSpace<2>::Digits&);
template BasicLineCounts<3> row_counts<3>(const LogicSpace<3>::Digits&);
template BasicLineCounts<2> column_counts<2>(const LogicSpace<2>::Digits&);
template BasicLineCounts<3> column_counts<3>(const LogicSpace<3>::Digits&);
template std::vector<BasicPcClass<2>> pc_classify<2>();
template std::vector<BasicPcClass<3>> pc_classify<3>();

std::vector<PcClass> pc_classify_all() { return pc_classify<3>(); }

BinaryPcReport pc_binary_check() {
  BinaryPcReport report;
  report.pc_classes = pc_classify<2>();
  report.npn_classes = classify_binary();

  auto pc_sets = std::vector<std::vector<FunctionIndex>>{};
  for (const auto& c : report.pc_classes) pc_sets.push_back(c.members);
  auto npn_sets = std::vector<std::vector<FunctionIndex>>{};
  for (const auto& c : report.npn_classes) npn_sets.push_back(c.members);
  std::sort(pc_sets.begin(), pc_sets.end());
  std::sort(npn_sets.begin(), npn_sets.end());
  report.partitions_match = pc_sets == npn_sets;
  return report;
}

}  // namespace nmrlogic
