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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nmrlogic/npn.hpp"
#include "nmrlogic/ternary.hpp"

namespace nmrlogic {

/// Number of distinct output values on each row (or column), as a multiset
/// stored ascending.
template <int Radix>
struct BasicLineCounts {
  std::array<std::uint8_t, Radix> counts{};

  friend constexpr auto operator<=>(const BasicLineCounts&, const BasicLineCounts&) = default;
};

/// Unordered pair of row and column counts. Stored with the smaller multiset
/// first so that {rows, cols} and {cols, rows} compare equal.
template <int Radix>
class BasicPcSignature {
 public:
  BasicPcSignature() = default;
  BasicPcSignature(const BasicLineCounts<Radix>& x, const BasicLineCounts<Radix>& y)
      : first_(x < y ? x : y), second_(x < y ? y : x) {}

  const BasicLineCounts<Radix>& first() const { return first_; }
  const BasicLineCounts<Radix>& second() const { return second_; }

  friend auto operator<=>(const BasicPcSignature&, const BasicPcSignature&) = default;

 private:
  BasicLineCounts<Radix> first_;
  BasicLineCounts<Radix> second_;
};

using LineCounts = BasicLineCounts<3>;
using PcSignature = BasicPcSignature<3>;
using BinaryPcSignature = BasicPcSignature<2>;

template <int Radix>
BasicLineCounts<Radix> row_counts(const typename LogicSpace<Radix>::Digits& f);
template <int Radix>
BasicLineCounts<Radix> column_counts(const typename LogicSpace<Radix>::Digits& f);

LineCounts row_counts(const TernaryFunction& f);
LineCounts column_counts(const TernaryFunction& f);

PcSignature pc_signature(const TernaryFunction& f);

template <int Radix>
struct BasicPcClass {
  BasicPcSignature<Radix> signature;
  std::vector<FunctionIndex> members;      // ascending
  std::vector<FunctionIndex> npn_classes;  // NPN canonicals, ascending

  /// True when the PC class coincides with a single NPN class.
  bool single() const { return npn_classes.size() == 1; }
};

using PcClass = BasicPcClass<3>;
using BinaryPcClass = BasicPcClass<2>;

/// Partition of every function by signature, sorted by signature.
template <int Radix>
std::vector<BasicPcClass<Radix>> pc_classify();

std::vector<PcClass> pc_classify_all();

struct BinaryPcReport {
  std::vector<BinaryPcClass> pc_classes;
  std::vector<NpnClass> npn_classes;
  /// Whether the two partitions of the 16 binary functions are identical.
  bool partitions_match = false;
};

BinaryPcReport pc_binary_check();

/// Renders as "{1,3,3}".
template <int Radix>
std::string to_string(const BasicLineCounts<Radix>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.counts[i]);
  }
  return s + "}";
}

}  // namespace nmrlogic
