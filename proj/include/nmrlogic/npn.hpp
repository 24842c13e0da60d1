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
#include <cstdint>
#include <vector>

#include "nmrlogic/ternary.hpp"

namespace nmrlogic {

/// Digit-level view of all two-input, one-output functions of a given radix.
/// Cells are flattened as radix * a + b, with a the row (input A) digit.
template <int Radix>
struct LogicSpace {
  static_assert(Radix == 2 || Radix == 3, "only binary and ternary logic are supported");

  static constexpr int kCells = Radix * Radix;
  static constexpr std::uint32_t kFunctions = [] {
    std::uint32_t n = 1;
    for (int i = 0; i < kCells; ++i) n *= Radix;
    return n;
  }();

  using Digits = std::array<std::uint8_t, kCells>;

  static Digits decode(std::uint32_t index) {
    Digits d{};
    for (auto& cell : d) {
      cell = static_cast<std::uint8_t>(index % Radix);
      index /= Radix;
    }
    return d;
  }

  static std::uint32_t encode(const Digits& d) {
    std::uint32_t index = 0;
    for (int i = kCells - 1; i >= 0; --i) index = index * Radix + d[i];
    return index;
  }
};

/// A bijection on the logic values. For radix 3 these are the six ternary
/// relabellings; for radix 2 the identity and negation.
template <int Radix>
class BasicValuePermutation {
 public:
  using Image = std::array<std::uint8_t, Radix>;

  constexpr BasicValuePermutation() {
    for (int i = 0; i < Radix; ++i) image_[i] = static_cast<std::uint8_t>(i);
  }

  /// Throws std::invalid_argument when `image` is not a bijection on digits.
  static BasicValuePermutation from_image(const Image& image);

  static BasicValuePermutation identity() { return {}; }

  /// All Radix! permutations in lexicographic order of their image.
  static std::vector<BasicValuePermutation> all();

  constexpr std::uint8_t operator()(std::uint8_t digit) const { return image_[digit]; }

  Trit operator()(Trit v) const
    requires(Radix == 3)
  {
    return Trit::from_digit(image_[v.digit()]);
  }

  BasicValuePermutation inverse() const;

  /// (p * q)(x) == p(q(x)).
  friend BasicValuePermutation operator*(const BasicValuePermutation& p, const BasicValuePermutation& q) {
    BasicValuePermutation r;
    for (int i = 0; i < Radix; ++i) r.image_[i] = p.image_[q.image_[i]];
    return r;
  }

  constexpr const Image& image() const { return image_; }

  friend constexpr bool operator==(const BasicValuePermutation&, const BasicValuePermutation&) = default;

 private:
  Image image_{};
};

/// One element of the NPN group: relabel each input, optionally swap the
/// inputs, relabel the output. Acting on f gives
///   g(a, b) = perm_out(f(perm_a^-1(a'), perm_b^-1(b')))
/// where (a', b') = (b, a) when swap_inputs is set and (a, b) otherwise.
template <int Radix>
struct BasicTransform {
  BasicValuePermutation<Radix> perm_a;
  BasicValuePermutation<Radix> perm_b;
  bool swap_inputs = false;
  BasicValuePermutation<Radix> perm_out;

  static BasicTransform identity() { return {}; }

  /// The whole group, (Radix!)^3 * 2 elements, in a fixed order; identity first.
  static const std::vector<BasicTransform>& all();

  /// Group product: apply(t2 * t1, f) == apply(t2, apply(t1, f)).
  friend BasicTransform operator*(const BasicTransform& t2, const BasicTransform& t1) {
    BasicTransform r;
    r.perm_a = (t1.swap_inputs ? t2.perm_b : t2.perm_a) * t1.perm_a;
    r.perm_b = (t1.swap_inputs ? t2.perm_a : t2.perm_b) * t1.perm_b;
    r.swap_inputs = t1.swap_inputs != t2.swap_inputs;
    r.perm_out = t2.perm_out * t1.perm_out;
    return r;
  }

  friend bool operator==(const BasicTransform&, const BasicTransform&) = default;
};

template <int Radix>
typename LogicSpace<Radix>::Digits apply_transform(const BasicTransform<Radix>& t,
                                                   const typename LogicSpace<Radix>::Digits& f);

/// An orbit of the NPN group. `canonical` is the smallest member index.
struct NpnClass {
  FunctionIndex canonical;
  std::vector<FunctionIndex> members;  // ascending

  std::size_t size() const { return members.size(); }
};

template <int Radix>
NpnClass orbit_of(FunctionIndex f);

/// Partition of every function of the radix into orbits, sorted by canonical.
template <int Radix>
std::vector<NpnClass> classify();

/// Fixed-point tally over the whole group, computed by brute force.
struct BurnsideTally {
  std::uint64_t group_order = 0;
  std::uint64_t identity_fixed_points = 0;
  std::uint64_t total_fixed_points = 0;

  /// Orbit count by the lemma; total_fixed_points is always a multiple of the order.
  std::uint64_t orbit_count() const { return total_fixed_points / group_order; }
};

template <int Radix>
BurnsideTally burnside_tally();

using ValuePermutation = BasicValuePermutation<3>;
using NpnTransform = BasicTransform<3>;
using BinaryTransform = BasicTransform<2>;

inline constexpr int kNpnGroupOrder = 432;

TernaryFunction apply_transform(const NpnTransform& t, const TernaryFunction& f);

NpnClass orbit(FunctionIndex f);

/// All transforms fixing f.
std::vector<NpnTransform> stabilizer(FunctionIndex f);

std::vector<NpnClass> classify_all();
std::vector<NpnClass> classify_binary();

std::uint64_t burnside_count();

/// Precomputed function -> class lookup for the ternary space. Built once on
/// first use and shared; lookups are read-only and thread safe.
class NpnClassIndex {
 public:
  static const NpnClassIndex& ternary();

  const std::vector<NpnClass>& classes() const { return classes_; }
  FunctionIndex canonical_of(FunctionIndex f) const { return FunctionIndex{canonical_[f.value]}; }
  const NpnClass& class_of(FunctionIndex f) const { return classes_[slot_[f.value]]; }

 private:
  NpnClassIndex();

  std::vector<NpnClass> classes_;
  std::vector<std::uint32_t> canonical_;
  std::vector<std::uint16_t> slot_;
};

}  // namespace nmrlogic
