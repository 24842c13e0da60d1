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
#include <ranges>
#include <string>

namespace nmrlogic {

/// A balanced ternary logic value: -1, 0 or +1.
class Trit {
 public:
  constexpr Trit() = default;

  static constexpr Trit minus() { return Trit(-1); }
  static constexpr Trit zero() { return Trit(0); }
  static constexpr Trit plus() { return Trit(1); }

  /// Throws std::invalid_argument unless v is -1, 0 or 1.
  static Trit from_int(int v);
  /// Digit form used by the dense encoding: -1 -> 0, 0 -> 1, +1 -> 2.
  static Trit from_digit(int d);

  constexpr int value() const { return value_; }
  constexpr int digit() const { return value_ + 1; }

  constexpr Trit operator-() const { return Trit(static_cast<std::int8_t>(-value_)); }
  friend constexpr bool operator==(Trit, Trit) = default;
  friend constexpr auto operator<=>(Trit, Trit) = default;

 private:
  constexpr explicit Trit(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_ = 0;
};

inline constexpr std::array<Trit, 3> kTrits = {Trit::minus(), Trit::zero(), Trit::plus()};

inline constexpr int kTernaryCells = 9;
inline constexpr int kTernaryFunctionCount = 19683;  // 3^9

/// Dense index of a two-input function. For ternary functions this is
/// sum(digit(i) * 3^i) over the flat cells; binary functions use base 2.
struct FunctionIndex {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FunctionIndex, FunctionIndex) = default;
};

/// 3x3 truth table. Row is input A, column is input B.
class TernaryFunction {
 public:
  /// Constant-zero function.
  constexpr TernaryFunction() = default;
  constexpr explicit TernaryFunction(const std::array<Trit, kTernaryCells>& outputs) : outputs_(outputs) {}

  static constexpr TernaryFunction constant(Trit v) {
    TernaryFunction f;
    f.outputs_.fill(v);
    return f;
  }

  /// Builds a table from integer rows (A = -1, 0, 1 top to bottom).
  static TernaryFunction from_rows(const std::array<std::array<int, 3>, 3>& rows);

  static constexpr int flat(Trit a, Trit b) { return 3 * a.digit() + b.digit(); }

  constexpr Trit operator()(Trit a, Trit b) const { return outputs_[flat(a, b)]; }
  constexpr Trit cell(int flat_index) const { return outputs_[flat_index]; }
  constexpr void set(Trit a, Trit b, Trit v) { outputs_[flat(a, b)] = v; }

  constexpr const std::array<Trit, kTernaryCells>& outputs() const { return outputs_; }

  friend constexpr bool operator==(const TernaryFunction&, const TernaryFunction&) = default;

 private:
  std::array<Trit, kTernaryCells> outputs_{};
};

FunctionIndex encode(const TernaryFunction& f);

/// Throws std::out_of_range for indices above 19682.
TernaryFunction decode(FunctionIndex index);

inline Trit eval(const TernaryFunction& f, Trit a, Trit b) { return f(a, b); }

/// Every function index in ascending order.
inline auto enumerate_all() {
  return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(kTernaryFunctionCount)) |
         std::views::transform([](std::uint32_t i) { return FunctionIndex{i}; });
}

/// Balanced ternary multiplication, the worked example used throughout.
TernaryFunction ternary_multiplication();

/// Three lines of space-separated values, rows ordered A = -1, 0, 1.
std::string to_grid_string(const TernaryFunction& f);

}  // namespace nmrlogic
