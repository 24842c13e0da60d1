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

#include "nmrlogic/ternary.hpp"

#include <stdexcept>

namespace nmrlogic {

Trit Trit::from_int(int v) {
  if (v < -1 || v > 1) {
    throw std::invalid_argument("ternary value out of range: " + std::to_string(v));
  }
  return Trit(v);
}

Trit Trit::from_digit(int d) {
  if (d < 0 || d > 2) {
    throw std::invalid_argument("ternary digit out of range: " + std::to_string(d));
  }
  return Trit(d - 1);
}

TernaryFunction TernaryFunction::from_rows(const std::array<std::array<int, 3>, 3>& rows) {
  std::array<Trit, kTernaryCells> out{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      out[3 * a + b] = Trit::from_int(rows[a][b]);
    }
  }
  return TernaryFunction(out);
}

FunctionIndex encode(const TernaryFunction& f) {
  std::uint32_t index = 0;
  for (int i = kTernaryCells - 1; i >= 0; --i) {
    index = index * 3 + static_cast<std::uint32_t>(f.cell(i).digit());
  }
  return FunctionIndex{index};
}

TernaryFunction decode(FunctionIndex index) {
  if (index.value >= static_cast<std::uint32_t>(kTernaryFunctionCount)) {
    throw std::out_of_range("function index out of range: " + std::to_string(index.value));
  }
  std::array<Trit, kTernaryCells> out{};
  std::uint32_t rest = index.value;
  for (auto& cell : out) {
    cell = Trit::from_digit(static_cast<int>(rest % 3));
    rest /= 3;
  }
  return TernaryFunction(out);
}

TernaryFunction ternary_multiplication() {
  std::array<Trit, kTernaryCells> out{};
  for (Trit a : kTrits) {
    for (Trit b : kTrits) {
      out[TernaryFunction::flat(a, b)] = Trit::from_int(a.value() * b.value());
    }
  }
  return TernaryFunction(out);
}

std::string to_grid_string(const TernaryFunction& f) {
  std::string s;
  for (Trit a : kTrits) {
    for (Trit b : kTrits) {
      const int v = f(a, b).value();
      if (b != Trit::minus()) s += ' ';
      s += v < 0 ? "-1" : (v == 0 ? " 0" : " 1");
    }
    s += '\n';
  }
  return s;
}

}  // namespace nmrlogic
