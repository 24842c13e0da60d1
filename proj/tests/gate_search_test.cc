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

#include "nmrlogic/gate_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace nmrlogic;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmegaA = 2.0 * kPi * 100.0;

const std::array<double, 3> kMulParams = {kPi / 2.0, kPi, 3.0 * kPi / 2.0};

TernaryFunction selective_delay_table() { return TernaryFunction::from_rows({{{1, 0, 1}, {0, 0, -1}, {-1, 0, 1}}}); }

FunctionIndex class_of(const TernaryFunction& f) { return NpnClassIndex::ternary().canonical_of(encode(f)); }

std::vector<double> uniform_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[k] = 2.0 * kPi * k / n;
  return g;
}

}  // namespace

TEST(quantize, threshold_rule) {
  const Quantizer q;
  EXPECT_EQ(q.epsilon, 0.25);
  EXPECT_EQ(quantize(0.0, q), Trit::zero());
  EXPECT_EQ(quantize(1.0, q), Trit::plus());
  EXPECT_EQ(quantize(-0.999, Quantizer{0.5, 1.0}), Trit::minus());
  EXPECT_EQ(quantize(0.25, q), Trit::plus());
  EXPECT_EQ(quantize(-0.25, q), Trit::minus());
  EXPECT_EQ(quantize(0.2499, q), Trit::zero());
  EXPECT_THROW((Quantizer{1.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((Quantizer{0.0, 1.0}.validate()), std::invalid_argument);
}

TEST(quantize, odd_symmetry) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Quantizer q;
  for (int n = 0; n < 10000; ++n) {
    const double x = u(rng);
    if (std::abs(x) == q.epsilon) continue;
    EXPECT_EQ(quantize(-x, q), -quantize(x, q));
  }
}

TEST(evaluate_table, single_pulse_gives_multiplication) {
  const auto t = evaluate_table(single_pulse_template(), kMulParams, kMulParams);
  EXPECT_EQ(t.logic, ternary_multiplication());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(t.raw[i][j], std::sin(kMulParams[i]) * std::sin(kMulParams[j]), 1e-12);
  }
  EXPECT_EQ(pc_of_experiment(t), PcSignature(LineCounts{{1, 3, 3}}, LineCounts{{1, 3, 3}}));
}

TEST(evaluate_table, single_pulse_is_rank_one) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int n = 0; n < 200; ++n) {
    const std::array<double, 3> a{u(rng), u(rng), u(rng)};
    const std::array<double, 3> b{u(rng), u(rng), u(rng)};
    const auto t = evaluate_table(single_pulse_template(), a, b);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) ASSERT_NEAR(t.raw[i][j], std::sin(a[i]) * std::sin(b[j]), 1e-12);
    }
  }
}

TEST(evaluate_table, selective_delay_table) {
  const std::array<double, 3> delays = {0.0, kPi / 2.0 / kOmegaA, kPi / kOmegaA};
  const std::array<double, 3> targets = {kOmegaA, 1.5 * kOmegaA, 2.0 * kOmegaA};
  const auto t = evaluate_table(selective_delay_template(kOmegaA), delays, targets);
  EXPECT_EQ(t.logic, selective_delay_table());
  EXPECT_EQ(row_counts(t.logic), (LineCounts{{2, 2, 3}}));
  EXPECT_EQ(column_counts(t.logic), (LineCounts{{1, 2, 3}}));
  EXPECT_EQ(pc_of_experiment(t), PcSignature(LineCounts{{2, 2, 3}}, LineCounts{{1, 2, 3}}));
}

TEST(evaluate_table, binary_xor_subtable) {
  // beta, phi in {pi/2, 3pi/2}: the sign of sin(beta) sin(phi).
  const auto t = evaluate_table(single_pulse_template(), {kPi / 2.0, kPi / 2.0, 3.0 * kPi / 2.0},
                                {kPi / 2.0, kPi / 2.0, 3.0 * kPi / 2.0});
  const auto out = [&](int i, int j) { return t.logic(kTrits[i], kTrits[j]).value(); };
  EXPECT_EQ(out(0, 0), 1);
  EXPECT_EQ(out(0, 2), -1);
  EXPECT_EQ(out(2, 0), -1);
  EXPECT_EQ(out(2, 2), 1);
  // Relabel -1 -> 1, +1 -> 0: equal inputs give 0, unequal give 1, i.e. XOR.
  for (int i : {0, 2}) {
    for (int j : {0, 2}) EXPECT_EQ(out(i, j) == -1 ? 1 : 0, (i != j) ? 1 : 0);
  }
}

TEST(evaluate_table, constant_experiment) {
  const auto t = evaluate_table(single_pulse_template(), {0.0, kPi, 2.0 * kPi}, {0.3, 1.0, 2.0});
  EXPECT_EQ(t.logic, TernaryFunction::constant(Trit::zero()));
  EXPECT_EQ(pc_of_experiment(t), PcSignature(LineCounts{{1, 1, 1}}, LineCounts{{1, 1, 1}}));
}

TEST(evaluate_table, arity_and_saturation_errors) {
  auto one_param = single_pulse_template();
  one_param.bindings.pop_back();
  EXPECT_THROW(evaluate_table(one_param, kMulParams, kMulParams), std::invalid_argument);

  // Both peaks excited along +x: read_mx reaches 2, beyond a unit saturation.
  SequenceTemplate both{SpinSystem({Peak{"A", 0.0, {}, std::nullopt}, Peak{"B", 1.0, {}, std::nullopt}}),
                        PulseSequence{{HardPulse{}}},
                        {{0, ElementField::beta, Placeholder::A}, {0, ElementField::phi, Placeholder::B}}};
  EXPECT_THROW(evaluate_table(both, kMulParams, kMulParams), std::domain_error);
  EXPECT_NO_THROW(evaluate_table(both, kMulParams, kMulParams, Quantizer{0.25, 2.0}));
}

TEST(evaluate_table, permuting_parameters_keeps_npn_class) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  const auto tmpl = single_pulse_template();
  for (int n = 0; n < 100; ++n) {
    std::array<double, 3> a{u(rng), u(rng), u(rng)};
    std::array<double, 3> b{u(rng), u(rng), u(rng)};
    const auto base = class_of(evaluate_table(tmpl, a, b).logic);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    EXPECT_EQ(class_of(evaluate_table(tmpl, a, b).logic), base);
  }
}

TEST(search, finds_multiplication) {
  std::vector<double> grid;
  for (int k = 0; k < 8; ++k) grid.push_back(k * kPi / 4.0);  // includes pi/2, pi, 3pi/2
  const auto target = class_of(ternary_multiplication());
  const auto hits = search(single_pulse_template(), grid, grid, Quantizer{}, {target});
  ASSERT_FALSE(hits.empty());
  bool exact = false;
  for (const auto& h : hits) {
    EXPECT_EQ(h.npn_class, target);
    const auto again = evaluate_table(single_pulse_template(), h.triple_a, h.triple_b);
    EXPECT_EQ(again.logic, h.logic);
    EXPECT_EQ(class_of(again.logic), target);
    exact = exact || (std::abs(h.triple_a[0] - kPi / 2.0) < 1e-12 && std::abs(h.triple_a[1] - kPi) < 1e-12 &&
                      std::abs(h.triple_a[2] - 3.0 * kPi / 2.0) < 1e-12 && h.triple_b == h.triple_a);
  }
  EXPECT_TRUE(exact);
}

TEST(search, selective_delay_class_unreachable_by_single_pulse) {
  const auto grid = uniform_grid(16);
  const auto hits =
      search(single_pulse_template(), grid, grid, Quantizer{}, {class_of(selective_delay_table())});
  EXPECT_TRUE(hits.empty());
}

TEST(search, selective_delay_template_reaches_its_class) {
  const std::vector<double> delays = {0.0, kPi / 2.0 / kOmegaA, kPi / kOmegaA};
  const std::vector<double> targets = {kOmegaA, 1.5 * kOmegaA, 2.0 * kOmegaA};
  const auto hits = search(selective_delay_template(kOmegaA), delays, targets, Quantizer{},
                           {class_of(selective_delay_table())});
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].logic, selective_delay_table());
}

TEST(search, empty_targets_and_small_grids) {
  const auto grid = uniform_grid(8);
  EXPECT_TRUE(search(single_pulse_template(), grid, grid, Quantizer{}, {}).empty());
  const std::vector<double> tiny = {0.0, 1.0};
  EXPECT_THROW(search(single_pulse_template(), tiny, grid, Quantizer{}, {FunctionIndex{0}}), std::invalid_argument);
  EXPECT_THROW(search(single_pulse_template(), grid, tiny, Quantizer{}, {}), std::invalid_argument);
}

TEST(search, deterministic_order) {
  const auto grid = uniform_grid(8);
  std::set<FunctionIndex> all;
  for (const auto& c : NpnClassIndex::ternary().classes()) all.insert(c.canonical);
  const auto first = search(single_pulse_template(), grid, grid, Quantizer{}, all);
  const auto second = search(single_pulse_template(), grid, grid, Quantizer{}, all);
  ASSERT_EQ(first.size(), second.size());
  EXPECT_EQ(first.size(), 56u * 56u);  // every triple pair is some class
  for (std::size_t k = 0; k < first.size(); ++k) {
    EXPECT_EQ(first[k].triple_a, second[k].triple_a);
    EXPECT_EQ(first[k].triple_b, second[k].triple_b);
  }
}

TEST(reachability, single_pulse_summary) {
  const auto grid = uniform_grid(8);
  const auto rows = reachability(single_pulse_template(), grid, grid, Quantizer{});
  ASSERT_EQ(rows.size(), 84u);
  std::size_t total = 0;
  for (const auto& r : rows) {
    total += r.hits;
    EXPECT_EQ(r.first_hit.has_value(), r.hits > 0);
  }
  EXPECT_EQ(total, 56u * 56u);
  const auto mul = class_of(ternary_multiplication());
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.canonical == mul; });
  ASSERT_NE(it, rows.end());
  EXPECT_GT(it->hits, 0u);
  EXPECT_EQ(it->class_size, 54u);
}
