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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nmrlogic {
namespace {

constexpr double kPi = std::numbers::pi;

void require_arity_two(const SequenceTemplate& tmpl) {
  if (tmpl.arity() != 2) {
    throw std::invalid_argument("sequence template must use both $A and $B, found " + std::to_string(tmpl.arity()) +
                                " parameter(s)");
  }
}

double simulate(const SequenceTemplate& tmpl, double a, double b, const Quantizer& q) {
  const double x = read_mx(run_sequence(tmpl.system, tmpl.instantiate(a, b)));
  if (!(std::abs(x) <= q.saturation + kRawSlack)) {
    throw std::domain_error("simulated signal " + std::to_string(x) + " exceeds saturation");
  }
  return x;
}

// Ternary digits of every grid point, row-major over (grid_a, grid_b).
std::vector<std::uint8_t> digit_grid(const SequenceTemplate& tmpl, std::span<const double> grid_a,
                                     std::span<const double> grid_b, const Quantizer& q) {
  std::vector<std::uint8_t> digits(grid_a.size() * grid_b.size());
  for (std::size_t i = 0; i < grid_a.size(); ++i) {
    for (std::size_t j = 0; j < grid_b.size(); ++j) {
      digits[i * grid_b.size() + j] = static_cast<std::uint8_t>(quantize(simulate(tmpl, grid_a[i], grid_b[j], q), q).digit());
    }
  }
  return digits;
}

std::vector<std::array<std::size_t, 3>> ascending_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

// Calls visit(triple_a, triple_b, function index) for every triple pair.
template <class Visit>
void for_each_table(const SequenceTemplate& tmpl, std::span<const double> grid_a, std::span<const double> grid_b,
                    const Quantizer& q, Visit&& visit) {
  require_arity_two(tmpl);
  q.validate();
  if (grid_a.size() < 3 || grid_b.size() < 3) throw std::invalid_argument("search grids need at least three points");
  const auto digits = digit_grid(tmpl, grid_a, grid_b, q);
  const auto rows = ascending_triples(grid_a.size());
  const auto cols = ascending_triples(grid_b.size());
  for (const auto& ta : rows) {
    for (const auto& tb : cols) {
      std::uint32_t index = 0;
      for (int cell = 8; cell >= 0; --cell) {
        index = index * 3 + digits[ta[cell / 3] * grid_b.size() + tb[cell % 3]];
      }
      visit(ta, tb, FunctionIndex{index});
    }
  }
}

SearchHit make_hit(std::span<const double> grid_a, std::span<const double> grid_b,
                   const std::array<std::size_t, 3>& ta, const std::array<std::size_t, 3>& tb, FunctionIndex f,
                   FunctionIndex canonical) {
  SearchHit hit;
  for (int k = 0; k < 3; ++k) {
    hit.triple_a[k] = grid_a[ta[k]];
    hit.triple_b[k] = grid_b[tb[k]];
  }
  hit.logic = decode(f);
  hit.npn_class = canonical;
  return hit;
}

}  // namespace

void Quantizer::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("quantizer epsilon must lie in (0, 1)");
  if (!(saturation > 0.0)) throw std::invalid_argument("quantizer saturation must be positive");
}

Trit quantize(double x, const Quantizer& q) {
  if (std::abs(x) < q.epsilon) return Trit::zero();
  return x > 0.0 ? Trit::plus() : Trit::minus();
}

ExperimentTable evaluate_table(const SequenceTemplate& tmpl, const std::array<double, 3>& a_vals,
                               const std::array<double, 3>& b_vals, const Quantizer& q) {
  require_arity_two(tmpl);
  q.validate();
  ExperimentTable t;
  t.param_a = a_vals;
  t.param_b = b_vals;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t.raw[i][j] = simulate(tmpl, a_vals[i], b_vals[j], q);
      t.logic.set(kTrits[i], kTrits[j], quantize(t.raw[i][j], q));
    }
  }
  return t;
}

PcSignature pc_of_experiment(const ExperimentTable& t) { return pc_signature(t.logic); }

std::vector<SearchHit> search(const SequenceTemplate& tmpl, std::span<const double> grid_a,
                              std::span<const double> grid_b, const Quantizer& q,
                              const std::set<FunctionIndex>& targets) {
  std::vector<SearchHit> hits;
  if (targets.empty()) {
    // Still reject malformed input so that an empty target set is not a way around validation.
    require_arity_two(tmpl);
    if (grid_a.size() < 3 || grid_b.size() < 3) throw std::invalid_argument("search grids need at least three points");
    return hits;
  }
  const auto& index = NpnClassIndex::ternary();
  for_each_table(tmpl, grid_a, grid_b, q, [&](const auto& ta, const auto& tb, FunctionIndex f) {
    const auto canonical = index.canonical_of(f);
    if (targets.count(canonical)) hits.push_back(make_hit(grid_a, grid_b, ta, tb, f, canonical));
  });
  return hits;
}

std::vector<ClassReachability> reachability(const SequenceTemplate& tmpl, std::span<const double> grid_a,
                                            std::span<const double> grid_b, const Quantizer& q) {
  const auto& index = NpnClassIndex::ternary();
  const auto& classes = index.classes();
  std::vector<ClassReachability> out(classes.size());
  std::vector<std::size_t> slot(kTernaryFunctionCount);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out[k].canonical = classes[k].canonical;
    out[k].class_size = classes[k].size();
    for (auto m : classes[k].members) slot[m.value] = k;
  }
  for_each_table(tmpl, grid_a, grid_b, q, [&](const auto& ta, const auto& tb, FunctionIndex f) {
    auto& r = out[slot[f.value]];
    if (r.hits++ == 0) r.first_hit = make_hit(grid_a, grid_b, ta, tb, f, r.canonical);
  });
  return out;
}

SequenceTemplate single_pulse_template() {
  return SequenceTemplate{SpinSystem::single_peak(), PulseSequence{{HardPulse{}}},
                          {{0, ElementField::beta, Placeholder::A}, {0, ElementField::phi, Placeholder::B}}};
}

SequenceTemplate selective_delay_template(double omega_a) {
  if (!(std::isfinite(omega_a) && omega_a != 0.0)) throw std::invalid_argument("omega_a must be finite and nonzero");
  SpinSystem system({Peak{"A", omega_a, Magnetization::equilibrium(), std::nullopt},
                     Peak{"B", 2.0 * omega_a, Magnetization::equilibrium(), std::nullopt}});
  const double tolerance = std::abs(omega_a) / 4.0;
  return SequenceTemplate{std::move(system),
                          PulseSequence{{SelectivePulse{kPi / 2.0, kPi / 2.0, 0.0, tolerance}, Delay{}}},
                          {{0, ElementField::target_offset, Placeholder::B}, {1, ElementField::tau, Placeholder::A}}};
}

SequenceTemplate two_pulse_template(double phi1, double beta2) {
  return SequenceTemplate{SpinSystem::single_peak(), PulseSequence{{HardPulse{0.0, phi1}, HardPulse{beta2, 0.0}}},
                          {{0, ElementField::beta, Placeholder::A}, {1, ElementField::phi, Placeholder::B}}};
}

}  // namespace nmrlogic
