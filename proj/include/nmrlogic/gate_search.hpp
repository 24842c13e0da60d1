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
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "nmrlogic/npn.hpp"
#include "nmrlogic/pc.hpp"
#include "nmrlogic/sequence_io.hpp"
#include "nmrlogic/ternary.hpp"

namespace nmrlogic {

/// Threshold readout of a simulated signal as a ternary value.
struct Quantizer {
  double epsilon = 0.25;
  /// Largest signal magnitude a well-formed experiment can produce.
  double saturation = 1.0;

  /// Throws std::invalid_argument unless 0 < epsilon < 1 and saturation > 0.
  void validate() const;
};

/// Slack on the saturation bound before a raw value counts as a simulator bug.
inline constexpr double kRawSlack = 1e-9;

/// 0 below epsilon in magnitude, otherwise the sign of x.
Trit quantize(double x, const Quantizer& q);

struct ExperimentTable {
  std::array<double, 3> param_a{};
  std::array<double, 3> param_b{};
  std::array<std::array<double, 3>, 3> raw{};  // raw[i][j] for a_i, b_j
  TernaryFunction logic;
};

/// Runs the nine experiments of a two-parameter template. Row i uses
/// a_vals[i] for $A; column j uses b_vals[j] for $B. Throws
/// std::invalid_argument for a template without exactly two parameters and
/// std::domain_error if a raw signal exceeds the quantizer's saturation.
ExperimentTable evaluate_table(const SequenceTemplate& tmpl, const std::array<double, 3>& a_vals,
                               const std::array<double, 3>& b_vals, const Quantizer& q = {});

PcSignature pc_of_experiment(const ExperimentTable& t);

struct SearchHit {
  std::array<double, 3> triple_a{};
  std::array<double, 3> triple_b{};
  TernaryFunction logic;
  FunctionIndex npn_class;  // canonical index
};

/// Exhaustive search over ascending triples (by grid position) of both grids.
/// Returns hits whose NPN class canonical is in `targets`, ordered
/// lexicographically by the triples' grid positions. Throws
/// std::invalid_argument when a grid has fewer than three points.
std::vector<SearchHit> search(const SequenceTemplate& tmpl, std::span<const double> grid_a,
                              std::span<const double> grid_b, const Quantizer& q,
                              const std::set<FunctionIndex>& targets);

/// Per-class summary of an exhaustive search with every class as a target.
struct ClassReachability {
  FunctionIndex canonical;
  std::size_t class_size = 0;
  std::size_t hits = 0;
  std::optional<SearchHit> first_hit;
};

/// One entry per NPN class, in canonical order.
std::vector<ClassReachability> reachability(const SequenceTemplate& tmpl, std::span<const double> grid_a,
                                            std::span<const double> grid_b, const Quantizer& q);

/// Single hard pulse on one on-resonance peak: beta = $A, phi = $B.
SequenceTemplate single_pulse_template();

/// Two peaks A and B at offsets omega_a and 2 omega_a, a selective pi/2
/// pulse at offset $B (phase pi/2, so an excited peak starts along +x)
/// followed by a delay $A.
SequenceTemplate selective_delay_template(double omega_a);

/// Two hard pulses on one peak: (beta1 = $A, phi1) then (beta2, phi2 = $B).
SequenceTemplate two_pulse_template(double phi1, double beta2);

}  // namespace nmrlogic
