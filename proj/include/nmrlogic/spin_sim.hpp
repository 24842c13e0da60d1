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

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nmrlogic {

/// Bulk magnetization in units of the equilibrium value M0.
struct Magnetization {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  static constexpr Magnetization equilibrium() { return {0.0, 0.0, 1.0}; }

  double norm() const;

  friend constexpr bool operator==(const Magnetization&, const Magnetization&) = default;
};

/// One spectral line. `offset` is its angular frequency in the rotating
/// frame (rad/s); `t1` is the longitudinal relaxation time in seconds, or
/// empty for no relaxation.
struct Peak {
  std::string label;
  double offset = 0.0;
  Magnetization m;
  std::optional<double> t1;
};

/// A sample made of one or more peaks with unique labels.
class SpinSystem {
 public:
  /// Throws std::invalid_argument on an empty list, duplicate labels, a
  /// non-finite offset or a non-positive t1.
  explicit SpinSystem(std::vector<Peak> peaks);

  /// A single on-resonance peak without relaxation.
  static SpinSystem single_peak(double offset = 0.0, std::optional<double> t1 = std::nullopt);

  const std::vector<Peak>& peaks() const { return peaks_; }
  std::size_t size() const { return peaks_.size(); }
  const Peak& peak(const std::string& label) const;

  /// Same peaks, every magnetization reset to (0, 0, 1).
  SpinSystem at_equilibrium() const;

 private:
  friend SpinSystem with_magnetizations(SpinSystem, const std::vector<Magnetization>&);
  std::vector<Peak> peaks_;
};

/// Copy of `s` with the per-peak magnetizations replaced (same order).
SpinSystem with_magnetizations(SpinSystem s, const std::vector<Magnetization>& m);

/// Non-selective ideal pulse: rotation by `beta` about (cos phi, sin phi, 0).
struct HardPulse {
  double beta = 0.0;
  double phi = 0.0;
};

/// Ideal frequency filter: rotates only peaks with
/// |offset - target_offset| < tolerance.
struct SelectivePulse {
  double beta = 0.0;
  double phi = 0.0;
  double target_offset = 0.0;
  double tolerance = 1.0;
};

/// Free evolution for `tau` seconds.
struct Delay {
  double tau = 0.0;
};

using SequenceElement = std::variant<HardPulse, SelectivePulse, Delay>;

struct PulseSequence {
  std::vector<SequenceElement> elements;
};

/// Throws std::invalid_argument if any field breaks the element's invariants.
void validate(const SequenceElement& e);

/// Right-handed rotation of `m` by `beta` about (cos phi, sin phi, 0).
Magnetization rotate(const Magnetization& m, double beta, double phi);

SpinSystem apply_hard_pulse(const SpinSystem& s, double beta, double phi);
SpinSystem apply_selective_pulse(const SpinSystem& s, const SelectivePulse& pulse);

/// Precession (mx + i my) <- (mx + i my) e^{i offset tau} and, where t1 is
/// set, recovery mz <- 1 + (mz - 1) e^{-tau / t1}. Transverse decay is not
/// modelled. Throws std::invalid_argument for negative tau.
SpinSystem apply_delay(const SpinSystem& s, double tau);

SpinSystem apply(const SpinSystem& s, const SequenceElement& e);

/// Resets `s` to equilibrium (an ideal relaxation delay) and applies the
/// elements in order.
SpinSystem run_sequence(const SpinSystem& s, const PulseSequence& seq);

/// Sum over peaks of mx.
double read_mx(const SpinSystem& s);

struct ComplexReadout {
  double magnitude = 0.0;
  double phase = 0.0;  // [0, 2pi)
};

/// Below this magnitude the signal is treated as zero and its phase reported as 0.
inline constexpr double kZeroSignal = 1e-12;

/// Polar form of the summed transverse signal, sum(mx + i my).
ComplexReadout read_complex(const SpinSystem& s);

/// n points k * 2pi / (n - 1), k = 0..n-1.
std::vector<double> full_turn_samples(int n);

/// grid[i][j] = read_mx after [HardPulse(beta1_i, phi1), HardPulse(beta2, phi2_j)]
/// on one on-resonance peak, with beta1 and phi2 sampled by full_turn_samples(n).
/// Throws std::invalid_argument for n < 2.
std::vector<std::vector<double>> two_pulse_grid(int n, double phi1, double beta2);

}  // namespace nmrlogic
