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

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "nmrlogic/spin_sim.hpp"

namespace nmrlogic {

/// Wraps any angle into [0, 2pi).
double normalize_phase(double theta);

/// Shortest angular distance between two phases, in [0, pi].
double phase_distance(double a, double b);

/// A continuous truth value r e^{i theta} with r in [0, 1] and theta in [0, 2pi).
class ComplexSample {
 public:
  ComplexSample() = default;
  /// Throws std::invalid_argument unless 0 <= r <= 1 and theta is finite.
  ComplexSample(double r, double theta);

  /// Polar form of z; a magnitude below kZeroSignal gives (0, 0).
  static ComplexSample from_complex(std::complex<double> z);

  double r() const { return r_; }
  double theta() const { return theta_; }
  std::complex<double> to_complex() const { return std::polar(r_, theta_); }

 private:
  double r_ = 0.0;
  double theta_ = 0.0;
};

/// Fuzzy truth of a phase: 1 at 0 (true), 0 at pi (false).
double ptruth(double theta);

/// Magnitude NOT: (1 - r, theta).
ComplexSample mnot(const ComplexSample& z);

using PhaseRule = std::function<double(double, double)>;
using MagnitudeRule = std::function<double(double, double)>;

inline double add_phases(double t1, double t2) { return normalize_phase(t1 + t2); }
inline double multiply_magnitudes(double r1, double r2) { return r1 * r2; }

/// Magnitude AND: r1 r2, with the output phase given by `rule`.
ComplexSample mand(const ComplexSample& z1, const ComplexSample& z2, const PhaseRule& rule = add_phases);

/// Phase XNOR: theta1 + theta2 mod 2pi, with the output magnitude given by `rule`.
ComplexSample pxnor(const ComplexSample& z1, const ComplexSample& z2, const MagnitudeRule& rule = multiply_magnitudes);

/// ptruth(theta) == ptruth(2pi - theta), to 1e-12.
bool conjugate_truth_check(double theta);

/// At crisp phases (0 or pi) checks that the truth of theta1 + theta2 is the
/// Boolean XNOR of the input truths. Throws std::invalid_argument for
/// non-crisp phases.
bool pxnor_matches_crisp_xnor(double theta1, double theta2);

/// mAND magnitude with pXNOR phase: the polar form of z1 * z2.
ComplexSample complex_multiply_via_logic(const ComplexSample& z1, const ComplexSample& z2);

/// Sample and readout parameters for the NMR encoding. `alpha` scales the
/// readout so that a signal of r / alpha represents r.
struct EncodingParams {
  double t1 = 7.6;
  double omega_off = 2.0 * std::numbers::pi * 100.0;
  double alpha = 2.0;

  /// Throws std::invalid_argument unless t1 > 0, omega_off != 0 and alpha > 1.
  void validate() const;
};

class UnencodableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EncodedDelays {
  double tau_dec = 0.0;  // inversion-recovery delay, s
  double tau_d = 0.0;    // precession delay, s
};

/// tau_dec = t1 ln(2 / (1 - r / alpha)) so that alpha Mz(tau_dec) = r after
/// inversion; tau_d = theta / omega_off moved by whole turns to be >= 0.
/// Throws UnencodableError when r / alpha >= 1.
EncodedDelays encode(const ComplexSample& z, const EncodingParams& p);

/// Inversion pulse, recovery, pi/2 pulse onto +x, precession.
PulseSequence encoding_sequence(const EncodedDelays& d);

/// One peak at omega_off relaxing with t1.
SpinSystem encoding_system(const EncodingParams& p);

/// Encodes z, runs the sequence and reads it back, rescaled by alpha.
ComplexSample encode_decode_roundtrip(const ComplexSample& z, const EncodingParams& p);

}  // namespace nmrlogic
