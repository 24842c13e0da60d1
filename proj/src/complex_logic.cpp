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

#include "nmrlogic/complex_logic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nmrlogic {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double normalize_phase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double phase_distance(double a, double b) {
  const double d = normalize_phase(a - b);
  return std::min(d, kTwoPi - d);
}

ComplexSample::ComplexSample(double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("magnitude must lie in [0, 1], got " + std::to_string(r));
  if (!std::isfinite(theta)) throw std::invalid_argument("phase must be finite");
  r_ = r;
  theta_ = normalize_phase(theta);
}

ComplexSample ComplexSample::from_complex(std::complex<double> z) {
  const double r = std::abs(z);
  if (r < kZeroSignal) return {};
  return ComplexSample(std::min(r, 1.0), std::arg(z));
}

double ptruth(double theta) { return std::abs(kPi - theta) / kPi; }

ComplexSample mnot(const ComplexSample& z) { return ComplexSample(1.0 - z.r(), z.theta()); }

ComplexSample mand(const ComplexSample& z1, const ComplexSample& z2, const PhaseRule& rule) {
  return ComplexSample(z1.r() * z2.r(), rule(z1.theta(), z2.theta()));
}

ComplexSample pxnor(const ComplexSample& z1, const ComplexSample& z2, const MagnitudeRule& rule) {
  return ComplexSample(rule(z1.r(), z2.r()), z1.theta() + z2.theta());
}

bool conjugate_truth_check(double theta) {
  const double t = normalize_phase(theta);
  return std::abs(ptruth(t) - ptruth(normalize_phase(kTwoPi - t))) <= 1e-12;
}

bool pxnor_matches_crisp_xnor(double theta1, double theta2) {
  const auto crisp = [](double theta) {
    const double t = normalize_phase(theta);
    if (t == 0.0) return true;
    if (t == kPi) return false;
    throw std::invalid_argument("phase is not crisp: " + std::to_string(theta));
  };
  const bool x = crisp(theta1);
  const bool y = crisp(theta2);
  const double combined = add_phases(theta1, theta2);
  return ptruth(combined) == (x == y ? 1.0 : 0.0);
}

ComplexSample complex_multiply_via_logic(const ComplexSample& z1, const ComplexSample& z2) {
  const auto magnitude = mand(z1, z2);
  const auto phase = pxnor(z1, z2);
  return ComplexSample(magnitude.r(), phase.theta());
}

void EncodingParams::validate() const {
  if (!(t1 > 0.0 && std::isfinite(t1))) throw std::invalid_argument("t1 must be positive");
  if (!(omega_off != 0.0 && std::isfinite(omega_off))) throw std::invalid_argument("omega_off must be finite and nonzero");
  if (!(alpha > 1.0 && std::isfinite(alpha))) throw std::invalid_argument("alpha must exceed 1");
}

EncodedDelays encode(const ComplexSample& z, const EncodingParams& p) {
  p.validate();
  const double fraction = z.r() / p.alpha;
  if (fraction >= 1.0) throw UnencodableError("magnitude " + std::to_string(z.r()) + " needs an infinite delay");
  EncodedDelays d;
  d.tau_dec = p.t1 * std::log(2.0 / (1.0 - fraction));
  const double turn = kTwoPi / std::abs(p.omega_off);
  d.tau_d = z.theta() / p.omega_off;
  if (d.tau_d < 0.0) d.tau_d += turn * std::ceil(-d.tau_d / turn);
  d.tau_d = std::max(d.tau_d, 0.0);
  return d;
}

PulseSequence encoding_sequence(const EncodedDelays& d) {
  return PulseSequence{{HardPulse{kPi, 0.0}, Delay{d.tau_dec}, HardPulse{kPi / 2.0, kPi / 2.0}, Delay{d.tau_d}}};
}

SpinSystem encoding_system(const EncodingParams& p) {
  p.validate();
  return SpinSystem::single_peak(p.omega_off, p.t1);
}

ComplexSample encode_decode_roundtrip(const ComplexSample& z, const EncodingParams& p) {
  const auto delays = encode(z, p);
  const auto readout = read_complex(run_sequence(encoding_system(p), encoding_sequence(delays)));
  const double r = readout.magnitude * p.alpha;
  if (r < kZeroSignal) return {};
  return ComplexSample(std::min(r, 1.0), readout.phase);
}

}  // namespace nmrlogic
