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

#include "nmrlogic/spin_sim.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace nmrlogic {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

double Magnetization::norm() const { return std::sqrt(x * x + y * y + z * z); }

SpinSystem::SpinSystem(std::vector<Peak> peaks) : peaks_(std::move(peaks)) {
  if (peaks_.empty()) throw std::invalid_argument("spin system needs at least one peak");
  std::set<std::string> labels;
  for (const auto& p : peaks_) {
    if (!labels.insert(p.label).second) throw std::invalid_argument("duplicate peak label: " + p.label);
    require_finite(p.offset, "peak offset");
    if (p.t1 && !(*p.t1 > 0.0 && std::isfinite(*p.t1))) {
      throw std::invalid_argument("t1 of peak " + p.label + " must be positive");
    }
  }
}

SpinSystem SpinSystem::single_peak(double offset, std::optional<double> t1) {
  return SpinSystem({Peak{"A", offset, Magnetization::equilibrium(), t1}});
}

const Peak& SpinSystem::peak(const std::string& label) const {
  for (const auto& p : peaks_) {
    if (p.label == label) return p;
  }
  throw std::out_of_range("no peak labelled " + label);
}

SpinSystem SpinSystem::at_equilibrium() const {
  SpinSystem s = *this;
  for (auto& p : s.peaks_) p.m = Magnetization::equilibrium();
  return s;
}

SpinSystem with_magnetizations(SpinSystem s, const std::vector<Magnetization>& m) {
  if (m.size() != s.peaks_.size()) throw std::invalid_argument("magnetization count does not match peaks");
  for (std::size_t i = 0; i < m.size(); ++i) s.peaks_[i].m = m[i];
  return s;
}

void validate(const SequenceElement& e) {
  std::visit(Overloaded{
                 [](const HardPulse& p) {
                   require_finite(p.beta, "pulse beta");
                   require_finite(p.phi, "pulse phi");
                 },
                 [](const SelectivePulse& p) {
                   require_finite(p.beta, "pulse beta");
                   require_finite(p.phi, "pulse phi");
                   require_finite(p.target_offset, "pulse target_offset");
                   if (!(p.tolerance > 0.0)) throw std::invalid_argument("selective pulse tolerance must be positive");
                 },
                 [](const Delay& d) {
                   require_finite(d.tau, "delay tau");
                   if (d.tau < 0.0) throw std::invalid_argument("delay tau must be non-negative");
                 },
             },
             e);
}

Magnetization rotate(const Magnetization& m, double beta, double phi) {
  // Rodrigues: v' = v cos(b) + (k x v) sin(b) + k (k . v)(1 - cos(b)), k = (cos phi, sin phi, 0).
  const double kx = std::cos(phi);
  const double ky = std::sin(phi);
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const double dot = kx * m.x + ky * m.y;
  const double cx = ky * m.z;
  const double cy = -kx * m.z;
  const double cz = kx * m.y - ky * m.x;
  return {m.x * c + cx * s + kx * dot * (1.0 - c),
          m.y * c + cy * s + ky * dot * (1.0 - c),
          m.z * c + cz * s};
}

SpinSystem apply_hard_pulse(const SpinSystem& s, double beta, double phi) {
  validate(HardPulse{beta, phi});
  std::vector<Magnetization> out;
  out.reserve(s.size());
  for (const auto& p : s.peaks()) out.push_back(rotate(p.m, beta, phi));
  return with_magnetizations(s, out);
}

SpinSystem apply_selective_pulse(const SpinSystem& s, const SelectivePulse& pulse) {
  validate(pulse);
  std::vector<Magnetization> out;
  out.reserve(s.size());
  for (const auto& p : s.peaks()) {
    const bool hit = std::abs(p.offset - pulse.target_offset) < pulse.tolerance;
    out.push_back(hit ? rotate(p.m, pulse.beta, pulse.phi) : p.m);
  }
  return with_magnetizations(s, out);
}

SpinSystem apply_delay(const SpinSystem& s, double tau) {
  validate(Delay{tau});
  std::vector<Magnetization> out;
  out.reserve(s.size());
  for (const auto& p : s.peaks()) {
    const double angle = p.offset * tau;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    Magnetization m{p.m.x * c - p.m.y * sn, p.m.x * sn + p.m.y * c, p.m.z};
    if (p.t1) m.z = 1.0 + (p.m.z - 1.0) * std::exp(-tau / *p.t1);
    out.push_back(m);
  }
  return with_magnetizations(s, out);
}

SpinSystem apply(const SpinSystem& s, const SequenceElement& e) {
  return std::visit(Overloaded{
                        [&](const HardPulse& p) { return apply_hard_pulse(s, p.beta, p.phi); },
                        [&](const SelectivePulse& p) { return apply_selective_pulse(s, p); },
                        [&](const Delay& d) { return apply_delay(s, d.tau); },
                    },
                    e);
}

SpinSystem run_sequence(const SpinSystem& s, const PulseSequence& seq) {
  SpinSystem state = s.at_equilibrium();
  for (const auto& e : seq.elements) state = nmrlogic::apply(state, e);
  return state;
}

double read_mx(const SpinSystem& s) {
  double sum = 0.0;
  for (const auto& p : s.peaks()) sum += p.m.x;
  return sum;
}

ComplexReadout read_complex(const SpinSystem& s) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& p : s.peaks()) {
    re += p.m.x;
    im += p.m.y;
  }
  const double magnitude = std::hypot(re, im);
  if (magnitude < kZeroSignal) return {0.0, 0.0};
  double phase = std::atan2(im, re);
  if (phase < 0.0) phase += 2.0 * std::numbers::pi;
  if (phase >= 2.0 * std::numbers::pi) phase = 0.0;
  return {magnitude, phase};
}

std::vector<double> full_turn_samples(int n) {
  if (n < 2) throw std::invalid_argument("need at least two samples");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = k * 2.0 * std::numbers::pi / (n - 1);
  return v;
}

std::vector<std::vector<double>> two_pulse_grid(int n, double phi1, double beta2) {
  const auto samples = full_turn_samples(n);
  const auto system = SpinSystem::single_peak();
  std::vector<std::vector<double>> grid(samples.size(), std::vector<double>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const PulseSequence seq{{HardPulse{samples[i], phi1}, HardPulse{beta2, samples[j]}}};
      grid[i][j] = read_mx(run_sequence(system, seq));
    }
  }
  return grid;
}

}  // namespace nmrlogic
