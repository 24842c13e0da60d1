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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nmrlogic/spin_sim.hpp"

namespace nmrlogic {

// Document layout:
//
//   {
//     "peaks":    [{"label": "A", "offset_rad_s": 0.0, "t1_s": 7.6}, ...],
//     "sequence": [{"type": "hard_pulse", "beta_rad": 1.5708, "phi_rad": "$A"},
//                  {"type": "selective_pulse", "beta_rad": ..., "phi_rad": ...,
//                   "target_offset_rad_s": ..., "tolerance_rad_s": ...},
//                  {"type": "delay", "tau_s": ...}]
//   }
//
// "t1_s" is optional. In a template any numeric element field may instead be
// the string "$A" or "$B".

class SequenceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Placeholder { A, B };
enum class ElementField { beta, phi, target_offset, tolerance, tau };

/// A placeholder occurrence: element `element`, field `field` takes `slot`.
struct Binding {
  std::size_t element = 0;
  ElementField field = ElementField::beta;
  Placeholder slot = Placeholder::A;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct SequenceDocument {
  SpinSystem system;
  PulseSequence sequence;
};

/// A pulse sequence with up to two free parameters.
struct SequenceTemplate {
  SpinSystem system;
  PulseSequence base;  // placeholder fields hold 0 until instantiated
  std::vector<Binding> bindings;

  bool uses(Placeholder p) const;
  /// Number of distinct placeholders referenced (0, 1 or 2).
  int arity() const;
  /// Fills every $A field with `a` and every $B field with `b`.
  PulseSequence instantiate(double a, double b) const;
};

SequenceTemplate parse_sequence_template(const nlohmann::json& doc);
SequenceTemplate parse_sequence_template(std::string_view text);
inline SequenceTemplate parse_sequence_template(const std::string& text) {
  return parse_sequence_template(std::string_view(text));
}
inline SequenceTemplate parse_sequence_template(const char* text) {
  return parse_sequence_template(std::string_view(text));
}
SequenceTemplate load_sequence_template(const std::filesystem::path& path);

/// Rejects placeholders.
SequenceDocument parse_sequence_document(const nlohmann::json& doc);
SequenceDocument parse_sequence_document(std::string_view text);
inline SequenceDocument parse_sequence_document(const std::string& text) {
  return parse_sequence_document(std::string_view(text));
}
inline SequenceDocument parse_sequence_document(const char* text) {
  return parse_sequence_document(std::string_view(text));
}

nlohmann::json to_json(const SequenceDocument& doc);
nlohmann::json to_json(const SequenceTemplate& tmpl);

}  // namespace nmrlogic
