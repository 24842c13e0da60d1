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

#include "nmrlogic/sequence_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace nmrlogic {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* field_key(ElementField f) {
  switch (f) {
    case ElementField::beta: return "beta_rad";
    case ElementField::phi: return "phi_rad";
    case ElementField::target_offset: return "target_offset_rad_s";
    case ElementField::tolerance: return "tolerance_rad_s";
    case ElementField::tau: return "tau_s";
  }
  return "";
}

double& field_ref(SequenceElement& e, ElementField f) {
  return std::visit(Overloaded{
                        [&](HardPulse& p) -> double& {
                          if (f == ElementField::beta) return p.beta;
                          if (f == ElementField::phi) return p.phi;
                          throw std::logic_error("hard pulse has no such field");
                        },
                        [&](SelectivePulse& p) -> double& {
                          switch (f) {
                            case ElementField::beta: return p.beta;
                            case ElementField::phi: return p.phi;
                            case ElementField::target_offset: return p.target_offset;
                            case ElementField::tolerance: return p.tolerance;
                            default: throw std::logic_error("selective pulse has no such field");
                          }
                        },
                        [&](Delay& d) -> double& {
                          if (f == ElementField::tau) return d.tau;
                          throw std::logic_error("delay has no such field");
                        },
                    },
                    e);
}

std::vector<ElementField> fields_of(const SequenceElement& e) {
  return std::visit(Overloaded{
                        [](const HardPulse&) { return std::vector{ElementField::beta, ElementField::phi}; },
                        [](const SelectivePulse&) {
                          return std::vector{ElementField::beta, ElementField::phi, ElementField::target_offset,
                                             ElementField::tolerance};
                        },
                        [](const Delay&) { return std::vector{ElementField::tau}; },
                    },
                    e);
}

const char* type_name(const SequenceElement& e) {
  return std::visit(Overloaded{
                        [](const HardPulse&) { return "hard_pulse"; },
                        [](const SelectivePulse&) { return "selective_pulse"; },
                        [](const Delay&) { return "delay"; },
                    },
                    e);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SequenceFormatError(where + ": " + what);
}

double number_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(where, std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
  }
}

SpinSystem parse_peaks(const json& doc) {
  if (!doc.contains("peaks") || !doc.at("peaks").is_array()) fail("document", "\"peaks\" must be an array");
  std::vector<Peak> peaks;
  std::size_t i = 0;
  for (const auto& p : doc.at("peaks")) {
    const std::string where = "peaks[" + std::to_string(i++) + "]";
    if (!p.is_object()) fail(where, "must be an object");
    reject_unknown_keys(p, {"label", "offset_rad_s", "t1_s"}, where);
    if (!p.contains("label") || !p.at("label").is_string()) fail(where, "\"label\" must be a string");
    Peak peak;
    peak.label = p.at("label").get<std::string>();
    peak.offset = number_at(p, "offset_rad_s", where);
    if (p.contains("t1_s") && !p.at("t1_s").is_null()) peak.t1 = number_at(p, "t1_s", where);
    peaks.push_back(std::move(peak));
  }
  try {
    return SpinSystem(std::move(peaks));
  } catch (const std::invalid_argument& e) {
    fail("peaks", e.what());
  }
}

SequenceTemplate parse_template_impl(const json& doc) {
  if (!doc.is_object()) fail("document", "top level must be an object");
  reject_unknown_keys(doc, {"peaks", "sequence"}, "document");
  SpinSystem system = parse_peaks(doc);
  if (!doc.contains("sequence") || !doc.at("sequence").is_array()) fail("document", "\"sequence\" must be an array");

  PulseSequence seq;
  std::vector<Binding> bindings;
  std::size_t i = 0;
  for (const auto& el : doc.at("sequence")) {
    const std::string where = "sequence[" + std::to_string(i) + "]";
    if (!el.is_object()) fail(where, "must be an object");
    if (!el.contains("type") || !el.at("type").is_string()) fail(where, "\"type\" must be a string");
    const auto type = el.at("type").get<std::string>();
    SequenceElement e;
    if (type == "hard_pulse") {
      e = HardPulse{};
    } else if (type == "selective_pulse") {
      e = SelectivePulse{};
    } else if (type == "delay") {
      e = Delay{};
    } else {
      fail(where, "unknown element type \"" + type + "\"");
    }
    std::set<std::string> allowed{"type"};
    for (auto f : fields_of(e)) allowed.insert(field_key(f));
    reject_unknown_keys(el, allowed, where);

    for (auto f : fields_of(e)) {
      const char* key = field_key(f);
      if (!el.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
      const auto& v = el.at(key);
      if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "$A") {
          bindings.push_back({i, f, Placeholder::A});
        } else if (s == "$B") {
          bindings.push_back({i, f, Placeholder::B});
        } else {
          fail(where, std::string("field \"") + key + "\" must be a number, \"$A\" or \"$B\"");
        }
        field_ref(e, f) = 0.0;
      } else {
        field_ref(e, f) = number_at(el, key, where);
      }
    }
    // Fields already fixed must be valid on their own; placeholders are checked on instantiation.
    SequenceElement probe = e;
    for (const auto& b : bindings) {
      if (b.element == i) field_ref(probe, b.field) = b.field == ElementField::tolerance ? 1.0 : 0.0;
    }
    try {
      validate(probe);
    } catch (const std::invalid_argument& ex) {
      fail(where, ex.what());
    }
    seq.elements.push_back(e);
    ++i;
  }
  return SequenceTemplate{std::move(system), std::move(seq), std::move(bindings)};
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SequenceFormatError(std::string("malformed JSON: ") + e.what());
  }
}

json peaks_to_json(const SpinSystem& s) {
  json peaks = json::array();
  for (const auto& p : s.peaks()) {
    json jp{{"label", p.label}, {"offset_rad_s", p.offset}};
    if (p.t1) jp["t1_s"] = *p.t1;
    peaks.push_back(jp);
  }
  return peaks;
}

json sequence_to_json(const PulseSequence& seq, const std::vector<Binding>& bindings) {
  json out = json::array();
  for (std::size_t i = 0; i < seq.elements.size(); ++i) {
    auto e = seq.elements[i];
    json je{{"type", type_name(e)}};
    for (auto f : fields_of(e)) je[field_key(f)] = field_ref(e, f);
    for (const auto& b : bindings) {
      if (b.element == i) je[field_key(b.field)] = b.slot == Placeholder::A ? "$A" : "$B";
    }
    out.push_back(je);
  }
  return out;
}

}  // namespace

bool SequenceTemplate::uses(Placeholder p) const {
  for (const auto& b : bindings) {
    if (b.slot == p) return true;
  }
  return false;
}

int SequenceTemplate::arity() const { return (uses(Placeholder::A) ? 1 : 0) + (uses(Placeholder::B) ? 1 : 0); }

PulseSequence SequenceTemplate::instantiate(double a, double b) const {
  PulseSequence seq = base;
  for (const auto& bind : bindings) {
    field_ref(seq.elements.at(bind.element), bind.field) = bind.slot == Placeholder::A ? a : b;
  }
  for (const auto& e : seq.elements) validate(e);
  return seq;
}

SequenceTemplate parse_sequence_template(const nlohmann::json& doc) { return parse_template_impl(doc); }

SequenceTemplate parse_sequence_template(std::string_view text) { return parse_template_impl(parse_text(text)); }

SequenceTemplate load_sequence_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SequenceFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sequence_template(buf.str());
  } catch (const SequenceFormatError& e) {
    throw SequenceFormatError(path.string() + ": " + e.what());
  }
}

SequenceDocument parse_sequence_document(const nlohmann::json& doc) {
  auto tmpl = parse_template_impl(doc);
  if (!tmpl.bindings.empty()) {
    fail("sequence[" + std::to_string(tmpl.bindings.front().element) + "]", "placeholders are not allowed here");
  }
  return SequenceDocument{std::move(tmpl.system), std::move(tmpl.base)};
}

SequenceDocument parse_sequence_document(std::string_view text) { return parse_sequence_document(parse_text(text)); }

nlohmann::json to_json(const SequenceDocument& doc) {
  return json{{"peaks", peaks_to_json(doc.system)}, {"sequence", sequence_to_json(doc.sequence, {})}};
}

nlohmann::json to_json(const SequenceTemplate& tmpl) {
  return json{{"peaks", peaks_to_json(tmpl.system)}, {"sequence", sequence_to_json(tmpl.base, tmpl.bindings)}};
}

}  // namespace nmrlogic
