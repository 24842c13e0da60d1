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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nmrlogic/cli.hpp"
#include "nmrlogic/complex_logic.hpp"
#include "nmrlogic/gate_search.hpp"
#include "nmrlogic/npn.hpp"
#include "nmrlogic/pc.hpp"
#include "nmrlogic/sequence_io.hpp"
#include "nmrlogic/spin_sim.hpp"
#include "nmrlogic/ternary.hpp"

namespace nmrlogic::cli {
namespace {

using nlohmann::json;

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats = {{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <int Radix>
std::vector<std::vector<int>> table_rows(FunctionIndex f) {
  const auto digits = LogicSpace<Radix>::decode(f.value);
  std::vector<std::vector<int>> rows(Radix, std::vector<int>(Radix));
  for (int a = 0; a < Radix; ++a) {
    for (int b = 0; b < Radix; ++b) {
      // Ternary tables print balanced values; binary tables print 0/1.
      rows[a][b] = Radix == 3 ? digits[Radix * a + b] - 1 : digits[Radix * a + b];
    }
  }
  return rows;
}

template <int Radix>
std::string counts_text(const BasicLineCounts<Radix>& c) {
  return to_string(c);
}

template <int Radix>
json signature_json(const BasicPcSignature<Radix>& s) {
  json first = json::array();
  json second = json::array();
  for (auto v : s.first().counts) first.push_back(v);
  for (auto v : s.second().counts) second.push_back(v);
  return json::array({first, second});
}

json rows_json(const std::vector<std::vector<int>>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------- classify

struct ClassifyResult {
  int radix = 3;
  std::uint64_t function_count = 0;
  std::vector<NpnClass> classes;
  BurnsideTally burnside;
  std::uint64_t expected_classes = 0;
  bool self_check_ok = false;
};

template <int Radix>
int classify_radix(Format format, std::ostream& out) {
  ClassifyResult r;
  r.radix = Radix;
  r.function_count = LogicSpace<Radix>::kFunctions;
  r.classes = classify<Radix>();
  r.burnside = burnside_tally<Radix>();
  r.expected_classes = Radix == 3 ? 84 : 4;

  const auto pcs = pc_classify<Radix>();
  std::uint64_t member_sum = 0;
  for (const auto& c : r.classes) member_sum += c.size();
  std::size_t npn_in_pc = 0;
  for (const auto& p : pcs) npn_in_pc += p.npn_classes.size();

  bool binary_match = true;
  if constexpr (Radix == 2) binary_match = pc_binary_check().partitions_match;

  const bool count_ok = r.classes.size() == r.expected_classes;
  const bool sum_ok = member_sum == r.function_count;
  const bool burnside_ok = r.burnside.orbit_count() == r.classes.size() &&
                           r.burnside.total_fixed_points % r.burnside.group_order == 0;
  const bool pc_ok = npn_in_pc == r.classes.size() && binary_match;
  r.self_check_ok = count_ok && sum_ok && burnside_ok && pc_ok;

  if (format == Format::json) {
    json doc;
    doc["radix"] = Radix;
    doc["function_count"] = r.function_count;
    doc["class_count"] = r.classes.size();
    json classes = json::array();
    for (const auto& c : r.classes) {
      classes.push_back({{"canonical", c.canonical.value}, {"size", c.size()}, {"table", rows_json(table_rows<Radix>(c.canonical))}});
    }
    doc["classes"] = classes;
    doc["burnside"] = {{"group_order", r.burnside.group_order},
                       {"identity_fixed_points", r.burnside.identity_fixed_points},
                       {"total_fixed_points", r.burnside.total_fixed_points},
                       {"class_count", r.burnside.orbit_count()}};
    json pc_classes = json::array();
    for (const auto& p : pcs) {
      json npn = json::array();
      for (auto c : p.npn_classes) npn.push_back(c.value);
      pc_classes.push_back({{"signature", signature_json(p.signature)},
                            {"members", p.members.size()},
                            {"npn_classes", npn},
                            {"single", p.single()}});
    }
    doc["pc"] = {{"class_count", pcs.size()}, {"classes", pc_classes}};
    doc["checks"] = {{"class_count", count_ok},
                     {"member_sum", sum_ok},
                     {"burnside_agrees", burnside_ok},
                     {"pc_consistent", pc_ok},
                     {"ok", r.self_check_ok}};
    out << doc.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << "canonical,size";
    for (int c = 0; c < Radix * Radix; ++c) out << ",t" << c / Radix << c % Radix;
    out << ",pc_first,pc_second\n";
    for (const auto& c : r.classes) {
      out << c.canonical.value << ',' << c.size();
      for (const auto& row : table_rows<Radix>(c.canonical)) {
        for (int v : row) out << ',' << v;
      }
      const auto d = LogicSpace<Radix>::decode(c.canonical.value);
      const BasicPcSignature<Radix> sig(row_counts<Radix>(d), column_counts<Radix>(d));
      out << ",\"" << counts_text(sig.first()) << "\",\"" << counts_text(sig.second()) << "\"\n";
    }
  } else {
    out << "radix: " << Radix << '\n';
    out << "functions: " << r.function_count << '\n';
    out << "classes: " << r.classes.size() << '\n';
    out << "burnside: group order " << r.burnside.group_order << ", identity fixes "
        << r.burnside.identity_fixed_points << ", total fixed points " << r.burnside.total_fixed_points
        << ", classes " << r.burnside.orbit_count() << (burnside_ok ? " (agrees)" : " (DISAGREES)") << '\n';

    std::map<std::size_t, int> histogram;
    for (const auto& c : r.classes) ++histogram[c.size()];
    out << "class sizes:";
    for (const auto& [size, n] : histogram) out << ' ' << size << 'x' << n;
    out << "\n\n";

    out << "   #  canonical  size  table\n";
    int number = 1;
    for (const auto& c : r.classes) {
      const auto rows = table_rows<Radix>(c.canonical);
      for (int a = 0; a < Radix; ++a) {
        std::string line = a == 0 ? pad(std::to_string(number), 4) + pad(std::to_string(c.canonical.value), 11) +
                                        pad(std::to_string(c.size()), 6) + "  "
                                  : std::string(23, ' ');
        for (int b = 0; b < Radix; ++b) line += pad(std::to_string(rows[a][b]), 3);
        out << line << '\n';
      }
      ++number;
    }

    std::size_t singles = 0;
    for (const auto& p : pcs) singles += p.single() ? 1 : 0;
    out << "\npc classes: " << pcs.size() << " (" << singles << " single, " << pcs.size() - singles
        << " overlapping)\n";
    out << "  signature              members  npn classes\n";
    for (const auto& p : pcs) {
      std::string sig = counts_text(p.signature.first()) + " " + counts_text(p.signature.second());
      sig.resize(std::max<std::size_t>(sig.size(), 22), ' ');
      out << "  " << sig << pad(std::to_string(p.members.size()), 8) << "  ";
      for (std::size_t k = 0; k < p.npn_classes.size(); ++k) out << (k ? "," : "") << p.npn_classes[k].value;
      out << (p.single() ? "  single" : "  overlap") << '\n';
    }
    if constexpr (Radix == 2) {
      out << "binary pc partition matches npn: " << (binary_match ? "yes" : "no") << '\n';
    }
    out << "self-check: " << (r.self_check_ok ? "ok" : "FAILED") << '\n';
  }
  return r.self_check_ok ? kOk : kSelfCheckFailed;
}

// ---------------------------------------------------------------- simulate

std::vector<std::vector<double>> simulate_grid(const SequenceTemplate& tmpl, const std::vector<double>& grid_a,
                                               const std::vector<double>& grid_b) {
  std::vector<std::vector<double>> cells(grid_a.size(), std::vector<double>(grid_b.size()));
  for (std::size_t i = 0; i < grid_a.size(); ++i) {
    for (std::size_t j = 0; j < grid_b.size(); ++j) {
      cells[i][j] = read_mx(run_sequence(tmpl.system, tmpl.instantiate(grid_a[i], grid_b[j])));
    }
  }
  return cells;
}

void write_grid(const std::vector<double>& grid_a, const std::vector<double>& grid_b,
                const std::vector<std::vector<double>>& cells, Format format, std::ostream& out) {
  if (format == Format::json) {
    json doc{{"a", grid_a}, {"b", grid_b}, {"mx", cells}};
    out << doc.dump(2) << '\n';
    return;
  }
  const char sep = format == Format::csv ? ',' : '\t';
  out << "a\\b";
  for (double b : grid_b) out << sep << format_real(b);
  out << '\n';
  for (std::size_t i = 0; i < grid_a.size(); ++i) {
    out << format_real(grid_a[i]);
    for (double v : cells[i]) out << sep << format_real(v);
    out << '\n';
  }
}

// ---------------------------------------------------------------- search

/// The table obtained from the two-peak selective pulse + delay experiment.
TernaryFunction selective_delay_table() { return TernaryFunction::from_rows({{{1, 0, 1}, {0, 0, -1}, {-1, 0, 1}}}); }

std::optional<FunctionIndex> resolve_target(const std::string& target) {
  const auto& index = NpnClassIndex::ternary();
  if (target == "all") return std::nullopt;
  if (target == "multiplication") return index.canonical_of(encode(ternary_multiplication()));
  if (target == "selective-delay") return index.canonical_of(encode(selective_delay_table()));
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(target, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != target.size() || value >= static_cast<unsigned long>(kTernaryFunctionCount)) {
    throw UsageError("unknown target \"" + target + "\" (use multiplication, selective-delay, all or an index)");
  }
  return index.canonical_of(FunctionIndex{static_cast<std::uint32_t>(value)});
}

json hit_json(const SearchHit& h) {
  std::vector<std::vector<int>> rows(3, std::vector<int>(3));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) rows[a][b] = h.logic(kTrits[a], kTrits[b]).value();
  }
  return json{{"triple_a", h.triple_a}, {"triple_b", h.triple_b}, {"npn_class", h.npn_class.value}, {"table", rows}};
}

std::string triple_text(const std::array<double, 3>& t) {
  return format_real(t[0]) + " " + format_real(t[1]) + " " + format_real(t[2]);
}

void write_hits(const std::vector<SearchHit>& hits, FunctionIndex target, Format format, std::ostream& out) {
  if (format == Format::json) {
    json list = json::array();
    for (const auto& h : hits) list.push_back(hit_json(h));
    out << json{{"target", target.value}, {"hit_count", hits.size()}, {"hits", list}}.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "a1,a2,a3,b1,b2,b3,npn_class,t00,t01,t02,t10,t11,t12,t20,t21,t22\n";
    for (const auto& h : hits) {
      for (double v : h.triple_a) out << format_real(v) << ',';
      for (double v : h.triple_b) out << format_real(v) << ',';
      out << h.npn_class.value;
      for (auto t : h.logic.outputs()) out << ',' << t.value();
      out << '\n';
    }
    return;
  }
  out << "target class: " << target.value << '\n';
  out << "hits: " << hits.size() << '\n';
  for (const auto& h : hits) {
    out << "  a = [" << triple_text(h.triple_a) << "]  b = [" << triple_text(h.triple_b) << "]  table ";
    for (Trit a : kTrits) {
      out << '[';
      for (Trit b : kTrits) out << (b == Trit::minus() ? "" : " ") << h.logic(a, b).value();
      out << ']';
    }
    out << '\n';
  }
}

void write_reachability(const std::vector<ClassReachability>& rows, Format format, std::ostream& out) {
  std::size_t reachable = 0;
  for (const auto& r : rows) reachable += r.hits > 0 ? 1 : 0;
  if (format == Format::json) {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"canonical", r.canonical.value},
                      {"size", r.class_size},
                      {"hits", r.hits},
                      {"example", r.first_hit ? hit_json(*r.first_hit) : json(nullptr)}});
    }
    out << json{{"reachable_classes", reachable}, {"classes", list}}.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "canonical,size,hits,a1,a2,a3,b1,b2,b3\n";
    for (const auto& r : rows) {
      out << r.canonical.value << ',' << r.class_size << ',' << r.hits;
      if (r.first_hit) {
        for (double v : r.first_hit->triple_a) out << ',' << format_real(v);
        for (double v : r.first_hit->triple_b) out << ',' << format_real(v);
      } else {
        out << ",,,,,,";
      }
      out << '\n';
    }
    return;
  }
  out << "reachable classes: " << reachable << " of " << rows.size() << '\n';
  out << "  canonical  size      hits  example\n";
  for (const auto& r : rows) {
    out << pad(std::to_string(r.canonical.value), 11) << pad(std::to_string(r.class_size), 6)
        << pad(std::to_string(r.hits), 10);
    if (r.first_hit) {
      out << "  a = [" << triple_text(r.first_hit->triple_a) << "]  b = [" << triple_text(r.first_hit->triple_b)
          << "]";
    } else {
      out << "  -";
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------- complex

std::string phase_text(const ComplexSample& z) { return z.r() == 0.0 ? "-" : format_real(z.theta()); }

struct RoundTrip {
  std::string name;
  ComplexSample input;
  ComplexSample recovered;
  double magnitude_error = 0.0;
  double phase_error = 0.0;
};

RoundTrip round_trip(std::string name, const ComplexSample& z, const EncodingParams& p) {
  RoundTrip rt{std::move(name), z, encode_decode_roundtrip(z, p), 0.0, 0.0};
  rt.magnitude_error = std::abs(rt.recovered.r() - z.r());
  // Phase is meaningless at zero magnitude.
  rt.phase_error = z.r() < kZeroSignal ? 0.0 : phase_distance(rt.recovered.theta(), z.theta());
  return rt;
}

json sample_json(const ComplexSample& z) {
  return json{{"r", z.r()}, {"theta", z.r() == 0.0 ? json(nullptr) : json(z.theta())}};
}

int complex_mul(double r1, double t1, double r2, double t2, const EncodingParams& p, Format format, std::ostream& out) {
  const ComplexSample z1(r1, t1);
  const ComplexSample z2(r2, t2);
  const auto product = complex_multiply_via_logic(z1, z2);
  const auto cartesian = ComplexSample::from_complex(z1.to_complex() * z2.to_complex());
  const double cart_r_err = std::abs(cartesian.r() - product.r());
  const double cart_t_err = product.r() < kZeroSignal ? 0.0 : phase_distance(cartesian.theta(), product.theta());
  const std::vector<RoundTrip> trips = {round_trip("z1", z1, p), round_trip("z2", z2, p),
                                        round_trip("product", product, p)};

  if (format == Format::json) {
    json rts = json::array();
    for (const auto& t : trips) {
      rts.push_back({{"name", t.name},
                     {"input", sample_json(t.input)},
                     {"recovered", sample_json(t.recovered)},
                     {"magnitude_error", t.magnitude_error},
                     {"phase_error", t.phase_error}});
    }
    out << json{{"z1", sample_json(z1)},
                {"z2", sample_json(z2)},
                {"product", sample_json(product)},
                {"cartesian", sample_json(cartesian)},
                {"cartesian_error", {{"magnitude", cart_r_err}, {"phase", cart_t_err}}},
                {"roundtrip", rts}}
               .dump(2)
        << '\n';
    return kOk;
  }
  if (format == Format::csv) {
    out << "name,r,theta,recovered_r,recovered_theta,magnitude_error,phase_error\n";
    for (const auto& t : trips) {
      out << t.name << ',' << format_real(t.input.r()) << ',' << phase_text(t.input) << ','
          << format_real(t.recovered.r()) << ',' << phase_text(t.recovered) << ',' << format_real(t.magnitude_error)
          << ',' << format_real(t.phase_error) << '\n';
    }
    return kOk;
  }
  out << "z1:        r = " << format_real(z1.r()) << "  theta = " << phase_text(z1) << '\n';
  out << "z2:        r = " << format_real(z2.r()) << "  theta = " << phase_text(z2) << '\n';
  out << "product:   r = " << format_real(product.r()) << "  theta = " << phase_text(product)
      << "  (mAND magnitude, pXNOR phase)\n";
  out << "cartesian: r = " << format_real(cartesian.r()) << "  theta = " << phase_text(cartesian)
      << "  |dr| = " << format_real(cart_r_err) << "  |dtheta| = " << format_real(cart_t_err) << '\n';
  out << "round trip (t1 = " << format_real(p.t1) << " s, omega_off = " << format_real(p.omega_off)
      << " rad/s, alpha = " << format_real(p.alpha) << "):\n";
  for (const auto& t : trips) {
    out << "  " << t.name << ": r = " << format_real(t.recovered.r()) << "  theta = " << phase_text(t.recovered)
        << "  err_r = " << format_real(t.magnitude_error) << "  err_theta = " << format_real(t.phase_error) << '\n';
  }
  return kOk;
}

int complex_truth(double theta, Format format, std::ostream& out) {
  const double t = normalize_phase(theta);
  const double truth = ptruth(t);
  if (format == Format::json) {
    out << json{{"theta", t}, {"ptruth", truth}, {"conjugate_agrees", conjugate_truth_check(t)}}.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << "theta,ptruth\n" << format_real(t) << ',' << format_real(truth) << '\n';
  } else {
    out << "theta: " << format_real(t) << "\nptruth: " << format_real(truth) << '\n';
  }
  return kOk;
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto to_double = [&](const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    // stod skips leading whitespace only; tolerate trailing blanks too.
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (token.empty() || used != token.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad grid value \"" + token + "\"");
    }
    return v;
  };

  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("range grid must be start:stop:count");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double count = to_double(parts[2]);
    if (count < 2 || count != std::floor(count)) throw std::invalid_argument("range grid count must be an integer >= 2");
    const int n = static_cast<int>(count);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[k] = start + (stop - start) * k / (n - 1);
    return v;
  }

  std::vector<double> v;
  std::stringstream ss(spec);
  for (std::string token; std::getline(ss, token, ',');) v.push_back(to_double(token));
  if (v.empty()) throw std::invalid_argument("empty grid");
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ternary and complex-number logic on simulated NMR spin dynamics", "nmrlogic"};
  app.require_subcommand(1);

  std::string format_name;
  std::string out_path;
  const auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->default_str(default_format);
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };

  int radix = 3;
  auto* classify_cmd = app.add_subcommand("classify", "NPN and PC classification of two-input functions");
  classify_cmd->add_option("--radix", radix, "2 or 3")->check(CLI::IsMember({2, 3}))->default_val(3);
  add_common(classify_cmd, "table");

  std::string sequence_path;
  std::string grid_a_spec;
  std::string grid_b_spec;
  auto* simulate_cmd = app.add_subcommand("simulate", "Tabulate read_mx over a grid of the two template parameters");
  simulate_cmd->add_option("--sequence", sequence_path, "Sequence template (JSON)")->required();
  simulate_cmd->add_option("--grid-a", grid_a_spec, "Values for $A: comma-separated radians or start:stop:count");
  simulate_cmd->add_option("--grid-b", grid_b_spec, "Values for $B");
  add_common(simulate_cmd, "csv");

  std::string target = "all";
  double epsilon = Quantizer{}.epsilon;
  auto* search_cmd = app.add_subcommand("search", "Search parameter triples that implement NPN classes");
  search_cmd->add_option("--sequence", sequence_path, "Sequence template (JSON)")->required();
  search_cmd->add_option("--grid-a", grid_a_spec, "Candidate values for $A");
  search_cmd->add_option("--grid-b", grid_b_spec, "Candidate values for $B");
  search_cmd->add_option("--target", target, "multiplication, selective-delay, a function index, or all")
      ->default_val("all");
  search_cmd->add_option("--epsilon", epsilon, "Quantizer zero threshold")->default_val(Quantizer{}.epsilon);
  add_common(search_cmd, "table");

  EncodingParams params;
  auto* complex_cmd = app.add_subcommand("complex", "Complex-number logic and its NMR encoding");
  complex_cmd->require_subcommand(1);
  complex_cmd->add_option("--alpha", params.alpha, "Magnitude scale, > 1")->default_val(params.alpha);
  complex_cmd->add_option("--t1", params.t1, "T1 of the encoding peak, s")->default_val(params.t1);
  complex_cmd->add_option("--omega-off", params.omega_off, "Frame offset, rad/s")->default_val(params.omega_off);
  add_common(complex_cmd, "table");
  std::vector<double> mul_args;
  auto* mul_cmd = complex_cmd->add_subcommand("mul", "Multiply r1 theta1 r2 theta2 via mAND and pXNOR");
  mul_cmd->add_option("values", mul_args, "r1 theta1 r2 theta2")->expected(4)->required();
  double truth_theta = 0.0;
  auto* truth_cmd = complex_cmd->add_subcommand("truth", "pTruth of a phase");
  truth_cmd->add_option("theta", truth_theta, "Phase, rad")->required();

  std::vector<const char*> argv{"nmrlogic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (format_name.empty()) format_name = *simulate_cmd ? "csv" : "table";
  const Format format = kFormats.at(format_name);
  std::ostringstream report;
  int code = kOk;
  try {
    if (*classify_cmd) {
      code = radix == 2 ? classify_radix<2>(format, report) : classify_radix<3>(format, report);
    } else if (*simulate_cmd || *search_cmd) {
      if (grid_a_spec.empty() || grid_b_spec.empty()) throw UsageError("both --grid-a and --grid-b are required");
      const auto grid_a = parse_grid(grid_a_spec);
      const auto grid_b = parse_grid(grid_b_spec);
      const auto tmpl = load_sequence_template(sequence_path);
      if (*simulate_cmd) {
        write_grid(grid_a, grid_b, simulate_grid(tmpl, grid_a, grid_b), format, report);
      } else {
        Quantizer q;
        q.epsilon = epsilon;
        if (const auto t = resolve_target(target)) {
          write_hits(search(tmpl, grid_a, grid_b, q, {*t}), *t, format, report);
        } else {
          write_reachability(reachability(tmpl, grid_a, grid_b, q), format, report);
        }
      }
    } else if (*complex_cmd) {
      params.validate();
      if (*mul_cmd) {
        code = complex_mul(mul_args[0], mul_args[1], mul_args[2], mul_args[3], params, format, report);
      } else {
        code = complex_truth(truth_theta, format, report);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SequenceFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << report.str();
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kUsageError;
    }
  }
  return code;
}

}  // namespace nmrlogic::cli
