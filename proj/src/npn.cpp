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

#include "nmrlogic/npn.hpp"

#include <algorithm>
#include <stdexcept>

namespace nmrlogic {
namespace {

/// A transform flattened to a cell gather plus an output relabelling.
template <int Radix>
struct CompiledTransform {
  using Space = LogicSpace<Radix>;

  std::array<std::uint8_t, Space::kCells> source{};
  std::array<std::uint8_t, Radix> out{};

  explicit CompiledTransform(const BasicTransform<Radix>& t) {
    const auto inv_a = t.perm_a.inverse();
    const auto inv_b = t.perm_b.inverse();
    for (int a = 0; a < Radix; ++a) {
      for (int b = 0; b < Radix; ++b) {
        const int ap = t.swap_inputs ? b : a;
        const int bp = t.swap_inputs ? a : b;
        source[Radix * a + b] =
            static_cast<std::uint8_t>(Radix * inv_a(static_cast<std::uint8_t>(ap)) + inv_b(static_cast<std::uint8_t>(bp)));
      }
    }
    out = t.perm_out.image();
  }

  typename Space::Digits operator()(const typename Space::Digits& f) const {
    typename Space::Digits g{};
    for (int c = 0; c < Space::kCells; ++c) g[c] = out[f[source[c]]];
    return g;
  }
};

template <int Radix>
const std::vector<CompiledTransform<Radix>>& compiled_group() {
  static const std::vector<CompiledTransform<Radix>> group = [] {
    std::vector<CompiledTransform<Radix>> g;
    for (const auto& t : BasicTransform<Radix>::all()) g.emplace_back(t);
    return g;
  }();
  return group;
}

template <int Radix>
void check_index(FunctionIndex f) {
  if (f.value >= LogicSpace<Radix>::kFunctions) {
    throw std::out_of_range("function index out of range: " + std::to_string(f.value));
  }
}

}  // namespace

template <int Radix>
BasicValuePermutation<Radix> BasicValuePermutation<Radix>::from_image(const Image& image) {
  std::array<bool, Radix> seen{};
  for (auto v : image) {
    if (v >= Radix || seen[v]) throw std::invalid_argument("value permutation is not a bijection");
    seen[v] = true;
  }
  BasicValuePermutation p;
  p.image_ = image;
  return p;
}

template <int Radix>
std::vector<BasicValuePermutation<Radix>> BasicValuePermutation<Radix>::all() {
  std::vector<BasicValuePermutation> perms;
  Image image = identity().image_;
  do {
    perms.push_back(from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return perms;
}

template <int Radix>
BasicValuePermutation<Radix> BasicValuePermutation<Radix>::inverse() const {
  BasicValuePermutation r;
  for (int i = 0; i < Radix; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

template <int Radix>
const std::vector<BasicTransform<Radix>>& BasicTransform<Radix>::all() {
  static const std::vector<BasicTransform> group = [] {
    const auto perms = BasicValuePermutation<Radix>::all();
    std::vector<BasicTransform> g;
    for (bool swap : {false, true}) {
      for (const auto& pa : perms) {
        for (const auto& pb : perms) {
          for (const auto& po : perms) g.push_back(BasicTransform{pa, pb, swap, po});
        }
      }
    }
    return g;
  }();
  return group;
}

template <int Radix>
typename LogicSpace<Radix>::Digits apply_transform(const BasicTransform<Radix>& t,
                                                   const typename LogicSpace<Radix>::Digits& f) {
  return CompiledTransform<Radix>(t)(f);
}

template <int Radix>
NpnClass orbit_of(FunctionIndex f) {
  using Space = LogicSpace<Radix>;
  check_index<Radix>(f);
  const auto digits = Space::decode(f.value);
  std::vector<FunctionIndex> members;
  members.reserve(compiled_group<Radix>().size());
  for (const auto& t : compiled_group<Radix>()) members.push_back(FunctionIndex{Space::encode(t(digits))});
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return NpnClass{members.front(), std::move(members)};
}

template <int Radix>
std::vector<NpnClass> classify() {
  constexpr auto n = LogicSpace<Radix>::kFunctions;
  std::vector<bool> assigned(n, false);
  std::vector<NpnClass> classes;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    auto cls = orbit_of<Radix>(FunctionIndex{i});
    for (auto m : cls.members) assigned[m.value] = true;
    classes.push_back(std::move(cls));
  }
  // Ascending scan already yields canonical order; keep the contract explicit.
  std::sort(classes.begin(), classes.end(),
            [](const NpnClass& x, const NpnClass& y) { return x.canonical < y.canonical; });
  return classes;
}

template <int Radix>
BurnsideTally burnside_tally() {
  using Space = LogicSpace<Radix>;
  BurnsideTally tally;
  const auto& group = compiled_group<Radix>();
  tally.group_order = group.size();
  std::vector<typename Space::Digits> tables(Space::kFunctions);
  for (std::uint32_t i = 0; i < Space::kFunctions; ++i) tables[i] = Space::decode(i);
  for (std::size_t k = 0; k < group.size(); ++k) {
    std::uint64_t fixed = 0;
    for (const auto& f : tables) fixed += group[k](f) == f ? 1 : 0;
    if (k == 0) tally.identity_fixed_points = fixed;
    tally.total_fixed_points += fixed;
  }
  return tally;
}

template class BasicValuePermutation<2>;
template class BasicValuePermutation<3>;
template struct BasicTransform<2>;
template struct BasicTransform<3>;
template LogicSpace<2>::Digits apply_transform<2>(const BasicTransform<2>&, const LogicSpace<2>::Digits&);
template LogicSpace<3>::Digits apply_transform<3>(const BasicTransform<3>&, const LogicSpace<3>::Digits&);
template NpnClass orbit_of<2>(FunctionIndex);
template NpnClass orbit_of<3>(FunctionIndex);
template std::vector<NpnClass> classify<2>();
template std::vector<NpnClass> classify<3>();
template BurnsideTally burnside_tally<2>();
template BurnsideTally burnside_tally<3>();

TernaryFunction apply_transform(const NpnTransform& t, const TernaryFunction& f) {
  return decode(FunctionIndex{LogicSpace<3>::encode(apply_transform<3>(t, LogicSpace<3>::decode(encode(f).value)))});
}

NpnClass orbit(FunctionIndex f) { return orbit_of<3>(f); }

std::vector<NpnTransform> stabilizer(FunctionIndex f) {
  check_index<3>(f);
  const auto digits = LogicSpace<3>::decode(f.value);
  std::vector<NpnTransform> fixing;
  const auto& group = NpnTransform::all();
  const auto& compiled = compiled_group<3>();
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (compiled[k](digits) == digits) fixing.push_back(group[k]);
  }
  return fixing;
}

std::vector<NpnClass> classify_all() { return classify<3>(); }

std::vector<NpnClass> classify_binary() { return classify<2>(); }

std::uint64_t burnside_count() { return burnside_tally<3>().orbit_count(); }

const NpnClassIndex& NpnClassIndex::ternary() {
  static const NpnClassIndex index;
  return index;
}

NpnClassIndex::NpnClassIndex()
    : classes_(classify_all()), canonical_(kTernaryFunctionCount), slot_(kTernaryFunctionCount) {
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (auto m : classes_[k].members) {
      canonical_[m.value] = classes_[k].canonical.value;
      slot_[m.value] = static_cast<std::uint16_t>(k);
    }
  }
}

}  // namespace nmrlogic
