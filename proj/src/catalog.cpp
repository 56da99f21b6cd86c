/*
  Copyright 2026 The hanoiseq Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "hanoiseq/catalog.hpp"

#include <algorithm>

#include "hanoiseq/error.hpp"

namespace hanoiseq {
namespace morphisms {

namespace {

Morphism endo(const AlphabetPtr& a,
              const std::vector<std::pair<std::string, std::string>>& rules) {
  return Morphism::from_rules(a, a, rules);
}

}  // namespace

AlphabetPtr hanoi_alphabet() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "c", "A", "B", "C"});
  return a;
}

AlphabetPtr lazy_alphabet() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "A", "B"});
  return a;
}

AlphabetPtr cyclic_alphabet() {
  static const AlphabetPtr a = make_alphabet({"f", "g", "h", "u", "v", "w"});
  return a;
}

AlphabetPtr cyclic_moves() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "c"});
  return a;
}

AlphabetPtr binary() {
  static const AlphabetPtr a = make_alphabet({"0", "1"});
  return a;
}

Morphism classical() {
  return endo(hanoi_alphabet(), {{"a", "a C"}, {"b", "c B"}, {"c", "b A"},
                                 {"A", "a c"}, {"B", "c b"}, {"C", "b a"}});
}

Morphism classical_nonuniform() {
  return endo(hanoi_alphabet(), {{"a", "a C b"}, {"b", "B"}, {"c", "A c"},
                                 {"A", "a c b"}, {"B", "b"}, {"C", "a c"}});
}

Morphism lazy() {
  return endo(lazy_alphabet(), {{"a", "a b a"}, {"A", "a b A"},
                                {"b", "B A b"}, {"B", "B A B"}});
}

Morphism lazy_nonuniform() {
  return endo(lazy_alphabet(), {{"a", "a b a B"}, {"b", "A b"},
                                {"A", "a b A B"}, {"B", "A B"}});
}

Morphism cyclic() {
  return endo(cyclic_alphabet(), {{"f", "f v f"}, {"g", "g w g"}, {"h", "h u h"},
                                  {"u", "f g"}, {"v", "g h"}, {"w", "h f"}});
}

Coding cyclic_coding() {
  return Coding::from_map(cyclic_alphabet(), cyclic_moves(),
                          {{"f", "a"}, {"w", "a"}, {"g", "c"},
                           {"u", "c"}, {"h", "b"}, {"v", "b"}});
}

Morphism period_doubling() { return endo(binary(), {{"1", "1 0"}, {"0", "1 1"}}); }

Morphism thue_morse() { return endo(binary(), {{"0", "0 1"}, {"1", "1 0"}}); }

Morphism fibonacci() {
  static const AlphabetPtr ab = make_alphabet({"a", "b"});
  return endo(ab, {{"a", "a b"}, {"b", "a"}});
}

Morphism z_nonuniform() {
  static const AlphabetPtr a = make_alphabet({"0", "1", "2"});
  return endo(a, {{"2", "2 1 0"}, {"1", "2 0"}, {"0", "1"}});
}

Morphism z_uniform() {
  static const AlphabetPtr a = make_alphabet({"0", "1", "2", "4"});
  return endo(a, {{"2", "2 1"}, {"1", "0 2"}, {"0", "0 4"}, {"4", "2 0"}});
}

Coding z_mod3() {
  return Coding::from_map(z_uniform().domain(), z_nonuniform().domain(),
                          {{"0", "0"}, {"1", "1"}, {"2", "2"}, {"4", "1"}});
}

Morphism paperfolding() {
  static const AlphabetPtr a = make_alphabet({"a", "b", "c", "d"});
  return endo(a, {{"a", "a b"}, {"b", "c b"}, {"c", "a d"}, {"d", "c d"}});
}

Coding paperfolding_coding() {
  return Coding::from_map(paperfolding().domain(), binary(),
                          {{"a", "0"}, {"b", "0"}, {"c", "1"}, {"d", "1"}});
}

Coding bar_projection() {
  return Coding::from_map(hanoi_alphabet(), binary(),
                          {{"a", "1"}, {"b", "1"}, {"c", "1"},
                           {"A", "0"}, {"B", "0"}, {"C", "0"}});
}

}  // namespace morphisms

void Catalog::add(std::string name, std::string description, MorphicSpec spec) {
  if (find(name))
    throw Error(Errc::validation, "duplicate catalog entry '" + name + "'");
  spec.validate();
  entries_.push_back({std::move(name), std::move(description), std::move(spec)});
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const MorphicSpec& Catalog::lookup(std::string_view name) const {
  if (const auto* e = find(name)) return e->spec;
  std::string msg = "unknown sequence '" + std::string(name) + "'; available:";
  for (const auto& e : entries_) msg += " " + e.name;
  throw Error(Errc::not_found, msg);
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = [] {
    using namespace morphisms;
    auto start = [](const Morphism& m, std::string_view s) { return m.domain()->at(s); };
    Catalog c;
    auto add = [&](std::string name, std::string desc, Morphism m, std::string_view a0,
                   std::optional<Coding> coding = std::nullopt) {
      Symbol s = start(m, a0);
      c.add(std::move(name), std::move(desc), MorphicSpec{std::move(m), s, std::move(coding)});
    };
    add("classical-hanoi", "classical Tower of Hanoi moves, 2-uniform", classical(), "a");
    add("classical-hanoi-nonuniform", "classical Tower of Hanoi moves, non-uniform",
        classical_nonuniform(), "a");
    add("lazy-hanoi", "lazy Tower of Hanoi moves, 3-uniform", lazy(), "a");
    add("lazy-hanoi-nonuniform", "lazy Tower of Hanoi moves, non-uniform",
        lazy_nonuniform(), "a");
    add("cyclic-hanoi", "cyclic Tower of Hanoi moves (coded fixed point)", cyclic(), "f",
        cyclic_coding());
    add("period-doubling", "period-doubling sequence 1->10, 0->11", period_doubling(), "1");
    add("thue-morse", "Thue-Morse sequence 0->01, 1->10", thue_morse(), "0");
    add("fibonacci", "binary Fibonacci word a->ab, b->a", fibonacci(), "a");
    add("z-nonuniform", "gap lengths of Thue-Morse, 2->210, 1->20, 0->1", z_nonuniform(),
        "2");
    add("z-uniform", "gap lengths of Thue-Morse, 2-uniform with x mod 3 coding",
        z_uniform(), "2", z_mod3());
    add("paperfolding", "paperfolding sequence, 2-uniform with coding", paperfolding(), "a",
        paperfolding_coding());
    return c;
  }();
  return catalog;
}

const MorphicSpec& catalog_lookup(std::string_view name) {
  return Catalog::builtin().lookup(name);
}

}  // namespace hanoiseq
