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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hanoiseq/words.hpp"

namespace hanoiseq {

// The alphabets and morphisms behind the built-in sequences.
namespace morphisms {

AlphabetPtr hanoi_alphabet();  // a b c A B C   (uppercase = barred)
AlphabetPtr lazy_alphabet();   // a b A B
AlphabetPtr cyclic_alphabet(); // f g h u v w
AlphabetPtr cyclic_moves();    // a b c
AlphabetPtr binary();          // 0 1

Morphism classical();          // S∞, 2-uniform
Morphism classical_nonuniform();
Morphism lazy();               // H∞, 3-uniform
Morphism lazy_nonuniform();
Morphism cyclic();
Coding cyclic_coding();
Morphism period_doubling();
Morphism thue_morse();
Morphism fibonacci();
Morphism z_nonuniform();
Morphism z_uniform();
Coding z_mod3();
Morphism paperfolding();
Coding paperfolding_coding();
Coding bar_projection();       // a,b,c -> 1; A,B,C -> 0

}  // namespace morphisms

struct CatalogEntry {
  std::string name;
  std::string description;
  MorphicSpec spec;
};

class Catalog {
 public:
  // Validates the spec (prolongable, non-erasing) and rejects duplicate names.
  void add(std::string name, std::string description, MorphicSpec spec);

  // Throws Errc::not_found listing the registered names.
  const MorphicSpec& lookup(std::string_view name) const;
  const CatalogEntry* find(std::string_view name) const;

  std::vector<std::string> names() const;
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  static const Catalog& builtin();

 private:
  std::vector<CatalogEntry> entries_;
};

const MorphicSpec& catalog_lookup(std::string_view name);

}  // namespace hanoiseq
