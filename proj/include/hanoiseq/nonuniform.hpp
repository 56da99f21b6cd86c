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

// Non-uniform presentations of fixed points of uniform morphisms.
//
// Given a k-uniform morphism g prolongable at a0, pick a power h = g^m and
// letters b, c with
//
//   h(b)  = w1 b c w2          (w1, w2 non-empty, b != a0)
//   h(bc) = w1 b c w3          (w3 = w2 h(c))
//
// and build g' on A ∪ {b', c'}:
//
//   g'(b)  = w1 b' c' w2,   g'(b') = z,   g'(c') = t,   g'(y) = h(y) otherwise
//
// where z t = w1 b c w3 with |z| = 1. The coding D (b' -> b, c' -> c) maps the
// fixed point of g' from a0 onto the fixed point of g.

#include <cstddef>
#include <optional>
#include <string>

#include "hanoiseq/words.hpp"

namespace hanoiseq {

// True iff the coded length-L prefixes of both specs are identical. The two
// output alphabets must carry the same symbol names (Errc::domain_mismatch).
bool verify_fixed_point_equality(const MorphicSpec& a, const MorphicSpec& b, std::size_t length);

struct ExpandingLetter {
  Symbol letter;
  unsigned power;
};

// Smallest m <= 2|A|, then smallest letter b != a0 occurring in the fixed
// point, with at least two b's in g^m(b). Throws Errc::construction_failure
// when there is none.
ExpandingLetter find_expanding_letter(const Morphism& g, Symbol a0);

struct Construction {
  Morphism source;      // g
  Symbol start;         // a0
  unsigned power;       // m, after squaring adjustments
  Morphism powered;     // h = g^m
  Symbol b;
  Symbol c;
  Word w1, w2, w3;      // over A
  Word z, t;            // over A
  Morphism output;      // g' over A ∪ {b', c'}
  Coding coding;        // D
  Symbol b_prime;       // in output.domain()
  Symbol c_prime;
  std::size_t block_length;  // twice the image length of h

  MorphicSpec output_spec() const;   // g' from a0 with coding D
  MorphicSpec powered_spec() const;  // h from a0

  // Throws Errc::validation naming the first broken invariant.
  void check_well_formed() const;
};

Construction construct_nonuniform(const Morphism& g, Symbol a0);

struct ConstructionCheck {
  bool ok = false;
  std::string diagnostic;  // names the failed clause
};

// (i) D(fixed point of g') = fixed point of h on the first `length` symbols;
// (ii) D∘g' = h∘D on every aligned block of block_length symbols there;
// (iii) every b' is followed by c'.
ConstructionCheck validate_construction(const Construction& k, std::size_t length);

}  // namespace hanoiseq
