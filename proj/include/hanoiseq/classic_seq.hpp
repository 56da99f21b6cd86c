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

// Sequences read off the classical Hanoi sequence:
//   T  bar projection (period-doubling),
//   U  running count of unbarred moves (maximal double-free subsets),
//   V  U mod 2 (Thue-Morse without its first term),
//   Z  gap lengths between consecutive 0s of Thue-Morse.

#include <cstdint>
#include <string>
#include <vector>

#include "hanoiseq/words.hpp"

namespace hanoiseq {

struct IntSequence {
  std::string label;
  std::vector<std::uint64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::uint64_t operator[](std::size_t i) const { return values[i]; }
  std::string str() const;
};

// Inputs must use the six-letter Hanoi alphabet (Errc::domain_mismatch).
Word derive_T(const Word& s_prefix);
IntSequence derive_U(const Word& s_prefix);
Word derive_V(const IntSequence& u);

// Maximum size of S ⊆ {1..n} with x ∈ S ⇒ 2x ∉ S, by exhaustive search on
// each chain x, 2x, 4x, ... (x odd). 1 <= n <= 24.
std::uint64_t doublefree_oracle(unsigned n);

// Complete gaps between consecutive 0s; a trailing unclosed gap is dropped.
// The word must be over {0,1} and begin with 0.
IntSequence derive_Z(const Word& tm_prefix);

// IntSequence as a word over the decimal names of its values, e.g. for
// comparing Z with a fixed point over {0,1,2}.
Word to_word(const IntSequence& seq, const AlphabetPtr& alphabet);

}  // namespace hanoiseq
