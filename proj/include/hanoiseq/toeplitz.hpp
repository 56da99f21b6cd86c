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

// Toeplitz transforms with self-fill: the holes of a periodic pattern are
// filled, in order, by the sequence under construction.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hanoiseq/words.hpp"

namespace hanoiseq {

inline constexpr std::string_view kHoleToken = ".";

class ToeplitzSpec {
 public:
  // nullopt entries are holes. Throws Errc::non_convergent when the pattern
  // starts with a hole or has no filled position.
  ToeplitzSpec(AlphabetPtr alphabet, std::vector<std::optional<Symbol>> pattern);

  // Tokens separated by whitespace, "." for a hole. Without an alphabet the
  // symbols are numbered in order of first appearance.
  static ToeplitzSpec parse(std::string_view text, AlphabetPtr alphabet = nullptr);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::optional<Symbol>>& pattern() const noexcept { return pattern_; }
  std::size_t period() const noexcept { return pattern_.size(); }
  std::size_t holes() const noexcept { return hole_rank_.size(); }

  // Where position i reads from: a symbol, or the hole rank it copies.
  struct Source {
    std::optional<Symbol> symbol;
    std::size_t rank = 0;
  };
  Source source(std::size_t i) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::optional<Symbol>> pattern_;
  std::vector<std::size_t> hole_rank_;     // pattern offsets of the holes
  std::vector<std::size_t> holes_before_;  // holes strictly before offset j
};

Word toeplitz_expand(const ToeplitzSpec& spec, std::size_t length);

// The sequence after `fills` fill passes (0 = the periodic pattern itself);
// nullopt marks positions still holding a hole.
std::vector<std::optional<Symbol>> toeplitz_stage(const ToeplitzSpec& spec, unsigned fills,
                                                  std::size_t length);

// Fill passes needed before the first `length` positions are hole-free.
unsigned toeplitz_passes(const ToeplitzSpec& spec, std::size_t length);

}  // namespace hanoiseq
