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

#include "hanoiseq/toeplitz.hpp"

#include <algorithm>
#include <cctype>

#include "hanoiseq/error.hpp"

namespace hanoiseq {

ToeplitzSpec::ToeplitzSpec(AlphabetPtr alphabet, std::vector<std::optional<Symbol>> pattern)
    : alphabet_(std::move(alphabet)), pattern_(std::move(pattern)) {
  if (!alphabet_) throw Error(Errc::validation, "Toeplitz pattern needs an alphabet");
  if (pattern_.empty()) throw Error(Errc::validation, "Toeplitz pattern must be non-empty");
  if (!pattern_.front())
    throw Error(Errc::non_convergent, "Toeplitz pattern must not begin with a hole");
  for (std::size_t j = 0; j < pattern_.size(); ++j) {
    holes_before_.push_back(hole_rank_.size());
    if (!pattern_[j])
      hole_rank_.push_back(j);
    else if (!alphabet_->contains(*pattern_[j]))
      throw Error(Errc::domain_mismatch, "Toeplitz pattern symbol outside alphabet");
  }
}

ToeplitzSpec ToeplitzSpec::parse(std::string_view text, AlphabetPtr alphabet) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < text.size();) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw Error(Errc::validation, "Toeplitz pattern must be non-empty");
  if (!alphabet) {
    std::vector<std::string> names;
    for (const auto& t : tokens)
      if (t != kHoleToken && std::find(names.begin(), names.end(), t) == names.end())
        names.push_back(t);
    if (names.empty())
      throw Error(Errc::non_convergent, "Toeplitz pattern consists only of holes");
    alphabet = make_alphabet(std::move(names));
  }
  std::vector<std::optional<Symbol>> pattern;
  for (const auto& t : tokens) {
    if (t == kHoleToken)
      pattern.emplace_back(std::nullopt);
    else
      pattern.emplace_back(alphabet->at(t));
  }
  return ToeplitzSpec(std::move(alphabet), std::move(pattern));
}

ToeplitzSpec::Source ToeplitzSpec::source(std::size_t i) const {
  const std::size_t p = pattern_.size();
  const std::size_t off = i % p;
  if (pattern_[off]) return {pattern_[off], 0};
  return {std::nullopt, (i / p) * hole_rank_.size() + holes_before_[off]};
}

// A hole at position i > 0 copies position rank(i) < i, so one forward pass
// fills everything.
Word toeplitz_expand(const ToeplitzSpec& spec, std::size_t length) {
  Word w(spec.alphabet());
  w.symbols.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    auto src = spec.source(i);
    w.symbols[i] = src.symbol ? *src.symbol : w.symbols[src.rank];
  }
  return w;
}

std::vector<std::optional<Symbol>> toeplitz_stage(const ToeplitzSpec& spec, unsigned fills,
                                                  std::size_t length) {
  std::vector<std::optional<Symbol>> out(length);
  std::vector<unsigned> passes(length, 0);  // fill passes needed per position
  for (std::size_t i = 0; i < length; ++i) {
    auto src = spec.source(i);
    if (src.symbol) {
      out[i] = src.symbol;
    } else {
      passes[i] = passes[src.rank] + 1;
      out[i] = out[src.rank];
    }
  }
  for (std::size_t i = 0; i < length; ++i)
    if (passes[i] > fills) out[i].reset();
  return out;
}

unsigned toeplitz_passes(const ToeplitzSpec& spec, std::size_t length) {
  std::vector<unsigned> passes(length, 0);
  unsigned most = 0;
  for (std::size_t i = 0; i < length; ++i) {
    auto src = spec.source(i);
    if (!src.symbol) passes[i] = passes[src.rank] + 1;
    most = std::max(most, passes[i]);
  }
  return most;
}

}  // namespace hanoiseq
