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

#include "hanoiseq/classic_seq.hpp"

#include <algorithm>
#include <bit>

#include "hanoiseq/catalog.hpp"
#include "hanoiseq/error.hpp"

namespace hanoiseq {

std::string IntSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

void require_hanoi(const Word& w) {
  if (!w.empty() && !same_alphabet(w.alphabet, morphisms::hanoi_alphabet()))
    throw Error(Errc::domain_mismatch, "expected a word over the Hanoi alphabet a b c A B C");
}

bool unbarred(Symbol s) { return s < 3; }

}  // namespace

Word derive_T(const Word& s_prefix) {
  require_hanoi(s_prefix);
  Word t(morphisms::binary());
  t.symbols.reserve(s_prefix.size());
  for (Symbol s : s_prefix.symbols) t.symbols.push_back(unbarred(s) ? 1 : 0);
  return t;
}

IntSequence derive_U(const Word& s_prefix) {
  require_hanoi(s_prefix);
  IntSequence u{"U", {}};
  u.values.reserve(s_prefix.size());
  std::uint64_t count = 0;
  for (Symbol s : s_prefix.symbols) {
    count += unbarred(s);
    u.values.push_back(count);
  }
  return u;
}

Word derive_V(const IntSequence& u) {
  Word v(morphisms::binary());
  v.symbols.reserve(u.size());
  for (auto x : u.values) v.symbols.push_back(static_cast<Symbol>(x % 2));
  return v;
}

std::uint64_t doublefree_oracle(unsigned n) {
  if (n < 1 || n > 24) throw Error(Errc::invalid_argument, "double-free oracle supports 1 <= n <= 24");
  std::uint64_t total = 0;
  for (unsigned x = 1; x <= n; x += 2) {
    unsigned len = 0;
    for (unsigned y = x; y <= n; y *= 2) ++len;
    // Chain element i is x*2^i; a subset is valid when no two chosen
    // elements are adjacent in the chain.
    unsigned best = 0;
    for (unsigned mask = 0; mask < (1u << len); ++mask)
      if ((mask & (mask >> 1)) == 0) best = std::max(best, static_cast<unsigned>(std::popcount(mask)));
    total += best;
  }
  return total;
}

IntSequence derive_Z(const Word& tm_prefix) {
  const auto& bin = morphisms::binary();
  if (!tm_prefix.empty() && !same_alphabet(tm_prefix.alphabet, bin))
    throw Error(Errc::domain_mismatch, "expected a binary word over 0 1");
  if (tm_prefix.empty() || tm_prefix[0] != 0)
    throw Error(Errc::invalid_argument, "Z needs a binary word beginning with 0");
  IntSequence z{"Z", {}};
  std::uint64_t run = 0;
  for (std::size_t i = 1; i < tm_prefix.size(); ++i) {
    if (tm_prefix[i] == 0) {
      z.values.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  return z;
}

Word to_word(const IntSequence& seq, const AlphabetPtr& alphabet) {
  Word w(alphabet);
  w.symbols.reserve(seq.size());
  for (auto x : seq.values) w.symbols.push_back(alphabet->at(std::to_string(x)));
  return w;
}

}  // namespace hanoiseq
