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

// Alphabets, words, morphisms of free monoids, codings and iterative fixed
// points.
//
// Symbols are small integer indices into an Alphabet. Alphabets are shared
// immutably between the words and morphisms that use them; two alphabets are
// considered the same when they list the same names in the same order.
// Barred letters are ordinary symbols; the built-in Hanoi alphabets spell
// them in uppercase (ā is "A").

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hanoiseq {

using Symbol = std::uint32_t;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  // Throws Errc::domain_mismatch when the name is not in the alphabet.
  Symbol at(std::string_view name) const;
  bool contains(Symbol s) const noexcept { return s < names_.size(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Word {
  AlphabetPtr alphabet;
  std::vector<Symbol> symbols;

  Word() = default;
  explicit Word(AlphabetPtr a, std::vector<Symbol> s = {});

  // Whitespace-separated tokens, each a symbol name of `a`.
  static Word parse(AlphabetPtr a, std::string_view text);

  std::size_t size() const noexcept { return symbols.size(); }
  bool empty() const noexcept { return symbols.empty(); }
  Symbol operator[](std::size_t i) const { return symbols[i]; }

  Word prefix(std::size_t n) const;
  std::vector<std::string> tokens() const;
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b);
};

Word concat(const Word& u, const Word& v);

class Morphism {
 public:
  Morphism(AlphabetPtr domain, AlphabetPtr codomain,
           std::vector<std::vector<Symbol>> images);

  // Rules as (symbol, image tokens) pairs; every domain symbol needs a rule.
  static Morphism from_rules(
      AlphabetPtr domain, AlphabetPtr codomain,
      const std::vector<std::pair<std::string, std::string>>& rules);

  const AlphabetPtr& domain() const noexcept { return domain_; }
  const AlphabetPtr& codomain() const noexcept { return codomain_; }

  std::span<const Symbol> image(Symbol s) const;
  Word image_word(Symbol s) const;

  // k when every image has length k.
  std::optional<std::size_t> uniform_width() const noexcept { return width_; }
  bool is_endomorphism() const { return same_alphabet(domain_, codomain_); }
  bool is_erasing() const noexcept;

  Word apply(const Word& w) const;
  void apply_append(std::span<const Symbol> w, std::vector<Symbol>& out) const;

  // m-fold composition of an endomorphism; power(0) is the identity.
  Morphism power(unsigned m) const;

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<std::vector<Symbol>> images_;
  std::optional<std::size_t> width_;
};

Word morphism_apply(const Morphism& m, const Word& w);

// m(a0) = a0 x where x contains at least one symbol whose iterates never
// vanish.
bool is_prolongable(const Morphism& m, Symbol a0);

// A 1-uniform morphism.
class Coding {
 public:
  explicit Coding(Morphism m);

  static Coding from_map(AlphabetPtr domain, AlphabetPtr codomain,
                         const std::vector<std::pair<std::string, std::string>>& map);

  const Morphism& morphism() const noexcept { return m_; }
  const AlphabetPtr& domain() const noexcept { return m_.domain(); }
  const AlphabetPtr& codomain() const noexcept { return m_.codomain(); }
  Symbol map(Symbol s) const { return m_.image(s)[0]; }

  Word apply(const Word& w) const;

 private:
  Morphism m_;
};

Word apply_coding(const Coding& c, const Word& w);

struct MorphicSpec {
  Morphism morphism;
  Symbol start;
  std::optional<Coding> coding;

  // Throws Errc::validation unless the morphism is a non-erasing
  // endomorphism prolongable at `start` and the coding (if any) is defined
  // on its alphabet.
  void validate() const;

  const AlphabetPtr& alphabet() const noexcept { return morphism.domain(); }
  const AlphabetPtr& output_alphabet() const noexcept {
    return coding ? coding->codomain() : morphism.domain();
  }
};

// Incremental generator for the iterative fixed point of a spec: keeps the
// prefix produced so far and expands it on demand, reading the fixed point
// itself as the frontier (u = m(u)).
class PrefixGenerator {
 public:
  explicit PrefixGenerator(MorphicSpec spec);

  // Raw (uncoded) fixed-point prefix of length at least n.
  std::span<const Symbol> raw(std::size_t n);
  Word raw_prefix(std::size_t n);
  // Coded prefix of length exactly n.
  Word prefix(std::size_t n);

  const MorphicSpec& spec() const noexcept { return spec_; }

 private:
  MorphicSpec spec_;
  std::vector<Symbol> buf_;
  std::size_t cursor_ = 0;
};

Word iterate_fixed_point(const MorphicSpec& spec, std::size_t length);
Word iterate_raw_fixed_point(const MorphicSpec& spec, std::size_t length);

// Distinct symbols of w, in alphabet order.
std::vector<Symbol> used_symbols(const Word& w);

}  // namespace hanoiseq
