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

#include "hanoiseq/words.hpp"

#include <algorithm>
#include <cctype>

#include "hanoiseq/error.hpp"

namespace hanoiseq {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    throw Error(Errc::validation, "alphabet must be non-empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || std::any_of(n.begin(), n.end(), [](char ch) {
          return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
        }))
      throw Error(Errc::validation, "invalid symbol name '" + n + "'");
    if (!index_.emplace(n, static_cast<Symbol>(i)).second)
      throw Error(Errc::validation, "duplicate symbol '" + n + "' in alphabet");
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size())
    throw Error(Errc::domain_mismatch,
                "symbol index " + std::to_string(s) + " outside alphabet");
  return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error(Errc::domain_mismatch,
              "symbol '" + std::string(name) + "' not in alphabet");
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(AlphabetPtr a, std::vector<Symbol> s)
    : alphabet(std::move(a)), symbols(std::move(s)) {
  for (Symbol x : symbols)
    if (!alphabet->contains(x))
      throw Error(Errc::domain_mismatch,
                  "symbol index " + std::to_string(x) + " outside alphabet");
}

Word Word::parse(AlphabetPtr a, std::string_view text) {
  Word w;
  w.alphabet = std::move(a);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) w.symbols.push_back(w.alphabet->at(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, symbols.size());
  return Word(alphabet, std::vector<Symbol>(symbols.begin(), symbols.begin() + n));
}

std::vector<std::string> Word::tokens() const {
  std::vector<std::string> out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(alphabet->name(s));
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ' ';
    out += alphabet->name(symbols[i]);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  if (a.symbols != b.symbols) return false;
  if (a.symbols.empty()) return true;
  return same_alphabet(a.alphabet, b.alphabet);
}

Word concat(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet, v.alphabet))
    throw Error(Errc::domain_mismatch, "concatenation of words over different alphabets");
  Word w(u.alphabet, u.symbols);
  w.symbols.insert(w.symbols.end(), v.symbols.begin(), v.symbols.end());
  return w;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain,
                   std::vector<std::vector<Symbol>> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (!domain_ || !codomain_)
    throw Error(Errc::validation, "morphism needs a domain and a codomain");
  if (images_.size() != domain_->size())
    throw Error(Errc::validation, "morphism must define an image for every symbol");
  for (const auto& img : images_)
    for (Symbol s : img)
      if (!codomain_->contains(s))
        throw Error(Errc::validation, "morphism image leaves its codomain");
  width_ = images_.front().size();
  for (const auto& img : images_)
    if (img.size() != *width_) {
      width_.reset();
      break;
    }
}

Morphism Morphism::from_rules(
    AlphabetPtr domain, AlphabetPtr codomain,
    const std::vector<std::pair<std::string, std::string>>& rules) {
  std::vector<std::vector<Symbol>> images(domain->size());
  std::vector<bool> seen(domain->size(), false);
  for (const auto& [sym, img] : rules) {
    Symbol s = domain->at(sym);
    if (seen[s])
      throw Error(Errc::validation, "duplicate rule for symbol '" + sym + "'");
    seen[s] = true;
    images[s] = Word::parse(codomain, img).symbols;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw Error(Errc::validation,
                  "no rule for symbol '" + domain->name(static_cast<Symbol>(i)) + "'");
  return Morphism(std::move(domain), std::move(codomain), std::move(images));
}

std::span<const Symbol> Morphism::image(Symbol s) const {
  if (s >= images_.size())
    throw Error(Errc::domain_mismatch,
                "symbol index " + std::to_string(s) + " outside morphism domain");
  return images_[s];
}

Word Morphism::image_word(Symbol s) const {
  auto img = image(s);
  return Word(codomain_, std::vector<Symbol>(img.begin(), img.end()));
}

bool Morphism::is_erasing() const noexcept {
  return std::any_of(images_.begin(), images_.end(),
                     [](const auto& img) { return img.empty(); });
}

void Morphism::apply_append(std::span<const Symbol> w, std::vector<Symbol>& out) const {
  for (Symbol s : w) {
    auto img = image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
}

Word Morphism::apply(const Word& w) const {
  if (!w.empty() && !same_alphabet(w.alphabet, domain_))
    throw Error(Errc::domain_mismatch, "word is not over the morphism's domain alphabet");
  Word out(codomain_);
  apply_append(w.symbols, out.symbols);
  return out;
}

Morphism Morphism::power(unsigned m) const {
  if (!is_endomorphism())
    throw Error(Errc::validation, "only endomorphisms can be iterated");
  std::vector<std::vector<Symbol>> images(domain_->size());
  for (Symbol s = 0; s < images.size(); ++s) {
    std::vector<Symbol> cur{s};
    for (unsigned i = 0; i < m; ++i) {
      std::vector<Symbol> next;
      apply_append(cur, next);
      cur = std::move(next);
    }
    images[s] = std::move(cur);
  }
  return Morphism(domain_, codomain_, std::move(images));
}

Word morphism_apply(const Morphism& m, const Word& w) { return m.apply(w); }

bool is_prolongable(const Morphism& m, Symbol a0) {
  if (!m.is_endomorphism() || !m.domain()->contains(a0)) return false;
  auto img = m.image(a0);
  if (img.size() < 2 || img[0] != a0) return false;

  // A symbol is mortal when some iterate of the morphism sends it to the
  // empty word: least fixed point of "every image letter is mortal".
  const std::size_t n = m.domain()->size();
  std::vector<bool> mortal(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (Symbol s = 0; s < n; ++s) {
      if (mortal[s]) continue;
      auto im = m.image(s);
      if (std::all_of(im.begin(), im.end(), [&](Symbol x) { return mortal[x]; })) {
        mortal[s] = true;
        changed = true;
      }
    }
  }
  return std::any_of(img.begin() + 1, img.end(), [&](Symbol x) { return !mortal[x]; });
}

// ---------------------------------------------------------------------------
// Coding

Coding::Coding(Morphism m) : m_(std::move(m)) {
  if (m_.uniform_width() != std::size_t{1})
    throw Error(Errc::validation, "a coding must be 1-uniform");
}

Coding Coding::from_map(AlphabetPtr domain, AlphabetPtr codomain,
                        const std::vector<std::pair<std::string, std::string>>& map) {
  return Coding(Morphism::from_rules(std::move(domain), std::move(codomain), map));
}

Word Coding::apply(const Word& w) const { return m_.apply(w); }

Word apply_coding(const Coding& c, const Word& w) { return c.apply(w); }

// ---------------------------------------------------------------------------
// MorphicSpec / fixed points

void MorphicSpec::validate() const {
  if (!morphism.is_endomorphism())
    throw Error(Errc::validation, "morphism of a morphic spec must map its alphabet to itself");
  if (morphism.is_erasing())
    throw Error(Errc::validation, "erasing morphisms are not supported");
  if (!morphism.domain()->contains(start))
    throw Error(Errc::validation, "start symbol outside alphabet");
  if (!is_prolongable(morphism, start))
    throw Error(Errc::validation,
                "morphism is not prolongable at '" + morphism.domain()->name(start) + "'");
  if (coding && !same_alphabet(coding->domain(), morphism.domain()))
    throw Error(Errc::validation, "coding domain differs from the morphism alphabet");
}

PrefixGenerator::PrefixGenerator(MorphicSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  auto img = spec_.morphism.image(spec_.start);
  buf_.assign(img.begin(), img.end());
  cursor_ = 1;
}

std::span<const Symbol> PrefixGenerator::raw(std::size_t n) {
  // buf_ = m(u[0..cursor_)) and u[0..cursor_) is a prefix of buf_, so
  // appending m(u[cursor_]) keeps buf_ a prefix of the fixed point.
  while (buf_.size() < n) {
    auto img = spec_.morphism.image(buf_[cursor_]);
    buf_.insert(buf_.end(), img.begin(), img.end());
    ++cursor_;
  }
  return std::span<const Symbol>(buf_).first(std::min(n, buf_.size()));
}

Word PrefixGenerator::raw_prefix(std::size_t n) {
  auto r = raw(n);
  return Word(spec_.alphabet(), std::vector<Symbol>(r.begin(), r.begin() + n));
}

Word PrefixGenerator::prefix(std::size_t n) {
  Word w = raw_prefix(n);
  if (spec_.coding) return spec_.coding->apply(w);
  return w;
}

Word iterate_fixed_point(const MorphicSpec& spec, std::size_t length) {
  return PrefixGenerator(spec).prefix(length);
}

Word iterate_raw_fixed_point(const MorphicSpec& spec, std::size_t length) {
  return PrefixGenerator(spec).raw_prefix(length);
}

std::vector<Symbol> used_symbols(const Word& w) {
  std::vector<Symbol> out(w.symbols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hanoiseq
