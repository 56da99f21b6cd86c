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

#include "hanoiseq/nonuniform.hpp"

#include <algorithm>
#include <set>

#include "hanoiseq/error.hpp"

namespace hanoiseq {

bool verify_fixed_point_equality(const MorphicSpec& a, const MorphicSpec& b, std::size_t length) {
  const auto& oa = a.output_alphabet();
  const auto& ob = b.output_alphabet();
  std::set<std::string> na(oa->names().begin(), oa->names().end());
  std::set<std::string> nb(ob->names().begin(), ob->names().end());
  if (na != nb)
    throw Error(Errc::domain_mismatch, "specs have different output alphabets");
  Word wa = iterate_fixed_point(a, length);
  Word wb = iterate_fixed_point(b, length);
  if (same_alphabet(oa, ob)) return wa.symbols == wb.symbols;
  return wa.tokens() == wb.tokens();
}

namespace {

void require_uniform_prolongable(const Morphism& g, Symbol a0) {
  if (!g.is_endomorphism()) throw Error(Errc::validation, "morphism must map its alphabet to itself");
  auto k = g.uniform_width();
  if (!k || *k < 2) throw Error(Errc::unsupported, "construction needs a k-uniform morphism, k >= 2");
  if (!is_prolongable(g, a0)) throw Error(Errc::validation, "morphism is not prolongable at the start symbol");
}

// Letters occurring in the fixed point from a0.
std::vector<bool> reachable_letters(const Morphism& g, Symbol a0) {
  std::vector<bool> seen(g.domain()->size(), false);
  std::vector<Symbol> stack{a0};
  seen[a0] = true;
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    for (Symbol x : g.image(s))
      if (!seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
  }
  return seen;
}

// Smallest p >= 1 with img[p] = b and at least one letter after img[p+1].
std::optional<std::size_t> split_position(std::span<const Symbol> img, Symbol b) {
  for (std::size_t p = 1; p + 2 < img.size(); ++p)
    if (img[p] == b) return p;
  return std::nullopt;
}

constexpr unsigned kMaxSquarings = 2;

std::string fresh_name(const Alphabet& a, const std::vector<std::string>& taken, std::string base) {
  auto used = [&](const std::string& n) {
    return a.find(n) || std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  do base += '\'';
  while (used(base));
  return base;
}

}  // namespace

ExpandingLetter find_expanding_letter(const Morphism& g, Symbol a0) {
  require_uniform_prolongable(g, a0);
  const auto reach = reachable_letters(g, a0);
  if (std::count(reach.begin(), reach.end(), true) < 2)
    throw Error(Errc::construction_failure, "fixed point is constant");

  const std::size_t n = g.domain()->size();
  const unsigned bound = static_cast<unsigned>(2 * n);
  Morphism h = g;
  for (unsigned m = 1; m <= bound; ++m) {
    if (m > 1) h = g.power(m);
    for (Symbol b = 0; b < n; ++b) {
      if (b == a0 || !reach[b]) continue;
      auto img = h.image(b);
      if (std::count(img.begin(), img.end(), b) < 2) continue;
      // The squared power must admit a split with w1, w2 non-empty.
      Morphism adj = h;
      bool splittable = false;
      for (unsigned sq = 0; sq <= kMaxSquarings && !splittable; ++sq) {
        if (sq) adj = adj.power(2);
        splittable = split_position(adj.image(b), b).has_value();
      }
      if (splittable) return {b, m};
    }
  }
  throw Error(Errc::construction_failure,
              "no expanding letter other than the start symbol within power " + std::to_string(bound));
}

Construction construct_nonuniform(const Morphism& g, Symbol a0) {
  const ExpandingLetter exp = find_expanding_letter(g, a0);
  const Symbol b = exp.letter;
  unsigned m = exp.power;
  Morphism h = g.power(m);
  std::optional<std::size_t> p = split_position(h.image(b), b);
  for (unsigned sq = 0; !p && sq < kMaxSquarings; ++sq) {
    m *= 2;
    h = h.power(2);
    p = split_position(h.image(b), b);
  }
  if (!p) throw Error(Errc::construction_failure, "expanding letter admits no split");

  const auto& A = g.domain();
  auto img = h.image(b);
  const Symbol c = img[*p + 1];
  auto slice = [&](std::span<const Symbol> s, std::size_t from, std::size_t to) {
    return Word(A, std::vector<Symbol>(s.begin() + from, s.begin() + to));
  };
  Word w1 = slice(img, 0, *p);
  Word w2 = slice(img, *p + 2, img.size());
  Word w3 = concat(w2, h.image_word(c));

  // z t = w1 b c w3 with |z| = 1.
  Word whole = concat(concat(w1, Word(A, {b, c})), w3);
  Word z = whole.prefix(1);
  Word t(A, std::vector<Symbol>(whole.symbols.begin() + 1, whole.symbols.end()));

  std::vector<std::string> names = A->names();
  const std::string b_name = fresh_name(*A, names, A->name(b));
  names.push_back(b_name);
  const std::string c_name = fresh_name(*A, names, A->name(c));
  names.push_back(c_name);
  AlphabetPtr out = make_alphabet(names);
  const Symbol bp = static_cast<Symbol>(A->size());
  const Symbol cp = bp + 1;

  std::vector<std::vector<Symbol>> images(out->size());
  for (Symbol y = 0; y < A->size(); ++y) {
    auto im = h.image(y);
    images[y].assign(im.begin(), im.end());
  }
  images[b] = w1.symbols;
  images[b].push_back(bp);
  images[b].push_back(cp);
  images[b].insert(images[b].end(), w2.symbols.begin(), w2.symbols.end());
  images[bp] = z.symbols;
  images[cp] = t.symbols;

  std::vector<std::vector<Symbol>> coding(out->size());
  for (Symbol y = 0; y < A->size(); ++y) coding[y] = {y};
  coding[bp] = {b};
  coding[cp] = {c};

  Construction k{g, a0, m, h, b, c, std::move(w1), std::move(w2), std::move(w3),
                 std::move(z), std::move(t),
                 Morphism(out, out, std::move(images)),
                 Coding(Morphism(out, A, std::move(coding))),
                 bp, cp, 2 * *h.uniform_width()};
  k.check_well_formed();
  return k;
}

MorphicSpec Construction::output_spec() const { return MorphicSpec{output, start, coding}; }

MorphicSpec Construction::powered_spec() const { return MorphicSpec{powered, start, std::nullopt}; }

void Construction::check_well_formed() const {
  auto fail = [](const std::string& what) { throw Error(Errc::validation, "construction: " + what); };
  const auto& A = source.domain();
  if (b == start) fail("b must differ from the start symbol");
  if (w1.empty() || w2.empty()) fail("w1 and w2 must be non-empty");
  if (z.empty() || t.empty()) fail("z and t must be non-empty");
  if (z.size() == t.size()) fail("|z| must differ from |t|");

  Morphism expect = source.power(power);
  for (Symbol y = 0; y < A->size(); ++y)
    if (!std::ranges::equal(expect.image(y), powered.image(y))) fail("powered morphism is not g^m");

  Word bc(A, {b, c});
  if (!(powered.image_word(b) == concat(concat(w1, bc), w2))) fail("h(b) != w1 b c w2");
  Word whole = concat(concat(w1, bc), w3);
  if (!(powered.apply(bc) == whole)) fail("h(bc) != w1 b c w3");
  if (!(concat(z, t) == whole)) fail("z t != w1 b c w3");

  const auto& out = output.domain();
  if (out->size() != A->size() + 2 || b_prime != A->size() || c_prime != A->size() + 1)
    fail("output alphabet must be A plus two new letters");
  for (Symbol y = 0; y < A->size(); ++y)
    if (out->name(y) != A->name(y)) fail("output alphabet must extend A");
  std::vector<Symbol> gb(w1.symbols);
  gb.push_back(b_prime);
  gb.push_back(c_prime);
  gb.insert(gb.end(), w2.symbols.begin(), w2.symbols.end());
  if (!std::ranges::equal(output.image(b), gb)) fail("g'(b) != w1 b' c' w2");
  if (!std::ranges::equal(output.image(b_prime), z.symbols)) fail("g'(b') != z");
  if (!std::ranges::equal(output.image(c_prime), t.symbols)) fail("g'(c') != t");
  for (Symbol y = 0; y < A->size(); ++y)
    if (y != b && !std::ranges::equal(output.image(y), powered.image(y))) fail("g'(y) != h(y)");
  if (output.uniform_width()) fail("g' must not be uniform");

  for (Symbol y = 0; y < A->size(); ++y)
    if (coding.map(y) != y) fail("D must fix the letters of A");
  if (coding.map(b_prime) != b || coding.map(c_prime) != c) fail("D must send b' to b and c' to c");
  if (block_length != 2 * powered.image(0).size()) fail("block length must be twice |h(x)|");
}

ConstructionCheck validate_construction(const Construction& k, std::size_t length) {
  ConstructionCheck r;
  try {
    k.check_well_formed();
  } catch (const Error& e) {
    r.diagnostic = std::string("well-formedness: ") + e.what();
    return r;
  }

  PrefixGenerator gen(k.output_spec());
  Word raw = gen.raw_prefix(length);
  Word coded = k.coding.apply(raw);
  Word expected = iterate_fixed_point(k.powered_spec(), length);
  if (!(coded == expected)) {
    std::size_t i = 0;
    while (i < length && coded[i] == expected[i]) ++i;
    r.diagnostic = "clause (i): coded fixed point differs at index " + std::to_string(i);
    return r;
  }

  const std::size_t ell = k.block_length;
  for (std::size_t j = 0; (j + 1) * ell <= length; ++j) {
    Word block(raw.alphabet, std::vector<Symbol>(raw.symbols.begin() + j * ell,
                                                 raw.symbols.begin() + (j + 1) * ell));
    if (!(k.coding.apply(k.output.apply(block)) == k.powered.apply(k.coding.apply(block)))) {
      r.diagnostic = "clause (ii): D g' != h D on block " + std::to_string(j);
      return r;
    }
  }

  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i] == k.b_prime && raw[i + 1] != k.c_prime) {
      r.diagnostic = "clause (iii): b' at index " + std::to_string(i) + " not followed by c'";
      return r;
    }

  r.ok = true;
  return r;
}

}  // namespace hanoiseq
