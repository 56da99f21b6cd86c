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

#include <doctest.h>

#include "hanoiseq/catalog.hpp"
#include "test_util.hpp"

using namespace hanoiseq;
using namespace testutil;
namespace m = hanoiseq::morphisms;

TEST_CASE("alphabet basics") {
  auto a = m::hanoi_alphabet();
  CHECK(a->size() == 6);
  CHECK(a->at("a") != a->at("A"));
  CHECK(a->find("x") == std::nullopt);
  CHECK(error_code([&] { a->at("x"); }) == Errc::domain_mismatch);
  CHECK(error_code([] { make_alphabet({}); }) == Errc::validation);
  CHECK(error_code([] { make_alphabet({"a", "a"}); }) == Errc::validation);
}

TEST_CASE("word parse and print") {
  auto a = m::hanoi_alphabet();
  Word w = W(a, "a C  b\ta");
  CHECK(w.size() == 4);
  CHECK(w.str() == "a C b a");
  CHECK(W(a, "").empty());
  CHECK(error_code([&] { W(a, "a q"); }) == Errc::domain_mismatch);
}

TEST_CASE("morphism_apply examples") {
  auto phi = m::classical();
  auto h = m::hanoi_alphabet();
  CHECK(morphism_apply(phi, W(h, "a C")).str() == "a C b a");
  CHECK(morphism_apply(phi, Word(h)).empty());

  auto omega = m::period_doubling();
  CHECK(morphism_apply(omega, W(m::binary(), "1 0")).str() == "1 0 1 1");

  CHECK(error_code([&] { morphism_apply(phi, W(m::binary(), "1")); }) == Errc::domain_mismatch);
}

TEST_CASE("is_prolongable examples") {
  auto h = m::hanoi_alphabet();
  auto b = m::binary();
  CHECK(is_prolongable(m::classical(), h->at("a")));
  CHECK_FALSE(is_prolongable(m::period_doubling(), b->at("0")));
  CHECK(is_prolongable(m::period_doubling(), b->at("1")));

  // a -> a x, x -> empty: the tail dies out.
  auto ax = make_alphabet({"a", "x"});
  Morphism mortal(ax, ax, {{0, 1}, {}});
  CHECK_FALSE(is_prolongable(mortal, 0));
  // a -> a, nothing after the start symbol.
  Morphism stuck(ax, ax, {{0}, {1}});
  CHECK_FALSE(is_prolongable(stuck, 0));
}

TEST_CASE("iterate_fixed_point examples") {
  CHECK(iterate_fixed_point(catalog_lookup("classical-hanoi"), 8).str() == "a C b a c B a C");
  CHECK(iterate_fixed_point(catalog_lookup("fibonacci"), 8).str() == "a b a a b a b a");
  CHECK(iterate_fixed_point(catalog_lookup("lazy-hanoi"), 9).str() == "a b a B A b a b a");
  CHECK(iterate_fixed_point(catalog_lookup("classical-hanoi"), 0).empty());
}

TEST_CASE("apply_coding examples") {
  auto F = m::cyclic_coding();
  CHECK(apply_coding(F, W(m::cyclic_alphabet(), "f v f")).str() == "a b a");
  auto mod3 = m::z_mod3();
  CHECK(apply_coding(mod3, W(m::z_uniform().domain(), "0 4")).str() == "0 1");
  auto bars = m::bar_projection();
  CHECK(apply_coding(bars, W(m::hanoi_alphabet(), "a C b")).str() == "1 0 1");
  CHECK(error_code([&] { apply_coding(bars, W(m::binary(), "0")); }) == Errc::domain_mismatch);
  CHECK(error_code([] { Coding c(m::classical()); }) == Errc::validation);
}

TEST_CASE("catalog") {
  const auto& cat = Catalog::builtin();
  for (const char* name : {"classical-hanoi", "lazy-hanoi", "cyclic-hanoi", "classical-hanoi-nonuniform",
                           "lazy-hanoi-nonuniform", "period-doubling", "thue-morse", "fibonacci",
                           "z-nonuniform", "z-uniform", "paperfolding"})
    CHECK(cat.find(name) != nullptr);

  const auto& phi = catalog_lookup("classical-hanoi");
  auto h = phi.alphabet();
  CHECK(phi.morphism.image_word(h->at("a")).str() == "a C");
  CHECK(phi.alphabet()->name(phi.start) == "a");
  const auto& lambda = catalog_lookup("lazy-hanoi");
  CHECK(lambda.morphism.image_word(lambda.alphabet()->at("a")).str() == "a b a");

  try {
    catalog_lookup("no-such-seq");
    FAIL("expected not-found");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_found);
    CHECK(std::string(e.what()).find("classical-hanoi") != std::string::npos);
  }

  Catalog c;
  c.add("x", "", catalog_lookup("thue-morse"));
  CHECK(error_code([&] { c.add("x", "", catalog_lookup("thue-morse")); }) == Errc::validation);
}

TEST_CASE("spec validation") {
  auto ab = make_alphabet({"a", "b"});
  // Erasing morphisms are rejected even when prolongable.
  MorphicSpec erasing{Morphism(ab, ab, {{0, 0}, {}}), 0, std::nullopt};
  CHECK(error_code([&] { erasing.validate(); }) == Errc::validation);
  MorphicSpec not_prolongable{Morphism(ab, ab, {{1, 0}, {0}}), 0, std::nullopt};
  CHECK(error_code([&] { not_prolongable.validate(); }) == Errc::validation);
  CHECK(error_code([&] { iterate_fixed_point(not_prolongable, 0); }) == Errc::validation);
}

TEST_CASE("uniformity of the Hanoi morphisms") {
  CHECK(m::classical().uniform_width() == 2u);
  CHECK(m::lazy().uniform_width() == 3u);
  CHECK_FALSE(m::classical_nonuniform().uniform_width());
  CHECK_FALSE(m::lazy_nonuniform().uniform_width());
}

TEST_CASE("morphism power") {
  auto phi = m::classical();
  auto h = m::hanoi_alphabet();
  Word a = W(h, "a");
  CHECK(phi.power(2).apply(a) == phi.apply(phi.apply(a)));
  CHECK(phi.power(0).apply(a) == a);
}

TEST_CASE("used symbols") {
  auto h = m::hanoi_alphabet();
  CHECK(used_symbols(W(h, "b a b")) == std::vector<Symbol>{h->at("a"), h->at("b")});
}

// ---- properties -------------------------------------------------------------

TEST_CASE("property: homomorphism law on random words") {
  for (const auto& e : Catalog::builtin().entries()) {
    const auto& mo = e.spec.morphism;
    for (int trial = 0; trial < 200; ++trial) {
      Word u = random_word(mo.domain(), 12), v = random_word(mo.domain(), 12);
      CHECK_MESSAGE(mo.apply(concat(u, v)) == concat(mo.apply(u), mo.apply(v)), e.name);
    }
  }
}

TEST_CASE("property: fixed-point law") {
  for (const auto& e : Catalog::builtin().entries()) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t L = uniform(0, 500);
      Word p = iterate_raw_fixed_point(e.spec, L);
      Word img = e.spec.morphism.apply(p);
      REQUIRE(img.size() >= p.size());
      CHECK_MESSAGE(img.prefix(p.size()) == p, e.name);
    }
  }
}

TEST_CASE("property: prefix stability") {
  for (const auto& e : Catalog::builtin().entries()) {
    Word big = iterate_fixed_point(e.spec, 3000);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t L = uniform(0, 3000);
      CHECK_MESSAGE(iterate_fixed_point(e.spec, L) == big.prefix(L), e.name);
    }
    PrefixGenerator gen(e.spec);
    std::size_t L = 0;
    while (L < 3000) {
      L += uniform(1, 400);
      L = std::min<std::size_t>(L, 3000);
      CHECK(gen.prefix(L) == big.prefix(L));
    }
  }
}
