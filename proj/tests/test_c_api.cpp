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

// Exercises the shared library through the C header only.

#include <doctest.h>

#include <memory>
#include <string>

#include "hanoiseq/hanoiseq.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { hseq_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

struct Spec {
  hseq_spec* p = nullptr;
  ~Spec() { hseq_spec_free(p); }
};

Spec lookup(const char* name) {
  Spec s;
  REQUIRE(hseq_spec_lookup(name, &s.p) == HSEQ_OK);
  return s;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(hseq_version()) == "1.0.0");
  CHECK(std::string(hseq_status_string(HSEQ_OK)).size() > 0);
  CHECK(std::string(hseq_status_string(HSEQ_ERR_NOT_FOUND)) !=
        std::string(hseq_status_string(HSEQ_ERR_PARSE)));
}

TEST_CASE("catalog and generate") {
  Str names;
  REQUIRE(hseq_catalog_names(&names.p) == HSEQ_OK);
  CHECK(contains(names.s(), "classical-hanoi"));
  CHECK(contains(names.s(), "period-doubling"));

  Spec s = lookup("classical-hanoi");
  Str text;
  REQUIRE(hseq_spec_generate(s.p, 16, HSEQ_FORMAT_TEXT, &text.p) == HSEQ_OK);
  CHECK(text.s() == "a C b a c B a C b A c b a C b a");

  Str js;
  REQUIRE(hseq_spec_generate(s.p, 3, HSEQ_FORMAT_JSON, &js.p) == HSEQ_OK);
  CHECK(contains(js.s(), "\"C\""));

  size_t width = 0;
  REQUIRE(hseq_spec_uniform_width(s.p, &width) == HSEQ_OK);
  CHECK(width == 2);
}

TEST_CASE("errors set the last-error message") {
  hseq_spec* p = nullptr;
  CHECK(hseq_spec_lookup("no-such-sequence", &p) == HSEQ_ERR_NOT_FOUND);
  CHECK(p == nullptr);
  CHECK(contains(hseq_last_error(), "no-such-sequence"));
  CHECK(hseq_spec_lookup(nullptr, &p) == HSEQ_ERR_INVALID_ARGUMENT);

  CHECK(hseq_spec_from_json("{", &p) == HSEQ_ERR_PARSE);
  CHECK(hseq_spec_from_json(R"({"alphabet":["a"],"rules":{"a":["a","z"]},"start":"a"})", &p) ==
        HSEQ_ERR_DOMAIN_MISMATCH);
  CHECK(hseq_spec_from_json(R"({"alphabet":["a","b"],"rules":{"a":["b"],"b":["a"]},"start":"a"})",
                            &p) == HSEQ_ERR_VALIDATION);

  // Freeing NULL is allowed.
  hseq_spec_free(nullptr);
  hseq_dfao_free(nullptr);
  hseq_string_free(nullptr);
}

TEST_CASE("spec JSON round trip") {
  Spec s = lookup("thue-morse");
  Str js;
  REQUIRE(hseq_spec_to_json(s.p, &js.p) == HSEQ_OK);
  Spec back;
  REQUIRE(hseq_spec_from_json(js.p, &back.p) == HSEQ_OK);
  int equal = 0;
  REQUIRE(hseq_fixed_point_equal(s.p, back.p, 1000, &equal) == HSEQ_OK);
  CHECK(equal == 1);

  Spec pd = lookup("period-doubling");
  REQUIRE(hseq_fixed_point_equal(s.p, pd.p, 100, &equal) == HSEQ_OK);
  CHECK(equal == 0);
}

TEST_CASE("dfao") {
  Spec s = lookup("classical-hanoi");
  hseq_dfao* d = nullptr;
  REQUIRE(hseq_dfao_create(s.p, &d) == HSEQ_OK);
  std::unique_ptr<hseq_dfao, void (*)(hseq_dfao*)> guard(d, hseq_dfao_free);
  Str sym;
  REQUIRE(hseq_dfao_eval(d, 9, &sym.p) == HSEQ_OK);
  CHECK(sym.s() == "A");
  int ok = 0;
  uint64_t bad = 0;
  REQUIRE(hseq_dfao_check(d, s.p, 4096, &ok, &bad) == HSEQ_OK);
  CHECK(ok == 1);
  Str js;
  REQUIRE(hseq_dfao_to_json(d, &js.p) == HSEQ_OK);
  CHECK(contains(js.s(), "\"radix\""));

  Spec fib = lookup("fibonacci");
  hseq_dfao* none = nullptr;
  CHECK(hseq_dfao_create(fib.p, &none) == HSEQ_ERR_UNSUPPORTED);

  Str k;
  Spec pd = lookup("period-doubling");
  REQUIRE(hseq_kernel(pd.p, 4096, 2, 4, HSEQ_FORMAT_TEXT, &k.p) == HSEQ_OK);
  CHECK(contains(k.s(), "classes 4"));
}

TEST_CASE("hanoi entry points") {
  Str out;
  int legal = -1;
  REQUIRE(hseq_hanoi_simulate("a C b", 2, "classical", HSEQ_FORMAT_TEXT, &out.p, &legal) == HSEQ_OK);
  CHECK(legal == 1);
  CHECK(contains(out.s(), "event step 3: disks 1..2 on III"));

  Str bad;
  REQUIRE(hseq_hanoi_simulate("a a", 2, "classical", HSEQ_FORMAT_TEXT, &bad.p, &legal) == HSEQ_OK);
  CHECK(legal == 0);

  Str v;
  CHECK(hseq_hanoi_simulate("a A", 2, "cyclic", HSEQ_FORMAT_TEXT, &v.p, &legal) ==
        HSEQ_ERR_VARIANT_VIOLATION);
  CHECK(hseq_hanoi_simulate("a q", 2, "classical", HSEQ_FORMAT_TEXT, &v.p, &legal) == HSEQ_ERR_PARSE);

  Str ver;
  int ok = 0;
  REQUIRE(hseq_hanoi_verify(3, HSEQ_FORMAT_TEXT, &ver.p, &ok) == HSEQ_OK);
  CHECK(ok == 1);
  CHECK(ver.s() == "disks 3: 7 moves, final peg II, ok");

  Str b;
  size_t len = 0;
  REQUIRE(hseq_hanoi_bfs("cyclic", 2, 1, 2, HSEQ_FORMAT_TEXT, &b.p, &len) == HSEQ_OK);
  CHECK(len == 5);
  CHECK(hseq_hanoi_bfs("classical", 3, 1, 1, HSEQ_FORMAT_TEXT, &b.p, &len) == HSEQ_ERR_INVALID_ARGUMENT);

  Str sol;
  REQUIRE(hseq_hanoi_solve("classical", 3, 2, 1, HSEQ_FORMAT_TEXT, &sol.p) == HSEQ_OK);
  CHECK(sol.s() == "a C b a c B a");
  Str sol2;
  CHECK(hseq_hanoi_solve("cyclic", 3, 2, 1, HSEQ_FORMAT_TEXT, &sol2.p) == HSEQ_ERR_UNSUPPORTED);
  REQUIRE(hseq_hanoi_solve("cyclic", 3, 3, 0, HSEQ_FORMAT_JSON, &sol2.p) == HSEQ_OK);
  CHECK(contains(sol2.s(), "\"length\": 21"));

  Str cm;
  REQUIRE(hseq_hanoi_check_morphic("lazy", 5, HSEQ_FORMAT_TEXT, &cm.p, &ok) == HSEQ_OK);
  CHECK(ok == 1);
  CHECK(contains(cm.s(), "disks 5: step 121 on II, optimal 121, ok"));
}

TEST_CASE("census and squares") {
  Spec s = lookup("classical-hanoi");
  Str c;
  REQUIRE(hseq_census(s.p, 4096, 3, 1, HSEQ_FORMAT_TEXT, &c.p) == HSEQ_OK);
  CHECK(contains(c.s(), "a C b"));

  Str q;
  int found = -1;
  REQUIRE(hseq_squarefree(s.p, 10000, 64, HSEQ_FORMAT_TEXT, &q.p, &found) == HSEQ_OK);
  CHECK(found == 0);

  Spec h = lookup("lazy-hanoi");
  Str hq;
  REQUIRE(hseq_squarefree(h.p, 100, 51, HSEQ_FORMAT_TEXT, &hq.p, &found) == HSEQ_OK);
  CHECK(found == 1);
}

TEST_CASE("toeplitz and classic sequences") {
  Str t;
  REQUIRE(hseq_toeplitz_expand("0 . 1 .", 8, HSEQ_FORMAT_TEXT, &t.p) == HSEQ_OK);
  CHECK(t.s() == "0 0 1 0 0 1 1 0");
  CHECK(hseq_toeplitz_expand(". 1", 8, HSEQ_FORMAT_TEXT, &t.p) == HSEQ_ERR_NON_CONVERGENT);

  Str u;
  REQUIRE(hseq_derive("U", 15, HSEQ_FORMAT_TEXT, &u.p) == HSEQ_OK);
  CHECK(u.s() == "1 1 2 3 4 4 5 5 6 6 7 8 9 9 10");
  Str z;
  REQUIRE(hseq_derive("Z", 7, HSEQ_FORMAT_TEXT, &z.p) == HSEQ_OK);
  CHECK(z.s() == "2 1 0 2 0 1 2");
  CHECK(hseq_derive("Q", 7, HSEQ_FORMAT_TEXT, &z.p) == HSEQ_ERR_INVALID_ARGUMENT);

  uint64_t n = 0;
  REQUIRE(hseq_doublefree(15, &n) == HSEQ_OK);
  CHECK(n == 10);
  CHECK(hseq_doublefree(0, &n) == HSEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("construction and algebra") {
  Spec tm = lookup("thue-morse");
  Str k;
  int valid = 0;
  REQUIRE(hseq_construct_nonuniform(tm.p, 4096, HSEQ_FORMAT_TEXT, &k.p, &valid) == HSEQ_OK);
  CHECK(valid == 1);

  Spec pd = lookup("period-doubling");
  Str v;
  int zero = 0;
  REQUIRE(hseq_christol_verify(pd.p, nullptr, 2, 4096, HSEQ_FORMAT_TEXT, &v.p, &zero) == HSEQ_OK);
  CHECK(zero == 1);
  CHECK(hseq_christol_verify(pd.p, "{", 2, 64, HSEQ_FORMAT_TEXT, &v.p, &zero) == HSEQ_ERR_PARSE);

  Str r;
  int found = 0;
  REQUIRE(hseq_christol_search(pd.p, 2, 2, 2, 512, HSEQ_FORMAT_TEXT, &r.p, &found) == HSEQ_OK);
  CHECK(found == 1);
  Str r1;
  REQUIRE(hseq_christol_search(pd.p, 2, 1, 2, 512, HSEQ_FORMAT_TEXT, &r1.p, &found) == HSEQ_OK);
  CHECK(found == 0);
  CHECK(hseq_christol_search(pd.p, 2, 2, 2, 20, HSEQ_FORMAT_TEXT, &r1.p, &found) ==
        HSEQ_ERR_INSUFFICIENT_TRUNCATION);
}
