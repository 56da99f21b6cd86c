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

#include <deque>
#include <map>

#include "hanoiseq/catalog.hpp"
#include "hanoiseq/hanoi.hpp"
#include "test_util.hpp"

using namespace hanoiseq;
using namespace hanoiseq::hanoi;
using namespace testutil;

namespace {

using Pegs = std::array<std::vector<unsigned>, 3>;

// Oracle: breadth-first search over explicit peg lists.
std::size_t oracle_distance(const Variant& v, unsigned disks, Peg from, Peg to) {
  HanoiState start(disks, from), goal(disks, to);
  std::map<Pegs, std::size_t> dist{{start.pegs(), 0}};
  std::deque<HanoiState> queue{start};
  while (!queue.empty()) {
    HanoiState s = queue.front();
    queue.pop_front();
    if (s == goal) return dist[s.pegs()];
    for (Move m : v.moves()) {
      if (!s.can_apply(m)) continue;
      HanoiState t = apply_move(s, m);
      if (dist.emplace(t.pegs(), dist[s.pegs()] + 1).second) queue.push_back(t);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Move> moves(const std::string& text) { return word_to_moves(W(morphisms::hanoi_alphabet(), text)); }

}  // namespace

TEST_CASE("move semantics") {
  CHECK(source(Move::a) == Peg::I);
  CHECK(target(Move::a) == Peg::II);
  CHECK(source(Move::C) == Peg::I);
  CHECK(target(Move::C) == Peg::III);
  CHECK(source(Move::B) == Peg::III);
  CHECK(target(Move::B) == Peg::II);
  for (Move m : kAllMoves) {
    CHECK(bar(bar(m)) == m);
    CHECK(source(bar(m)) == target(m));
    CHECK(target(bar(m)) == source(m));
    CHECK(move_between(source(m), target(m)) == m);
    CHECK(parse_move(move_name(m)) == m);
  }
  CHECK(error_code([] { move_between(Peg::I, Peg::I); }) == Errc::invalid_argument);
  CHECK(parse_peg("II") == Peg::II);
  CHECK(parse_peg("3") == Peg::III);
  CHECK_FALSE(parse_peg("IV"));
}

TEST_CASE("variants") {
  CHECK(Variant::classical().moves().size() == 6);
  CHECK(Variant::cyclic().moves() == std::vector<Move>{Move::a, Move::b, Move::c});
  CHECK(Variant::lazy().moves() == std::vector<Move>{Move::a, Move::b, Move::A, Move::B});
  CHECK(error_code([] { Variant::by_name("four-peg"); }) == Errc::not_found);
}

TEST_CASE("apply_move examples") {
  auto s = HanoiState::from_pegs({{{2, 1}, {}, {}}});
  auto t = apply_move(s, Move::a);
  CHECK(t.peg(Peg::I) == std::vector<unsigned>{2});
  CHECK(t.peg(Peg::II) == std::vector<unsigned>{1});
  CHECK(error_code([&] { apply_move(t, Move::a); }) == Errc::larger_onto_smaller);
  auto e = HanoiState::from_pegs({{{}, {1}, {}}});
  CHECK(error_code([&] { apply_move(e, Move::a); }) == Errc::empty_source);
}

TEST_CASE("state validation") {
  CHECK(error_code([] { HanoiState::from_pegs({{{1, 2}, {}, {}}}); }) == Errc::validation);
  CHECK(error_code([] { HanoiState::from_pegs({{{1}, {1}, {}}}); }) == Errc::validation);
  CHECK(error_code([] { HanoiState::from_pegs({{{3}, {}, {}}}); }) == Errc::validation);
}

TEST_CASE("simulate examples") {
  Trace t = simulate(S_prefix(7), 3, Variant::classical());
  CHECK(t.legal());
  REQUIRE(t.events.size() == 3);
  CHECK(t.events[0] == CompletionEvent{1, 1, Peg::II});
  CHECK(t.events[1] == CompletionEvent{3, 2, Peg::III});
  CHECK(t.events[2] == CompletionEvent{7, 3, Peg::II});
  CHECK(t.final_state.all_on(Peg::II));

  Trace empty = simulate(std::vector<Move>{}, 4, Variant::classical());
  CHECK(empty.events.empty());
  CHECK(empty.legal());

  CHECK(error_code([] { simulate(moves("a c"), 2, Variant::lazy()); }) == Errc::variant_violation);
  CHECK(error_code([] { simulate(moves("a b C"), 2, Variant::cyclic()); }) == Errc::variant_violation);

  Trace bad = simulate(moves("a a"), 2, Variant::classical());
  CHECK_FALSE(bad.legal());
  CHECK(bad.legal_steps == 1);
  REQUIRE(bad.error);
  CHECK(bad.error->step == 2);
  CHECK(bad.error->code == Errc::larger_onto_smaller);
}

TEST_CASE("verify_classical_prefix") {
  for (unsigned n = 1; n <= 16; ++n) {
    ClassicalCheck c = verify_classical_prefix(n);
    CHECK_MESSAGE(c.ok, n);
    CHECK(c.moves == (std::size_t{1} << n) - 1);
    CHECK(c.final_peg == (n % 2 ? Peg::II : Peg::III));
  }
  CHECK(classical_target(1) == Peg::II);
  CHECK(classical_target(2) == Peg::III);
}

TEST_CASE("bfs_optimal") {
  CHECK(bfs_optimal(Variant::classical(), 3, Peg::I, Peg::II).length == 7);
  for (const Variant& v : {Variant::classical(), Variant::cyclic(), Variant::lazy()})
    CHECK(bfs_optimal(v, 0, Peg::I, Peg::II).length == 0);

  BfsResult cyc = bfs_optimal(Variant::cyclic(), 2, Peg::I, Peg::II);
  CHECK(cyc.length == oracle_distance(Variant::cyclic(), 2, Peg::I, Peg::II));
  CHECK(cyc.length == 5);
  CHECK(cyc.witness == moves("a b a c a"));

  for (unsigned n = 1; n <= 10; ++n)
    CHECK(bfs_optimal(Variant::classical(), n, Peg::I, classical_target(n)).length ==
          (std::size_t{1} << n) - 1);
  CHECK(error_code([] { bfs_optimal(Variant::classical(), 2, Peg::I, Peg::I); }) == Errc::invalid_argument);
  CHECK(error_code([] { bfs_optimal(Variant::classical(), kMaxBfsDisks + 1, Peg::I, Peg::II); }) ==
        Errc::invalid_argument);

  // Only a moves: the second disk can never leave peg I.
  Variant only_a("only-a", {Move::a});
  CHECK(error_code([&] { bfs_optimal(only_a, 2, Peg::I, Peg::II); }) == Errc::unreachable);
}

TEST_CASE("property: bfs matches the explicit-state oracle") {
  for (const Variant& v : {Variant::classical(), Variant::cyclic(), Variant::lazy()})
    for (unsigned n = 1; n <= 5; ++n)
      for (Peg from : {Peg::I, Peg::II, Peg::III})
        for (Peg to : {Peg::I, Peg::II, Peg::III}) {
          if (from == to) continue;
          BfsResult r = bfs_optimal(v, n, from, to);
          CHECK(r.length == oracle_distance(v, n, from, to));
          CHECK(r.witness.size() == r.length);
          HanoiState s(n, from);
          for (Move m : r.witness) {
            REQUIRE(v.allows(m));
            s.apply(m);
          }
          CHECK(s.all_on(to));
        }
}

TEST_CASE("olive_solve") {
  CHECK(olive_solve(1, Peg::II) == moves("a"));
  auto two = olive_solve(2, Peg::III);
  CHECK(two.size() == 3);
  CHECK(two.size() == bfs_optimal(Variant::classical(), 2, Peg::I, Peg::III).length);
  Trace t2 = simulate(two, 2, Variant::classical());
  CHECK(t2.legal());
  CHECK(t2.final_state.all_on(Peg::III));

  CHECK(moves_to_word(olive_solve(3, Peg::II)) == S_prefix(7));

  for (unsigned n = 1; n <= 12; ++n) {
    for (Peg target : {Peg::II, Peg::III}) {
      auto w = olive_solve(n, target);
      CHECK(w.size() == (std::size_t{1} << n) - 1);
      Trace t = simulate(w, n, Variant::classical());
      CHECK(t.legal());
      CHECK(t.final_state.all_on(target));
    }
    CHECK(moves_to_word(olive_solve(n, classical_target(n))) == S_prefix((std::size_t{1} << n) - 1));
  }
  CHECK(error_code([] { olive_solve(3, Peg::I); }) == Errc::invalid_argument);
  CHECK(error_code([] { olive_solve(0, Peg::II); }) == Errc::invalid_argument);
}

TEST_CASE("morphic variants solve their puzzles optimally") {
  for (const Variant& v : {Variant::lazy(), Variant::cyclic(), Variant::classical()}) {
    const MorphicSpec& spec = morphic_moves(v);
    for (unsigned n = 1; n <= 8; ++n) {
      MorphicSolution s = check_morphic_solution(v, spec, n);
      REQUIRE(s.event);
      CHECK_MESSAGE(s.ok, v.name() << " N=" << n);
      CHECK(s.event->step == s.optimal);
      if (n <= 5) CHECK(s.optimal == oracle_distance(v, n, Peg::I, s.event->peg));
    }
  }
  // Lazy: (3^N - 1) / 2 moves, always onto peg II.
  std::size_t p3 = 1;
  for (unsigned n = 1; n <= 8; ++n) {
    p3 *= 3;
    auto s = check_morphic_solution(Variant::lazy(), morphic_moves(Variant::lazy()), n);
    CHECK(s.event->step == (p3 - 1) / 2);
    CHECK(s.event->peg == Peg::II);
  }
}

TEST_CASE("factor census examples") {
  auto h = morphisms::hanoi_alphabet();
  auto triples = factor_census(S_prefix(1 << 12), 3, true);
  std::vector<Word> expect{W(h, "a C b"), W(h, "a c B"), W(h, "A c b"), W(h, "a c b"), W(h, "A c B")};
  CHECK(triples.size() == 5);
  for (const auto& e : expect) CHECK(std::find(triples.begin(), triples.end(), e) != triples.end());

  auto l = morphisms::lazy_alphabet();
  std::vector<Word> eight{W(l, "a b a B"), W(l, "a b A B"), W(l, "a B A b"), W(l, "a B A B"),
                          W(l, "A b a b"), W(l, "A B a b"), W(l, "A B A b"), W(l, "A B A B")};
  auto quads = factor_census(H_prefix(6561), 4, true);
  CHECK_FALSE(quads.empty());
  for (const auto& q : quads) CHECK(std::find(eight.begin(), eight.end(), q) != eight.end());

  Word w = W(h, "b a b c");
  auto singles = factor_census(w, 1, false);
  CHECK(singles.size() == 3);
  CHECK(factor_census(w, 5, false).empty());
  CHECK(factor_census(w, 2, false).size() == 3);
  CHECK(factor_census(w, 2, true).size() == 2);
  CHECK(error_code([&] { factor_census(w, 0, false); }) == Errc::invalid_argument);
}

TEST_CASE("squarefree examples") {
  CHECK_FALSE(squarefree_check(S_prefix(10000), 5000));
  auto sq = squarefree_check(H_prefix(9), 4);
  REQUIRE(sq);
  CHECK(*sq == Square{5, 2});
  auto h = morphisms::hanoi_alphabet();
  CHECK(squarefree_check(W(h, "a a"), 1) == Square{0, 1});
  CHECK_FALSE(squarefree_check(W(h, "a b"), 1));
  CHECK_FALSE(squarefree_check(Word(h), 3));
  CHECK(error_code([&] { squarefree_check(W(h, "a"), 0); }) == Errc::invalid_argument);

  Word big = S_prefix(20000);
  CHECK(error_code([&] { squarefree_check(big, 100); }) == Errc::invalid_argument);
  CHECK_FALSE(squarefree_check(big, 64));
}

TEST_CASE("property: square scan matches brute force") {
  auto ab = make_alphabet({"x", "y", "z"});
  for (int trial = 0; trial < 2000; ++trial) {
    Word w = random_word(ab, 40);
    const std::size_t maxp = uniform(1, 20);
    std::optional<Square> expect;
    for (std::size_t pos = 0; pos < w.size() && !expect; ++pos)
      for (std::size_t p = 1; p <= maxp && pos + 2 * p <= w.size(); ++p)
        if (std::equal(w.symbols.begin() + pos, w.symbols.begin() + pos + p,
                       w.symbols.begin() + pos + p)) {
          expect = Square{pos, p};
          break;
        }
    CHECK(squarefree_check(w, maxp) == expect);
  }
}

TEST_CASE("property: prefix nesting and legality of S") {
  Word big = S_prefix((1 << 16) - 1);
  for (unsigned n = 1; n <= 16; ++n) {
    Word p = S_prefix((std::size_t{1} << n) - 1);
    CHECK(big.prefix(p.size()) == p);
  }
  CHECK(simulate(big, 16, Variant::classical()).legal());
}

TEST_CASE("property: bar involution") {
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = static_cast<unsigned>(uniform(1, 6));
    HanoiState s(n);
    const std::size_t walk = uniform(0, 60);
    for (std::size_t i = 0; i < walk; ++i) {
      Move m = kAllMoves[uniform(0, 5)];
      if (s.can_apply(m)) s.apply(m);
    }
    for (Move m : kAllMoves) {
      if (!s.can_apply(m)) continue;
      CHECK(apply_move(apply_move(s, m), bar(m)) == s);
    }
  }
}

TEST_CASE("word_to_moves accepts the cyclic move alphabet") {
  Word w = W(morphisms::cyclic_moves(), "a b c");
  CHECK(word_to_moves(w) == moves("a b c"));
  CHECK(error_code([] { word_to_moves(W(morphisms::binary(), "0")); }) == Errc::domain_mismatch);
}
