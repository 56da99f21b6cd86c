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

// Three-peg Tower of Hanoi semantics for every move-restricted variant.
//
//   a: I -> II    b: II -> III    c: III -> I
//   A: II -> I    B: III -> II    C: I -> III     (uppercase = barred)

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanoiseq/error.hpp"
#include "hanoiseq/words.hpp"

namespace hanoiseq::hanoi {

enum class Peg : std::uint8_t { I = 0, II = 1, III = 2 };

enum class Move : std::uint8_t { a = 0, b, c, A, B, C };

inline constexpr std::array<Move, 6> kAllMoves{Move::a, Move::b, Move::c,
                                               Move::A, Move::B, Move::C};

Peg source(Move m) noexcept;
Peg target(Move m) noexcept;
Move bar(Move m) noexcept;
// The move taking the top disk from `from` to `to` (from != to).
Move move_between(Peg from, Peg to);

std::string_view move_name(Move m) noexcept;
std::optional<Move> parse_move(std::string_view token) noexcept;
std::string_view peg_name(Peg p) noexcept;
// Accepts "I", "II", "III" and "1", "2", "3".
std::optional<Peg> parse_peg(std::string_view token) noexcept;

// Word over the six-letter Hanoi alphabet for a move list, and back. Any
// alphabet whose symbol names are move names can be read.
Word moves_to_word(const std::vector<Move>& moves);
std::vector<Move> word_to_moves(const Word& w);

class Variant {
 public:
  Variant(std::string name, std::vector<Move> allowed);

  static Variant classical();  // all six moves
  static Variant cyclic();     // a b c
  static Variant lazy();       // a A b B
  // Throws Errc::not_found for other names.
  static Variant by_name(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  bool allows(Move m) const noexcept { return (mask_ >> static_cast<unsigned>(m)) & 1u; }
  // Allowed moves in the canonical order a < b < c < A < B < C.
  std::vector<Move> moves() const;

 private:
  std::string name_;
  std::uint8_t mask_ = 0;
};

class HanoiState {
 public:
  // Standard start: disks 1..N on `start`.
  explicit HanoiState(unsigned disks, Peg start = Peg::I);
  // Pegs listed bottom-to-top, e.g. {{2,1},{},{}}; validated.
  static HanoiState from_pegs(std::array<std::vector<unsigned>, 3> pegs);

  unsigned disks() const noexcept { return disks_; }
  const std::vector<unsigned>& peg(Peg p) const { return pegs_[static_cast<unsigned>(p)]; }
  const std::array<std::vector<unsigned>, 3>& pegs() const noexcept { return pegs_; }
  std::optional<unsigned> top(Peg p) const;
  Peg position(unsigned disk) const { return where_[disk - 1]; }

  bool can_apply(Move m) const noexcept;
  // Throws Errc::empty_source or Errc::larger_onto_smaller.
  void apply(Move m);
  bool all_on(Peg p) const { return peg(p).size() == disks_; }

  friend bool operator==(const HanoiState& x, const HanoiState& y) { return x.pegs_ == y.pegs_; }

 private:
  HanoiState() = default;
  unsigned disks_ = 0;
  std::array<std::vector<unsigned>, 3> pegs_;
  std::vector<Peg> where_;
};

HanoiState apply_move(HanoiState s, Move m);

struct CompletionEvent {
  std::size_t step;   // 1-based index of the move after which the event holds
  unsigned size;      // sub-tower {1..size}
  Peg peg;

  friend bool operator==(const CompletionEvent&, const CompletionEvent&) = default;
};

struct TraceError {
  std::size_t step;   // 1-based index of the offending move
  Errc code;
  std::string message;
};

struct Trace {
  unsigned disks = 0;
  std::string variant;
  HanoiState initial{0};
  std::vector<Move> moves;
  std::size_t legal_steps = 0;   // moves applied before an error (all, if none)
  std::vector<CompletionEvent> events;
  HanoiState final_state{0};
  std::optional<TraceError> error;

  bool legal() const noexcept { return !error; }
  // First event for the given sub-tower size, if any.
  std::optional<CompletionEvent> event_for(unsigned size) const;
};

// Runs the moves from all disks on peg I. Illegal moves stop the run and are
// recorded in the trace; moves outside the variant throw
// Errc::variant_violation before anything is simulated.
Trace simulate(const std::vector<Move>& moves, unsigned disks, const Variant& variant);
Trace simulate(const Word& moves, unsigned disks, const Variant& variant);

// Final peg for the smallest N disks in the classical sequence.
Peg classical_target(unsigned disks) noexcept;

struct ClassicalCheck {
  bool ok = false;
  std::size_t moves = 0;
  Peg final_peg = Peg::I;
  std::string detail;
};

ClassicalCheck verify_classical_prefix(unsigned disks);

struct BfsResult {
  std::size_t length = 0;
  std::vector<Move> witness;
  std::size_t states_explored = 0;
};

inline constexpr unsigned kMaxBfsDisks = 16;

// Shortest transfer of the whole tower from `from` to `to`. The witness is
// the first path found when moves are tried in the order a b c A B C.
BfsResult bfs_optimal(const Variant& variant, unsigned disks, Peg from, Peg to);

// Catalog spec whose fixed point is the move sequence of a named variant.
const MorphicSpec& morphic_moves(const Variant& v);

struct MorphicSolution {
  unsigned disks = 0;
  std::optional<CompletionEvent> event;  // first rebuild of {1..disks}
  std::size_t optimal = 0;               // BFS length from I to the event peg
  std::vector<Move> moves;               // prefix up to the event
  bool legal = false;
  bool ok = false;                       // event found, legal, and optimal
};

// Plays the morphic move sequence with `disks` disks until the whole tower
// first stands on a peg other than I, then compares with BFS.
MorphicSolution check_morphic_solution(const Variant& v, const MorphicSpec& moves,
                                       unsigned disks);

// Alternating algorithm: odd steps move disk 1 around the pegs, even steps
// make the only legal move that leaves disk 1 alone.
std::vector<Move> olive_solve(unsigned disks, Peg target);

// Distinct length-`width` blocks of w; aligned blocks start at multiples of
// width.
std::set<std::vector<Symbol>> factor_census(std::span<const Symbol> w, std::size_t width,
                                            bool aligned);
std::vector<Word> factor_census(const Word& w, std::size_t width, bool aligned);

struct Square {
  std::size_t position;
  std::size_t period;
  friend bool operator==(const Square&, const Square&) = default;
};

inline constexpr std::size_t kFullSquareScanLimit = 10'000;
inline constexpr std::size_t kCappedSquareScanLimit = 1'000'000;
inline constexpr std::size_t kCappedSquarePeriod = 64;

// Earliest square ww with |w| <= max_period: smallest position, then
// smallest period. Inputs longer than 10^4 need max_period <= 64, and
// inputs longer than 10^6 are rejected.
std::optional<Square> squarefree_check(std::span<const Symbol> w, std::size_t max_period);
std::optional<Square> squarefree_check(const Word& w, std::size_t max_period);

}  // namespace hanoiseq::hanoi
