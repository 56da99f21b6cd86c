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

#include "hanoiseq/hanoi.hpp"

#include <algorithm>
#include <deque>

#include "hanoiseq/catalog.hpp"

namespace hanoiseq::hanoi {

namespace {

constexpr std::array<Peg, 6> kSource{Peg::I, Peg::II, Peg::III, Peg::II, Peg::III, Peg::I};
constexpr std::array<Peg, 6> kTarget{Peg::II, Peg::III, Peg::I, Peg::I, Peg::II, Peg::III};
constexpr std::array<std::string_view, 6> kMoveNames{"a", "b", "c", "A", "B", "C"};

unsigned idx(Move m) { return static_cast<unsigned>(m); }
unsigned idx(Peg p) { return static_cast<unsigned>(p); }

}  // namespace

Peg source(Move m) noexcept { return kSource[idx(m)]; }
Peg target(Move m) noexcept { return kTarget[idx(m)]; }

Move bar(Move m) noexcept { return static_cast<Move>((idx(m) + 3) % 6); }

Move move_between(Peg from, Peg to) {
  for (Move m : kAllMoves)
    if (source(m) == from && target(m) == to) return m;
  throw Error(Errc::invalid_argument, "no move from a peg to itself");
}

std::string_view move_name(Move m) noexcept { return kMoveNames[idx(m)]; }

std::optional<Move> parse_move(std::string_view token) noexcept {
  for (Move m : kAllMoves)
    if (move_name(m) == token) return m;
  return std::nullopt;
}

std::string_view peg_name(Peg p) noexcept {
  switch (p) {
    case Peg::I: return "I";
    case Peg::II: return "II";
    case Peg::III: return "III";
  }
  return "?";
}

std::optional<Peg> parse_peg(std::string_view token) noexcept {
  if (token == "I" || token == "1") return Peg::I;
  if (token == "II" || token == "2") return Peg::II;
  if (token == "III" || token == "3") return Peg::III;
  return std::nullopt;
}

Word moves_to_word(const std::vector<Move>& moves) {
  Word w(morphisms::hanoi_alphabet());
  w.symbols.reserve(moves.size());
  for (Move m : moves) w.symbols.push_back(idx(m));
  return w;
}

std::vector<Move> word_to_moves(const Word& w) {
  // Translate through names so the cyclic {a,b,c} alphabet also works.
  std::vector<std::optional<Move>> table(w.alphabet ? w.alphabet->size() : 0);
  for (Symbol s = 0; s < table.size(); ++s) table[s] = parse_move(w.alphabet->name(s));
  std::vector<Move> out;
  out.reserve(w.size());
  for (Symbol s : w.symbols) {
    if (!table[s])
      throw Error(Errc::domain_mismatch, "'" + w.alphabet->name(s) + "' is not a Hanoi move");
    out.push_back(*table[s]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variant

Variant::Variant(std::string name, std::vector<Move> allowed) : name_(std::move(name)) {
  for (Move m : allowed) mask_ |= static_cast<std::uint8_t>(1u << idx(m));
  if (mask_ == 0) throw Error(Errc::validation, "a variant must allow at least one move");
}

Variant Variant::classical() { return Variant("classical", {kAllMoves.begin(), kAllMoves.end()}); }
Variant Variant::cyclic() { return Variant("cyclic", {Move::a, Move::b, Move::c}); }
Variant Variant::lazy() { return Variant("lazy", {Move::a, Move::b, Move::A, Move::B}); }

Variant Variant::by_name(std::string_view name) {
  if (name == "classical") return classical();
  if (name == "cyclic") return cyclic();
  if (name == "lazy") return lazy();
  throw Error(Errc::not_found,
              "unknown variant '" + std::string(name) + "'; available: classical cyclic lazy");
}

std::vector<Move> Variant::moves() const {
  std::vector<Move> out;
  for (Move m : kAllMoves)
    if (allows(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// HanoiState

HanoiState::HanoiState(unsigned disks, Peg start) : disks_(disks), where_(disks, start) {
  auto& p = pegs_[idx(start)];
  for (unsigned d = disks; d >= 1; --d) p.push_back(d);
}

HanoiState HanoiState::from_pegs(std::array<std::vector<unsigned>, 3> pegs) {
  HanoiState s;
  for (const auto& p : pegs) s.disks_ += static_cast<unsigned>(p.size());
  s.where_.assign(s.disks_, Peg::I);
  std::vector<bool> seen(s.disks_ + 1, false);
  for (unsigned k = 0; k < 3; ++k) {
    const auto& p = pegs[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      unsigned d = p[i];
      if (d < 1 || d > s.disks_ || seen[d])
        throw Error(Errc::validation, "each disk 1..N must appear exactly once");
      seen[d] = true;
      if (i > 0 && p[i - 1] < d)
        throw Error(Errc::validation, "a disk may not cover a smaller one");
      s.where_[d - 1] = static_cast<Peg>(k);
    }
  }
  s.pegs_ = std::move(pegs);
  return s;
}

std::optional<unsigned> HanoiState::top(Peg p) const {
  const auto& v = peg(p);
  if (v.empty()) return std::nullopt;
  return v.back();
}

bool HanoiState::can_apply(Move m) const noexcept {
  const auto& from = pegs_[idx(source(m))];
  const auto& to = pegs_[idx(target(m))];
  return !from.empty() && (to.empty() || from.back() < to.back());
}

void HanoiState::apply(Move m) {
  auto& from = pegs_[idx(source(m))];
  auto& to = pegs_[idx(target(m))];
  if (from.empty())
    throw Error(Errc::empty_source, "move " + std::string(move_name(m)) + ": peg " +
                                        std::string(peg_name(source(m))) + " is empty");
  if (!to.empty() && to.back() < from.back())
    throw Error(Errc::larger_onto_smaller,
                "move " + std::string(move_name(m)) + ": disk " + std::to_string(from.back()) +
                    " cannot cover disk " + std::to_string(to.back()));
  unsigned d = from.back();
  from.pop_back();
  to.push_back(d);
  where_[d - 1] = target(m);
}

HanoiState apply_move(HanoiState s, Move m) {
  s.apply(m);
  return s;
}

// ---------------------------------------------------------------------------
// Simulation

std::optional<CompletionEvent> Trace::event_for(unsigned size) const {
  for (const auto& e : events)
    if (e.size == size) return e;
  return std::nullopt;
}

Trace simulate(const std::vector<Move>& moves, unsigned disks, const Variant& variant) {
  for (std::size_t i = 0; i < moves.size(); ++i)
    if (!variant.allows(moves[i]))
      throw Error(Errc::variant_violation,
                  "move " + std::string(move_name(moves[i])) + " at step " +
                      std::to_string(i + 1) + " is not allowed in the " + variant.name() +
                      " variant");

  Trace t;
  t.disks = disks;
  t.variant = variant.name();
  t.initial = HanoiState(disks);
  t.moves = moves;
  HanoiState s = t.initial;
  std::vector<bool> seen(disks + 1, false);

  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      s.apply(moves[i]);
    } catch (const Error& e) {
      t.error = TraceError{i + 1, e.code(), std::string("step ") + std::to_string(i + 1) + ": " + e.what()};
      break;
    }
    ++t.legal_steps;

    // Disks 1..n all on disk 1's peg means they form its top n layers.
    const Peg p = s.position(1);
    if (p == Peg::I) continue;
    for (unsigned n = 1; n <= disks && s.position(n) == p; ++n)
      if (!seen[n]) {
        seen[n] = true;
        t.events.push_back({i + 1, n, p});
      }
  }
  t.final_state = s;
  return t;
}

Trace simulate(const Word& moves, unsigned disks, const Variant& variant) {
  return simulate(word_to_moves(moves), disks, variant);
}

Peg classical_target(unsigned disks) noexcept { return disks % 2 ? Peg::II : Peg::III; }

ClassicalCheck verify_classical_prefix(unsigned disks) {
  if (disks < 1) throw Error(Errc::invalid_argument, "need at least one disk");
  if (disks > 40) throw Error(Errc::invalid_argument, "too many disks");
  ClassicalCheck r;
  const std::size_t len = (std::size_t{1} << disks) - 1;
  r.moves = len;
  const Peg goal = classical_target(disks);
  Trace t = simulate(iterate_fixed_point(catalog_lookup("classical-hanoi"), len), disks,
                     Variant::classical());
  if (!t.legal()) {
    r.detail = t.error->message;
    return r;
  }
  for (Peg p : {Peg::I, Peg::II, Peg::III})
    if (t.final_state.all_on(p)) r.final_peg = p;
  auto ev = t.event_for(disks);
  if (r.final_peg != goal || !t.final_state.all_on(goal)) {
    r.detail = "tower not reconstructed on peg " + std::string(peg_name(goal));
    return r;
  }
  if (!ev || ev->step != len || ev->peg != goal) {
    r.detail = "no completion event at step " + std::to_string(len);
    return r;
  }
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------
// Breadth-first search over the 3^N configurations. Digit d-1 (base 3) of a
// state code is the peg of disk d.

BfsResult bfs_optimal(const Variant& variant, unsigned disks, Peg from, Peg to) {
  if (disks > kMaxBfsDisks)
    throw Error(Errc::invalid_argument,
                "BFS supports at most " + std::to_string(kMaxBfsDisks) + " disks");
  BfsResult r;
  if (disks == 0) return r;
  if (from == to) throw Error(Errc::invalid_argument, "source and target pegs must differ");

  std::vector<std::uint32_t> pow3(disks + 1, 1);
  for (unsigned i = 1; i <= disks; ++i) pow3[i] = pow3[i - 1] * 3;
  const std::uint32_t total = pow3[disks];
  auto all_on = [&](Peg p) {
    std::uint32_t c = 0;
    for (unsigned i = 0; i < disks; ++i) c += idx(p) * pow3[i];
    return c;
  };
  const std::uint32_t start = all_on(from);
  const std::uint32_t goal = all_on(to);

  constexpr std::uint8_t kUnseen = 0xff;
  constexpr std::uint8_t kRoot = 0xfe;
  std::vector<std::uint8_t> via(total, kUnseen);
  const auto allowed = variant.moves();

  // Top disk (0-based) of each peg, or `disks` for an empty peg.
  auto tops = [&](std::uint32_t code) {
    std::array<unsigned, 3> t{disks, disks, disks};
    for (unsigned d = 0; d < disks; ++d, code /= 3) {
      unsigned p = code % 3;
      if (t[p] == disks) t[p] = d;
    }
    return t;
  };

  std::deque<std::uint32_t> queue{start};
  via[start] = kRoot;
  bool found = start == goal;
  while (!queue.empty() && !found) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    ++r.states_explored;
    const auto t = tops(cur);
    for (Move m : allowed) {
      const unsigned s = idx(source(m)), g = idx(target(m));
      const unsigned d = t[s];
      if (d == disks || t[g] < d) continue;
      const std::uint32_t next = cur - s * pow3[d] + g * pow3[d];
      if (via[next] != kUnseen) continue;
      via[next] = static_cast<std::uint8_t>(idx(m));
      if (next == goal) {
        found = true;
        break;
      }
      queue.push_back(next);
    }
  }
  if (!found)
    throw Error(Errc::unreachable, "target configuration unreachable in the " +
                                       variant.name() + " variant");

  // Walk back: undo the recorded move by moving the top disk of its target
  // peg back to its source.
  for (std::uint32_t cur = goal; via[cur] != kRoot;) {
    const Move m = static_cast<Move>(via[cur]);
    r.witness.push_back(m);
    const unsigned d = tops(cur)[idx(target(m))];
    cur = cur - idx(target(m)) * pow3[d] + idx(source(m)) * pow3[d];
  }
  std::reverse(r.witness.begin(), r.witness.end());
  r.length = r.witness.size();
  return r;
}

// ---------------------------------------------------------------------------

const MorphicSpec& morphic_moves(const Variant& v) {
  if (v.name() == "classical") return catalog_lookup("classical-hanoi");
  if (v.name() == "cyclic") return catalog_lookup("cyclic-hanoi");
  if (v.name() == "lazy") return catalog_lookup("lazy-hanoi");
  throw Error(Errc::not_found, "no morphic move sequence for variant '" + v.name() + "'");
}

MorphicSolution check_morphic_solution(const Variant& v, const MorphicSpec& moves,
                                       unsigned disks) {
  if (disks < 1 || disks > kMaxBfsDisks)
    throw Error(Errc::invalid_argument, "disk count out of range");
  MorphicSolution r;
  r.disks = disks;
  PrefixGenerator gen(moves);

  // Any transfer of N disks takes fewer than 3^N moves.
  std::size_t cap = 1;
  for (unsigned i = 0; i < disks; ++i) cap *= 3;
  std::size_t len = std::min<std::size_t>(cap, 64);
  for (;;) {
    Trace t = simulate(gen.prefix(len), disks, v);
    r.event = t.event_for(disks);
    if (r.event || !t.legal() || len >= cap) {
      if (!r.event) {
        r.legal = t.legal();
        return r;
      }
      break;
    }
    len = std::min(cap, 2 * len);
  }

  Word prefix = gen.prefix(r.event->step);
  r.moves = word_to_moves(prefix);
  r.legal = simulate(r.moves, disks, v).legal();
  r.optimal = bfs_optimal(v, disks, Peg::I, r.event->peg).length;
  r.ok = r.legal && r.event->step == r.optimal;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Move> olive_solve(unsigned disks, Peg target_peg) {
  if (disks < 1) throw Error(Errc::invalid_argument, "need at least one disk");
  if (disks > 30) throw Error(Errc::invalid_argument, "too many disks");
  if (target_peg == Peg::I) throw Error(Errc::invalid_argument, "target must be peg II or III");

  const bool odd = disks % 2 == 1;
  const bool forward = (target_peg == Peg::II) == odd;  // I -> II -> III -> I
  auto step_of = [&](Peg p) {
    return static_cast<Peg>((idx(p) + (forward ? 1 : 2)) % 3);
  };

  HanoiState s(disks);
  const std::size_t total = (std::size_t{1} << disks) - 1;
  std::vector<Move> out;
  out.reserve(total);
  for (std::size_t i = 1; i <= total; ++i) {
    Move m;
    if (i % 2 == 1) {
      const Peg p = s.position(1);
      m = move_between(p, step_of(p));
    } else {
      const Peg small = s.position(1);
      const Peg x = static_cast<Peg>((idx(small) + 1) % 3);
      const Peg y = static_cast<Peg>((idx(small) + 2) % 3);
      auto tx = s.top(x), ty = s.top(y);
      m = (tx && (!ty || *tx < *ty)) ? move_between(x, y) : move_between(y, x);
    }
    s.apply(m);
    out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::set<std::vector<Symbol>> factor_census(std::span<const Symbol> w, std::size_t width,
                                            bool aligned) {
  if (width < 1) throw Error(Errc::invalid_argument, "census width must be at least 1");
  std::set<std::vector<Symbol>> out;
  if (width > w.size()) return out;
  const std::size_t stride = aligned ? width : 1;
  for (std::size_t i = 0; i + width <= w.size(); i += stride)
    out.emplace(w.begin() + i, w.begin() + i + width);
  return out;
}

std::vector<Word> factor_census(const Word& w, std::size_t width, bool aligned) {
  std::vector<Word> out;
  for (auto& block : factor_census(std::span<const Symbol>(w.symbols), width, aligned))
    out.emplace_back(w.alphabet, block);
  return out;
}

std::optional<Square> squarefree_check(std::span<const Symbol> w, std::size_t max_period) {
  if (max_period < 1) throw Error(Errc::invalid_argument, "max period must be at least 1");
  const std::size_t n = w.size();
  const std::size_t periods = std::min(max_period, n / 2);
  if (n > kCappedSquareScanLimit)
    throw Error(Errc::invalid_argument, "square scan limited to 10^6 symbols");
  if (n > kFullSquareScanLimit && periods > kCappedSquarePeriod)
    throw Error(Errc::invalid_argument,
                "inputs over 10^4 symbols need max period <= 64");

  // For period p, a square starts at i when w[j] == w[j+p] for the p
  // consecutive j = i..i+p-1; track the current run of matches.
  std::optional<Square> best;
  for (std::size_t p = 1; p <= periods; ++p) {
    std::size_t run = 0;
    const std::size_t stop = best ? std::min(n - p, best->position + 2 * p) : n - p;
    for (std::size_t j = 0; j < stop; ++j) {
      run = w[j] == w[j + p] ? run + 1 : 0;
      if (run == p) {
        Square sq{j + 1 - p, p};
        if (!best || sq.position < best->position) best = sq;
        break;
      }
    }
  }
  return best;
}

std::optional<Square> squarefree_check(const Word& w, std::size_t max_period) {
  return squarefree_check(std::span<const Symbol>(w.symbols), max_period);
}

}  // namespace hanoiseq::hanoi
