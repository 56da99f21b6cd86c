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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hanoiseq/words.hpp"

namespace hanoiseq {

// Deterministic finite automaton with output reading base-k digits
// most-significant first. States are the symbols of the source morphism.
class Dfao {
 public:
  Dfao(AlphabetPtr states, AlphabetPtr outputs, unsigned radix, Symbol initial,
       std::vector<std::vector<Symbol>> delta, std::vector<Symbol> output);

  const AlphabetPtr& states() const noexcept { return states_; }
  const AlphabetPtr& outputs() const noexcept { return outputs_; }
  unsigned radix() const noexcept { return radix_; }
  Symbol initial() const noexcept { return initial_; }
  Symbol next(Symbol state, unsigned digit) const { return delta_[state][digit]; }
  Symbol output(Symbol state) const { return output_[state]; }

  // Reads the digits of n (no leading zeros); n = 0 reads nothing.
  Symbol state_after(std::uint64_t n) const;
  Symbol eval(std::uint64_t n) const { return output_[state_after(n)]; }

 private:
  AlphabetPtr states_;
  AlphabetPtr outputs_;
  unsigned radix_;
  Symbol initial_;
  std::vector<std::vector<Symbol>> delta_;
  std::vector<Symbol> output_;
};

// δ(s, d) is the d-th letter of the image of s. Throws Errc::unsupported for
// non-uniform or 1-uniform morphisms.
Dfao dfao_from_uniform_morphism(const MorphicSpec& spec);
Symbol dfao_eval(const Dfao& d, std::uint64_t n);

struct KernelClass {
  unsigned exponent;       // e
  std::uint64_t residue;   // r, representing n -> a(k^e n + r)
};

struct KernelReport {
  unsigned radix = 2;
  unsigned depth = 0;
  std::size_t prefix_length = 0;
  std::vector<KernelClass> classes;
  // Smallest overlap on which two subsequences were compared and declared
  // equal (prefix_length when nothing was identified).
  std::size_t consistent_up_to = 0;
  // Shortest subsequence the exploration had to look at.
  std::size_t min_subsequence_length = 0;
  bool insufficient_evidence = false;

  std::size_t class_count() const noexcept { return classes.size(); }
};

// Subsequences shorter than this are too short to tell classes apart.
inline constexpr std::size_t kMinKernelEvidence = 8;

// Explores {n -> a(k^e n + r)} for e <= depth on a finite prefix. Equality of
// two subsequences is checked on their full common length within the prefix;
// the report is evidence, not proof.
KernelReport kernel_explore(std::span<const Symbol> prefix, unsigned radix, unsigned depth);
KernelReport kernel_explore(const Word& prefix, unsigned radix, unsigned depth);

}  // namespace hanoiseq
