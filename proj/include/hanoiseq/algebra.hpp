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

// Truncated power series over a prime field F_q and polynomial relations
// A_0(X) + A_1(X) F + ... + A_d(X) F^d = 0 between them.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hanoiseq/words.hpp"

namespace hanoiseq::algebra {

using Coeff = std::uint32_t;
using Poly = std::vector<Coeff>;  // c_0 + c_1 X + ...

bool is_prime(std::uint32_t q) noexcept;

class Series {
 public:
  // Throws Errc::invalid_argument for a non-prime modulus.
  Series(std::uint32_t q, std::vector<Coeff> coeffs);
  static Series zero(std::uint32_t q, std::size_t order);
  static Series one(std::uint32_t q, std::size_t order);

  std::uint32_t modulus() const noexcept { return q_; }
  std::size_t order() const noexcept { return c_.size(); }  // known mod X^order
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const noexcept;
  // Index of the first non-zero coefficient.
  std::optional<std::size_t> first_nonzero() const noexcept;

  Series truncated(std::size_t order) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  // Truncated convolution.
  friend Series operator*(const Series& a, const Series& b);
  Series times(const Poly& p) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::uint32_t q_;
  std::vector<Coeff> c_;
};

// Field value of each symbol: its decimal name when it has one, otherwise its
// index in the alphabet.
Coeff symbol_value(const Alphabet& a, Symbol s);

// c_i = value(seq[i]) mod q for i < order. Throws Errc::invalid_argument when
// the word is shorter than `order` or q is not prime.
Series series_from_sequence(const Word& seq, std::uint32_t q, std::size_t order);
Series series_from_sequence(const Word& seq, std::uint32_t q, std::size_t order,
                            const std::function<Coeff(Symbol)>& value);

class Relation {
 public:
  // Trailing zero polynomials are dropped; throws Errc::validation when all
  // polynomials are zero.
  Relation(std::uint32_t q, std::vector<Poly> polys);

  std::uint32_t modulus() const noexcept { return q_; }
  std::size_t degree() const noexcept { return p_.size() - 1; }
  const std::vector<Poly>& polys() const noexcept { return p_; }
  const Poly& coefficient(std::size_t i) const { return p_[i]; }

  // Scaled so the first non-zero coefficient (lowest F-power, then lowest
  // X-power) is 1.
  Relation normalized() const;
  bool proportional_to(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::uint32_t q_;
  std::vector<Poly> p_;
};

// X(1+X) F^2 + (1+X) F + 1 over F_2.
Relation period_doubling_relation();

// Σ A_i(X) f^i mod X^order. Throws Errc::modulus_mismatch.
Series evaluate_relation(const Relation& rel, const Series& f);

inline constexpr std::size_t kRelationSafetyMargin = 32;

// Searches for A_0..A_dmax of degree <= coeff_degree with Σ A_i f^i ≡ 0 mod
// X^order. Returns the lexicographically first vector of the reduced
// null-space basis, or nullopt when the null space is trivial (evidence only,
// not a proof of transcendence). Requires order > (dmax+1)(coeff_degree+1) +
// 32, else Errc::insufficient_truncation.
std::optional<Relation> find_algebraic_relation(const Series& f, unsigned dmax,
                                                unsigned coeff_degree, std::size_t order);

// Reduced row echelon form over F_q and a basis of the null space, one vector
// per free column.
std::vector<std::vector<Coeff>> null_space(std::vector<std::vector<Coeff>> rows,
                                           std::size_t columns, std::uint32_t q);

}  // namespace hanoiseq::algebra
