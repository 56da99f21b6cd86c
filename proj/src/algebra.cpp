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

#include "hanoiseq/algebra.hpp"

#include <algorithm>
#include <charconv>

#include "hanoiseq/error.hpp"

namespace hanoiseq::algebra {

namespace {

Coeff add_mod(Coeff a, Coeff b, std::uint32_t q) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Coeff>(s >= q ? s - q : s);
}

Coeff sub_mod(Coeff a, Coeff b, std::uint32_t q) { return a >= b ? a - b : a + q - b; }

Coeff mul_mod(Coeff a, Coeff b, std::uint32_t q) {
  return static_cast<Coeff>(std::uint64_t{a} * b % q);
}

Coeff pow_mod(Coeff a, std::uint64_t e, std::uint32_t q) {
  Coeff r = 1 % q;
  for (; e; e >>= 1, a = mul_mod(a, a, q))
    if (e & 1) r = mul_mod(r, a, q);
  return r;
}

Coeff inv_mod(Coeff a, std::uint32_t q) { return pow_mod(a, q - 2, q); }

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw Error(Errc::invalid_argument, std::to_string(q) + " is not prime");
}

void require_same_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw Error(Errc::modulus_mismatch, "series over different fields");
}

}  // namespace

bool is_prime(std::uint32_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Series

Series::Series(std::uint32_t q, std::vector<Coeff> coeffs) : q_(q), c_(std::move(coeffs)) {
  require_prime(q_);
  for (auto& x : c_) x %= q_;
}

Series Series::zero(std::uint32_t q, std::size_t order) { return Series(q, std::vector<Coeff>(order, 0)); }

Series Series::one(std::uint32_t q, std::size_t order) {
  std::vector<Coeff> c(order, 0);
  if (order) c[0] = 1;
  return Series(q, std::move(c));
}

bool Series::is_zero() const noexcept { return !first_nonzero(); }

std::optional<std::size_t> Series::first_nonzero() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return i;
  return std::nullopt;
}

Series Series::truncated(std::size_t order) const {
  std::vector<Coeff> c(c_.begin(), c_.begin() + std::min(order, c_.size()));
  return Series(q_, std::move(c));
}

Series operator+(const Series& a, const Series& b) {
  require_same_modulus(a.q_, b.q_);
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Coeff> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = add_mod(a.c_[i], b.c_[i], a.q_);
  return Series(a.q_, std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  require_same_modulus(a.q_, b.q_);
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Coeff> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = sub_mod(a.c_[i], b.c_[i], a.q_);
  return Series(a.q_, std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  require_same_modulus(a.q_, b.q_);
  const std::size_t n = std::min(a.order(), b.order());
  const std::uint32_t q = a.q_;
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Coeff x = a.c_[i];
    if (!x) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.c_[j]) acc[i + j] = (acc[i + j] + std::uint64_t{x} * b.c_[j]) % q;
  }
  std::vector<Coeff> c(acc.begin(), acc.end());
  return Series(q, std::move(c));
}

Series Series::times(const Poly& p) const {
  std::vector<std::uint64_t> acc(c_.size(), 0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Coeff x = p[j] % q_;
    if (!x) continue;
    for (std::size_t i = 0; i + j < c_.size(); ++i)
      acc[i + j] = (acc[i + j] + std::uint64_t{x} * c_[i]) % q_;
  }
  return Series(q_, std::vector<Coeff>(acc.begin(), acc.end()));
}

Coeff symbol_value(const Alphabet& a, Symbol s) {
  const std::string& name = a.name(s);
  Coeff v = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec == std::errc() && ptr == name.data() + name.size()) return v;
  return s;
}

Series series_from_sequence(const Word& seq, std::uint32_t q, std::size_t order) {
  const Alphabet& a = *seq.alphabet;
  return series_from_sequence(seq, q, order, [&](Symbol s) { return symbol_value(a, s); });
}

Series series_from_sequence(const Word& seq, std::uint32_t q, std::size_t order,
                            const std::function<Coeff(Symbol)>& value) {
  require_prime(q);
  if (seq.size() < order)
    throw Error(Errc::invalid_argument, "sequence shorter than the truncation order");
  std::vector<Coeff> c(order);
  for (std::size_t i = 0; i < order; ++i) c[i] = value(seq[i]) % q;
  return Series(q, std::move(c));
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::uint32_t q, std::vector<Poly> polys) : q_(q), p_(std::move(polys)) {
  require_prime(q_);
  for (auto& p : p_) {
    for (auto& x : p) x %= q_;
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  while (!p_.empty() && p_.back().empty()) p_.pop_back();
  if (p_.empty()) throw Error(Errc::validation, "relation has no non-zero coefficient");
}

Relation Relation::normalized() const {
  Coeff lead = 0;
  for (const auto& p : p_) {
    for (Coeff x : p)
      if (x) {
        lead = x;
        break;
      }
    if (lead) break;
  }
  const Coeff s = inv_mod(lead, q_);
  std::vector<Poly> out = p_;
  for (auto& p : out)
    for (auto& x : p) x = mul_mod(x, s, q_);
  return Relation(q_, std::move(out));
}

bool Relation::proportional_to(const Relation& other) const {
  return q_ == other.q_ && normalized() == other.normalized();
}

Relation period_doubling_relation() { return Relation(2, {{1}, {1, 1}, {0, 1, 1}}); }

Series evaluate_relation(const Relation& rel, const Series& f) {
  require_same_modulus(rel.modulus(), f.modulus());
  const std::size_t n = f.order();
  Series power = Series::one(f.modulus(), n);
  Series total = Series::zero(f.modulus(), n);
  for (std::size_t i = 0; i <= rel.degree(); ++i) {
    if (i > 0) power = power * f;
    if (!rel.coefficient(i).empty()) total = total + power.times(rel.coefficient(i));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Null space

std::vector<std::vector<Coeff>> null_space(std::vector<std::vector<Coeff>> rows,
                                           std::size_t columns, std::uint32_t q) {
  require_prime(q);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Coeff inv = inv_mod(rows[r][col], q);
    for (auto& x : rows[r]) x = mul_mod(x, inv, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Coeff f = rows[i][col];
      for (std::size_t j = 0; j < columns; ++j)
        rows[i][j] = sub_mod(rows[i][j], mul_mod(f, rows[r][j], q), q);
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(columns, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = sub_mod(0, rows[k][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Relation> find_algebraic_relation(const Series& f, unsigned dmax,
                                                unsigned coeff_degree, std::size_t order) {
  const std::size_t width = coeff_degree + 1;
  const std::size_t unknowns = (std::size_t{dmax} + 1) * width;
  if (order <= unknowns + kRelationSafetyMargin)
    throw Error(Errc::insufficient_truncation,
                "truncation order " + std::to_string(order) + " must exceed " +
                    std::to_string(unknowns + kRelationSafetyMargin));
  if (f.order() < order)
    throw Error(Errc::insufficient_truncation, "series known to fewer terms than the requested order");

  const std::uint32_t q = f.modulus();
  const Series g = f.truncated(order);
  std::vector<Series> powers{Series::one(q, order)};
  for (unsigned i = 1; i <= dmax; ++i) powers.push_back(powers.back() * g);

  // Unknown (i, j) is the X^j coefficient of A_i, at column i*width + j.
  // Row n collects the X^n coefficient of Σ A_i f^i.
  std::vector<std::vector<Coeff>> rows(order, std::vector<Coeff>(unknowns, 0));
  for (std::size_t n = 0; n < order; ++n)
    for (unsigned i = 0; i <= dmax; ++i)
      for (std::size_t j = 0; j < width && j <= n; ++j)
        rows[n][i * width + j] = powers[i][n - j];

  auto basis = null_space(std::move(rows), unknowns, q);
  if (basis.empty()) return std::nullopt;
  const auto& v = *std::min_element(basis.begin(), basis.end());
  std::vector<Poly> polys(dmax + 1);
  for (unsigned i = 0; i <= dmax; ++i)
    polys[i].assign(v.begin() + i * width, v.begin() + (i + 1) * width);
  return Relation(q, std::move(polys));
}

}  // namespace hanoiseq::algebra
