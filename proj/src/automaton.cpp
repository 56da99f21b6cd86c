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

#include "hanoiseq/automaton.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

#include "hanoiseq/error.hpp"

namespace hanoiseq {

Dfao::Dfao(AlphabetPtr states, AlphabetPtr outputs, unsigned radix, Symbol initial,
           std::vector<std::vector<Symbol>> delta, std::vector<Symbol> output)
    : states_(std::move(states)),
      outputs_(std::move(outputs)),
      radix_(radix),
      initial_(initial),
      delta_(std::move(delta)),
      output_(std::move(output)) {
  if (radix_ < 2) throw Error(Errc::validation, "DFAO radix must be at least 2");
  if (!states_->contains(initial_)) throw Error(Errc::validation, "initial state out of range");
  if (delta_.size() != states_->size() || output_.size() != states_->size())
    throw Error(Errc::validation, "DFAO tables do not match the state set");
  for (const auto& row : delta_) {
    if (row.size() != radix_) throw Error(Errc::validation, "DFAO transition table not total");
    for (Symbol t : row)
      if (!states_->contains(t)) throw Error(Errc::validation, "DFAO transition out of range");
  }
  for (Symbol o : output_)
    if (!outputs_->contains(o)) throw Error(Errc::validation, "DFAO output out of range");
}

Symbol Dfao::state_after(std::uint64_t n) const {
  std::array<unsigned, 64> digits{};
  std::size_t count = 0;
  for (; n > 0; n /= radix_) digits[count++] = static_cast<unsigned>(n % radix_);
  Symbol s = initial_;
  while (count > 0) s = delta_[s][digits[--count]];
  return s;
}

Dfao dfao_from_uniform_morphism(const MorphicSpec& spec) {
  spec.validate();
  const auto& m = spec.morphism;
  auto k = m.uniform_width();
  if (!k) throw Error(Errc::unsupported, "DFAO requires a uniform morphism");
  if (*k < 2) throw Error(Errc::unsupported, "DFAO requires a k-uniform morphism with k >= 2");

  const auto n = m.domain()->size();
  std::vector<std::vector<Symbol>> delta(n);
  std::vector<Symbol> output(n);
  for (Symbol s = 0; s < n; ++s) {
    auto img = m.image(s);
    delta[s].assign(img.begin(), img.end());
    output[s] = spec.coding ? spec.coding->map(s) : s;
  }
  return Dfao(m.domain(), spec.output_alphabet(), static_cast<unsigned>(*k), spec.start,
              std::move(delta), std::move(output));
}

Symbol dfao_eval(const Dfao& d, std::uint64_t n) { return d.eval(n); }

namespace {

struct SubsequenceView {
  std::span<const Symbol> seq;
  std::uint64_t step;
  std::uint64_t offset;

  std::size_t size() const {
    if (offset >= seq.size()) return 0;
    return static_cast<std::size_t>((seq.size() - 1 - offset) / step + 1);
  }
  Symbol operator[](std::size_t i) const { return seq[offset + i * step]; }
};

}  // namespace

KernelReport kernel_explore(std::span<const Symbol> prefix, unsigned radix, unsigned depth) {
  if (radix < 2) throw Error(Errc::invalid_argument, "kernel radix must be at least 2");
  if (prefix.empty()) throw Error(Errc::invalid_argument, "kernel exploration needs a non-empty prefix");

  KernelReport report;
  report.radix = radix;
  report.depth = depth;
  report.prefix_length = prefix.size();
  report.consistent_up_to = prefix.size();
  report.min_subsequence_length = prefix.size();

  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / radix;
  std::vector<std::uint64_t> powers{1};
  for (unsigned e = 0; e < depth; ++e) {
    if (powers.back() > limit) throw Error(Errc::invalid_argument, "kernel depth too large for radix");
    powers.push_back(powers.back() * radix);
  }

  auto view = [&](const KernelClass& c) {
    return SubsequenceView{prefix, powers[c.exponent], c.residue};
  };

  report.classes.push_back({0, 0});
  std::deque<std::size_t> pending{0};
  while (!pending.empty()) {
    const KernelClass parent = report.classes[pending.front()];
    pending.pop_front();
    if (parent.exponent >= depth) continue;

    for (unsigned j = 0; j < radix; ++j) {
      KernelClass child{parent.exponent + 1, parent.residue + j * powers[parent.exponent]};
      auto cv = view(child);
      report.min_subsequence_length = std::min(report.min_subsequence_length, cv.size());

      bool identified = false;
      for (const auto& rep : report.classes) {
        auto rv = view(rep);
        const std::size_t overlap = std::min(cv.size(), rv.size());
        bool equal = true;
        for (std::size_t i = 0; i < overlap && equal; ++i) equal = cv[i] == rv[i];
        if (equal) {
          report.consistent_up_to = std::min(report.consistent_up_to, overlap);
          identified = true;
          break;
        }
      }
      if (!identified) {
        report.classes.push_back(child);
        pending.push_back(report.classes.size() - 1);
      }
    }
  }

  report.insufficient_evidence = report.min_subsequence_length < kMinKernelEvidence ||
                                 report.consistent_up_to < kMinKernelEvidence;
  return report;
}

KernelReport kernel_explore(const Word& prefix, unsigned radix, unsigned depth) {
  return kernel_explore(std::span<const Symbol>(prefix.symbols), radix, depth);
}

}  // namespace hanoiseq
