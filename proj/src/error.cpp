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

#include "hanoiseq/error.hpp"

namespace hanoiseq {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse: return "parse";
    case Errc::not_found: return "not-found";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::validation: return "validation";
    case Errc::unsupported: return "unsupported";
    case Errc::empty_source: return "empty-source";
    case Errc::larger_onto_smaller: return "larger-onto-smaller";
    case Errc::variant_violation: return "variant-violation";
    case Errc::unreachable: return "unreachable";
    case Errc::non_convergent: return "non-convergent";
    case Errc::construction_failure: return "construction-failure";
    case Errc::insufficient_truncation: return "insufficient-truncation";
    case Errc::modulus_mismatch: return "modulus-mismatch";
  }
  return "unknown";
}

}  // namespace hanoiseq
