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

// JSON encodings of the library's values.
//
// Morphic spec:
//   { "alphabet": ["a", ...], "rules": {"a": ["a", "C"], ...},
//     "start": "a", "coding": {"a": "1", ...} }          (coding optional)
//
// Symbols are always written by name; barred Hanoi letters are uppercase.

#include <json.hpp>

#include "hanoiseq/algebra.hpp"
#include "hanoiseq/automaton.hpp"
#include "hanoiseq/classic_seq.hpp"
#include "hanoiseq/hanoi.hpp"
#include "hanoiseq/nonuniform.hpp"
#include "hanoiseq/words.hpp"

namespace hanoiseq::json {

using nlohmann::json;

json word_to_json(const Word& w);
json morphism_rules_to_json(const Morphism& m);

json spec_to_json(const MorphicSpec& spec);
// Throws Errc::parse for malformed documents and Errc::validation for specs
// that are not prolongable or erasing.
MorphicSpec spec_from_json(const json& doc);
MorphicSpec spec_from_json_text(std::string_view text);

json dfao_to_json(const Dfao& d);
json kernel_to_json(const KernelReport& r);

json trace_to_json(const hanoi::Trace& t);
json moves_to_json(const std::vector<hanoi::Move>& moves);

json int_sequence_to_json(const IntSequence& s);

json construction_to_json(const Construction& k);

json series_to_json(const algebra::Series& s);
json relation_to_json(const algebra::Relation& r);
// { "q": 2, "polynomials": [[1], [1, 1], [0, 1, 1]] }
algebra::Relation relation_from_json(const json& doc);

}  // namespace hanoiseq::json
