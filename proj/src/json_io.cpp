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

#include "hanoiseq/json_io.hpp"

#include "hanoiseq/error.hpp"

namespace hanoiseq::json {

json word_to_json(const Word& w) { return w.tokens(); }

json morphism_rules_to_json(const Morphism& m) {
  json rules = json::object();
  const auto& a = m.domain();
  for (Symbol s = 0; s < a->size(); ++s) rules[a->name(s)] = m.image_word(s).tokens();
  return rules;
}

json spec_to_json(const MorphicSpec& spec) {
  json doc;
  doc["alphabet"] = spec.alphabet()->names();
  doc["rules"] = morphism_rules_to_json(spec.morphism);
  doc["start"] = spec.alphabet()->name(spec.start);
  if (spec.coding) {
    json c = json::object();
    const auto& a = spec.alphabet();
    for (Symbol s = 0; s < a->size(); ++s)
      c[a->name(s)] = spec.coding->codomain()->name(spec.coding->map(s));
    doc["coding"] = c;
  }
  return doc;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse, "spec JSON: " + what); }

std::string as_symbol(const json& v) {
  if (!v.is_string()) bad("symbols must be strings");
  return v.get<std::string>();
}

}  // namespace

MorphicSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) bad("expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "alphabet" && it.key() != "rules" && it.key() != "start" && it.key() != "coding")
      bad("unknown key '" + it.key() + "'");
  if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) bad("'alphabet' must be an array");
  if (!doc.contains("rules") || !doc["rules"].is_object()) bad("'rules' must be an object");
  if (!doc.contains("start")) bad("missing 'start'");

  std::vector<std::string> names;
  for (const auto& v : doc["alphabet"]) names.push_back(as_symbol(v));
  AlphabetPtr a = make_alphabet(std::move(names));

  std::vector<std::vector<Symbol>> images(a->size());
  std::vector<bool> seen(a->size(), false);
  for (auto it = doc["rules"].begin(); it != doc["rules"].end(); ++it) {
    Symbol s = a->at(it.key());
    if (!it.value().is_array()) bad("rule images must be arrays of symbols");
    for (const auto& v : it.value()) images[s].push_back(a->at(as_symbol(v)));
    seen[s] = true;
  }
  for (Symbol s = 0; s < a->size(); ++s)
    if (!seen[s]) bad("no rule for symbol '" + a->name(s) + "'");

  Morphism m(a, a, std::move(images));
  Symbol start = a->at(as_symbol(doc["start"]));

  std::optional<Coding> coding;
  if (doc.contains("coding")) {
    const auto& c = doc["coding"];
    if (!c.is_object()) bad("'coding' must be an object");
    std::vector<std::string> out_names;
    std::vector<std::pair<std::string, std::string>> map;
    for (Symbol s = 0; s < a->size(); ++s) {
      if (!c.contains(a->name(s))) bad("coding misses symbol '" + a->name(s) + "'");
      std::string target = as_symbol(c[a->name(s)]);
      if (std::find(out_names.begin(), out_names.end(), target) == out_names.end())
        out_names.push_back(target);
      map.emplace_back(a->name(s), target);
    }
    if (c.size() != a->size()) bad("coding has symbols outside the alphabet");
    coding = Coding::from_map(a, make_alphabet(std::move(out_names)), map);
  }

  MorphicSpec spec{std::move(m), start, std::move(coding)};
  spec.validate();
  return spec;
}

MorphicSpec spec_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse, std::string("spec JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

json dfao_to_json(const Dfao& d) {
  json doc;
  const auto& st = d.states();
  doc["states"] = st->names();
  doc["radix"] = d.radix();
  doc["initial"] = st->name(d.initial());
  json delta = json::object();
  json out = json::object();
  for (Symbol s = 0; s < st->size(); ++s) {
    json row = json::array();
    for (unsigned k = 0; k < d.radix(); ++k) row.push_back(st->name(d.next(s, k)));
    delta[st->name(s)] = row;
    out[st->name(s)] = d.outputs()->name(d.output(s));
  }
  doc["transitions"] = delta;
  doc["output"] = out;
  return doc;
}

json kernel_to_json(const KernelReport& r) {
  json doc;
  doc["radix"] = r.radix;
  doc["depth"] = r.depth;
  doc["prefix_length"] = r.prefix_length;
  doc["class_count"] = r.class_count();
  json cls = json::array();
  for (const auto& c : r.classes) cls.push_back({{"exponent", c.exponent}, {"residue", c.residue}});
  doc["classes"] = cls;
  doc["consistent_up_to"] = r.consistent_up_to;
  doc["min_subsequence_length"] = r.min_subsequence_length;
  doc["insufficient_evidence"] = r.insufficient_evidence;
  doc["evidence"] = "finite prefix";
  return doc;
}

json moves_to_json(const std::vector<hanoi::Move>& moves) {
  json arr = json::array();
  for (auto m : moves) arr.push_back(std::string(hanoi::move_name(m)));
  return arr;
}

namespace {

json pegs_to_json(const hanoi::HanoiState& s) {
  json pegs = json::array();
  for (const auto& p : s.pegs()) pegs.push_back(p);
  return pegs;
}

}  // namespace

json trace_to_json(const hanoi::Trace& t) {
  json doc;
  doc["disks"] = t.disks;
  doc["variant"] = t.variant;
  doc["moves"] = moves_to_json(t.moves);
  json steps = json::array();
  for (std::size_t i = 0; i < t.moves.size(); ++i)
    steps.push_back({{"step", i + 1},
                     {"move", std::string(hanoi::move_name(t.moves[i]))},
                     {"legal", i < t.legal_steps}});
  doc["steps"] = steps;
  json events = json::array();
  for (const auto& e : t.events)
    events.push_back({{"step", e.step}, {"size", e.size}, {"peg", std::string(hanoi::peg_name(e.peg))}});
  doc["events"] = events;
  doc["initial_pegs"] = pegs_to_json(t.initial);
  doc["final_pegs"] = pegs_to_json(t.final_state);
  doc["legal"] = t.legal();
  if (t.error)
    doc["error"] = {{"step", t.error->step}, {"kind", errc_name(t.error->code)}, {"message", t.error->message}};
  return doc;
}

json int_sequence_to_json(const IntSequence& s) { return s.values; }

json construction_to_json(const Construction& k) {
  json doc = spec_to_json(k.output_spec());
  const auto& A = k.source.domain();
  doc["provenance"] = {
      {"source_rules", morphism_rules_to_json(k.source)},
      {"b", A->name(k.b)},
      {"c", A->name(k.c)},
      {"b_prime", k.output.domain()->name(k.b_prime)},
      {"c_prime", k.output.domain()->name(k.c_prime)},
      {"power", k.power},
      {"w1", word_to_json(k.w1)},
      {"w2", word_to_json(k.w2)},
      {"w3", word_to_json(k.w3)},
      {"z", word_to_json(k.z)},
      {"t", word_to_json(k.t)},
      {"block_length", k.block_length},
      {"alphabet_size", k.output.domain()->size()},
  };
  return doc;
}

json series_to_json(const algebra::Series& s) {
  return {{"q", s.modulus()}, {"order", s.order()}, {"coefficients", s.coeffs()}};
}

json relation_to_json(const algebra::Relation& r) {
  return {{"q", r.modulus()}, {"degree", r.degree()}, {"polynomials", r.polys()}};
}

algebra::Relation relation_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("polynomials"))
      throw Error(Errc::parse, "relation JSON needs 'polynomials'");
    std::uint32_t q = doc.value("q", 2u);
    return algebra::Relation(q, doc["polynomials"].get<std::vector<algebra::Poly>>());
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("relation JSON: ") + e.what());
  }
}

}  // namespace hanoiseq::json
