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

#include "hanoiseq/hanoiseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hanoiseq/algebra.hpp"
#include "hanoiseq/automaton.hpp"
#include "hanoiseq/catalog.hpp"
#include "hanoiseq/classic_seq.hpp"
#include "hanoiseq/error.hpp"
#include "hanoiseq/hanoi.hpp"
#include "hanoiseq/json_io.hpp"
#include "hanoiseq/nonuniform.hpp"
#include "hanoiseq/toeplitz.hpp"
#include "hanoiseq/words.hpp"

struct hseq_spec {
  hanoiseq::MorphicSpec spec;
};

struct hseq_dfao {
  hanoiseq::Dfao dfao;
};

namespace {

using namespace hanoiseq;
using Json = nlohmann::json;
namespace io = hanoiseq::json;

thread_local std::string g_last_error;

hseq_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return HSEQ_ERR_INVALID_ARGUMENT;
    case Errc::parse: return HSEQ_ERR_PARSE;
    case Errc::not_found: return HSEQ_ERR_NOT_FOUND;
    case Errc::domain_mismatch: return HSEQ_ERR_DOMAIN_MISMATCH;
    case Errc::validation: return HSEQ_ERR_VALIDATION;
    case Errc::unsupported: return HSEQ_ERR_UNSUPPORTED;
    case Errc::empty_source:
    case Errc::larger_onto_smaller: return HSEQ_ERR_ILLEGAL_MOVE;
    case Errc::variant_violation: return HSEQ_ERR_VARIANT_VIOLATION;
    case Errc::unreachable: return HSEQ_ERR_UNREACHABLE;
    case Errc::non_convergent: return HSEQ_ERR_NON_CONVERGENT;
    case Errc::construction_failure: return HSEQ_ERR_CONSTRUCTION_FAILURE;
    case Errc::insufficient_truncation: return HSEQ_ERR_INSUFFICIENT_TRUNCATION;
    case Errc::modulus_mismatch: return HSEQ_ERR_MODULUS_MISMATCH;
  }
  return HSEQ_ERR_INTERNAL;
}

hseq_status fail(hseq_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
hseq_status guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HSEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HSEQ_ERR_INTERNAL, e.what());
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(Errc::invalid_argument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, hseq_format format, const std::string& text, const Json& doc) {
  *out = dup(format == HSEQ_FORMAT_JSON ? doc.dump(2) : text);
}

hanoi::Peg peg_from_int(int p) {
  require(p >= 1 && p <= 3, "pegs are numbered 1..3");
  return static_cast<hanoi::Peg>(p - 1);
}

std::string peg_str(hanoi::Peg p) { return std::string(hanoi::peg_name(p)); }

std::string moves_str(const std::vector<hanoi::Move>& moves) {
  std::string s;
  for (auto m : moves) {
    if (!s.empty()) s += ' ';
    s += hanoi::move_name(m);
  }
  return s;
}

std::vector<hanoi::Move> parse_moves(const char* text) {
  std::vector<hanoi::Move> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    auto m = hanoi::parse_move(tok);
    if (!m) throw Error(Errc::parse, "'" + tok + "' is not a Hanoi move");
    out.push_back(*m);
    tok.clear();
  };
  for (const char* p = text; *p; ++p) {
    if (*p == ' ' || *p == '\t' || *p == '\n' || *p == ',') flush();
    else tok += *p;
  }
  flush();
  return out;
}

std::string pegs_str(const hanoi::HanoiState& s) {
  std::string out;
  for (auto p : {hanoi::Peg::I, hanoi::Peg::II, hanoi::Peg::III}) {
    if (!out.empty()) out += ' ';
    out += peg_str(p) + "=[";
    bool first = true;
    for (unsigned d : s.peg(p)) {
      if (!first) out += ' ';
      out += std::to_string(d);
      first = false;
    }
    out += ']';
  }
  return out;
}

std::string poly_str(const algebra::Poly& p) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!p[j]) continue;
    if (!s.empty()) s += " + ";
    std::string mono = j == 0 ? "" : (j == 1 ? "X" : "X^" + std::to_string(j));
    if (p[j] != 1 || j == 0) s += std::to_string(p[j]);
    s += mono;
  }
  return s.empty() ? "0" : s;
}

std::string relation_str(const algebra::Relation& r) {
  std::string s;
  for (std::size_t i = 0; i <= r.degree(); ++i) {
    if (r.coefficient(i).empty()) continue;
    if (!s.empty()) s += " + ";
    std::string f = i == 0 ? "" : (i == 1 ? "F" : "F^" + std::to_string(i));
    std::string c = poly_str(r.coefficient(i));
    if (f.empty()) s += c;
    else if (c == "1") s += f;
    else s += "(" + c + ")" + f;
  }
  return s + " = 0 (mod " + std::to_string(r.modulus()) + ")";
}

}  // namespace

extern "C" {

const char* hseq_version(void) { return "1.0.0"; }

const char* hseq_status_string(hseq_status status) {
  switch (status) {
    case HSEQ_OK: return "ok";
    case HSEQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HSEQ_ERR_PARSE: return "parse";
    case HSEQ_ERR_NOT_FOUND: return "not-found";
    case HSEQ_ERR_DOMAIN_MISMATCH: return "domain-mismatch";
    case HSEQ_ERR_VALIDATION: return "validation";
    case HSEQ_ERR_UNSUPPORTED: return "unsupported";
    case HSEQ_ERR_ILLEGAL_MOVE: return "illegal-move";
    case HSEQ_ERR_VARIANT_VIOLATION: return "variant-violation";
    case HSEQ_ERR_UNREACHABLE: return "unreachable";
    case HSEQ_ERR_NON_CONVERGENT: return "non-convergent";
    case HSEQ_ERR_CONSTRUCTION_FAILURE: return "construction-failure";
    case HSEQ_ERR_INSUFFICIENT_TRUNCATION: return "insufficient-truncation";
    case HSEQ_ERR_MODULUS_MISMATCH: return "modulus-mismatch";
    case HSEQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hseq_last_error(void) { return g_last_error.c_str(); }

void hseq_string_free(char* s) { std::free(s); }

// ---- sequences -------------------------------------------------------------

hseq_status hseq_catalog_names(char** out) {
  return guard([&] {
    require(out, "null output");
    std::string s;
    for (const auto& n : Catalog::builtin().names()) s += n + "\n";
    *out = dup(s);
    return HSEQ_OK;
  });
}

hseq_status hseq_spec_lookup(const char* name, hseq_spec** out) {
  return guard([&] {
    require(name && out, "null argument");
    *out = new hseq_spec{catalog_lookup(name)};
    return HSEQ_OK;
  });
}

hseq_status hseq_spec_from_json(const char* text, hseq_spec** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new hseq_spec{io::spec_from_json_text(text)};
    return HSEQ_OK;
  });
}

hseq_status hseq_spec_to_json(const hseq_spec* spec, char** out) {
  return guard([&] {
    require(spec && out, "null argument");
    *out = dup(io::spec_to_json(spec->spec).dump(2));
    return HSEQ_OK;
  });
}

void hseq_spec_free(hseq_spec* spec) { delete spec; }

hseq_status hseq_spec_uniform_width(const hseq_spec* spec, size_t* width) {
  return guard([&] {
    require(spec && width, "null argument");
    *width = spec->spec.morphism.uniform_width().value_or(0);
    return HSEQ_OK;
  });
}

hseq_status hseq_spec_generate(const hseq_spec* spec, size_t length, hseq_format format,
                               char** out) {
  return guard([&] {
    require(spec && out, "null argument");
    Word w = iterate_fixed_point(spec->spec, length);
    emit(out, format, w.str(), io::word_to_json(w));
    return HSEQ_OK;
  });
}

hseq_status hseq_fixed_point_equal(const hseq_spec* a, const hseq_spec* b, size_t length,
                                   int* equal) {
  return guard([&] {
    require(a && b && equal, "null argument");
    *equal = verify_fixed_point_equality(a->spec, b->spec, length) ? 1 : 0;
    return HSEQ_OK;
  });
}

// ---- automata ----------------------------------------------------------------

hseq_status hseq_dfao_create(const hseq_spec* spec, hseq_dfao** out) {
  return guard([&] {
    require(spec && out, "null argument");
    *out = new hseq_dfao{dfao_from_uniform_morphism(spec->spec)};
    return HSEQ_OK;
  });
}

void hseq_dfao_free(hseq_dfao* dfao) { delete dfao; }

hseq_status hseq_dfao_eval(const hseq_dfao* dfao, uint64_t n, char** symbol) {
  return guard([&] {
    require(dfao && symbol, "null argument");
    *symbol = dup(dfao->dfao.outputs()->name(dfao_eval(dfao->dfao, n)));
    return HSEQ_OK;
  });
}

hseq_status hseq_dfao_to_json(const hseq_dfao* dfao, char** out) {
  return guard([&] {
    require(dfao && out, "null argument");
    *out = dup(io::dfao_to_json(dfao->dfao).dump(2));
    return HSEQ_OK;
  });
}

hseq_status hseq_dfao_check(const hseq_dfao* dfao, const hseq_spec* spec, uint64_t count,
                            int* ok, uint64_t* first_mismatch) {
  return guard([&] {
    require(dfao && spec && ok, "null argument");
    Word w = iterate_fixed_point(spec->spec, count);
    const auto& outs = *dfao->dfao.outputs();
    const auto& names = *w.alphabet;
    for (uint64_t n = 0; n < count; ++n) {
      if (outs.name(dfao_eval(dfao->dfao, n)) != names.name(w[n])) {
        *ok = 0;
        if (first_mismatch) *first_mismatch = n;
        return HSEQ_OK;
      }
    }
    *ok = 1;
    if (first_mismatch) *first_mismatch = count;
    return HSEQ_OK;
  });
}

hseq_status hseq_kernel(const hseq_spec* spec, size_t prefix_length, unsigned radix,
                        unsigned depth, hseq_format format, char** out) {
  return guard([&] {
    require(spec && out, "null argument");
    Word w = iterate_fixed_point(spec->spec, prefix_length);
    KernelReport r = kernel_explore(w, radix, depth);
    std::string text = "classes " + std::to_string(r.class_count()) + "\n";
    for (const auto& c : r.classes)
      text += "  n -> a(" + std::to_string(radix) + "^" + std::to_string(c.exponent) +
              " n + " + std::to_string(c.residue) + ")\n";
    text += "evidence: finite prefix of " + std::to_string(r.prefix_length) +
            " terms, shortest comparison " + std::to_string(r.min_subsequence_length);
    if (r.insufficient_evidence) text += " (insufficient evidence)";
    emit(out, format, text, io::kernel_to_json(r));
    return HSEQ_OK;
  });
}

// ---- Tower of Hanoi ----------------------------------------------------------

hseq_status hseq_hanoi_simulate(const char* moves, unsigned disks, const char* variant,
                                hseq_format format, char** out, int* legal) {
  return guard([&] {
    require(moves && variant && out, "null argument");
    require(disks >= 1, "at least one disk");
    hanoi::Trace t = hanoi::simulate(parse_moves(moves), disks, hanoi::Variant::by_name(variant));
    std::string text = "moves " + std::to_string(t.moves.size()) + ", legal " +
                       std::to_string(t.legal_steps) + "\n";
    for (const auto& e : t.events)
      text += "event step " + std::to_string(e.step) + ": disks 1.." + std::to_string(e.size) +
              " on " + peg_str(e.peg) + "\n";
    if (t.error) text += "error " + t.error->message + "\n";
    text += "final " + pegs_str(t.final_state);
    emit(out, format, text, io::trace_to_json(t));
    if (legal) *legal = t.legal() ? 1 : 0;
    return HSEQ_OK;
  });
}

hseq_status hseq_hanoi_verify(unsigned disks, hseq_format format, char** out, int* ok) {
  return guard([&] {
    require(out, "null argument");
    hanoi::ClassicalCheck c = hanoi::verify_classical_prefix(disks);
    std::string text = "disks " + std::to_string(disks) + ": " + std::to_string(c.moves) +
                       " moves, final peg " + peg_str(c.final_peg) + ", " +
                       (c.ok ? "ok" : "FAILED");
    if (!c.detail.empty()) text += " (" + c.detail + ")";
    Json doc{{"disks", disks},
             {"moves", c.moves},
             {"final_peg", peg_str(c.final_peg)},
             {"expected_peg", peg_str(hanoi::classical_target(disks))},
             {"ok", c.ok},
             {"detail", c.detail}};
    emit(out, format, text, doc);
    if (ok) *ok = c.ok ? 1 : 0;
    return HSEQ_OK;
  });
}

hseq_status hseq_hanoi_bfs(const char* variant, unsigned disks, int source, int target,
                           hseq_format format, char** out, size_t* length) {
  return guard([&] {
    require(variant && out, "null argument");
    auto v = hanoi::Variant::by_name(variant);
    hanoi::BfsResult r = hanoi::bfs_optimal(v, disks, peg_from_int(source), peg_from_int(target));
    std::string text = "length " + std::to_string(r.length) + "\nmoves " + moves_str(r.witness);
    Json doc{{"variant", v.name()},
             {"disks", disks},
             {"source", peg_str(peg_from_int(source))},
             {"target", peg_str(peg_from_int(target))},
             {"length", r.length},
             {"states_explored", r.states_explored},
             {"moves", io::moves_to_json(r.witness)}};
    emit(out, format, text, doc);
    if (length) *length = r.length;
    return HSEQ_OK;
  });
}

hseq_status hseq_hanoi_solve(const char* variant, unsigned disks, int target, int olive,
                             hseq_format format, char** out) {
  return guard([&] {
    require(variant && out, "null argument");
    auto v = hanoi::Variant::by_name(variant);
    const hanoi::Peg to = peg_from_int(target);
    require(to != hanoi::Peg::I, "target must be peg 2 or 3");
    std::vector<hanoi::Move> moves;
    std::string method;
    if (olive) {
      if (v.name() != "classical")
        throw Error(Errc::unsupported, "the alternating algorithm is for the classical variant");
      moves = hanoi::olive_solve(disks, to);
      method = "olive";
    } else {
      auto sol = hanoi::check_morphic_solution(v, hanoi::morphic_moves(v), disks);
      if (sol.event && sol.legal && sol.event->peg == to) {
        moves = std::move(sol.moves);
        method = "morphic";
      } else {
        moves = hanoi::bfs_optimal(v, disks, hanoi::Peg::I, to).witness;
        method = "bfs";
      }
    }
    Json doc{{"variant", v.name()},
             {"disks", disks},
             {"target", peg_str(to)},
             {"method", method},
             {"length", moves.size()},
             {"moves", io::moves_to_json(moves)}};
    emit(out, format, moves_str(moves), doc);
    return HSEQ_OK;
  });
}

hseq_status hseq_hanoi_check_morphic(const char* variant, unsigned max_disks,
                                     hseq_format format, char** out, int* ok) {
  return guard([&] {
    require(variant && out, "null argument");
    require(max_disks >= 1, "at least one disk");
    auto v = hanoi::Variant::by_name(variant);
    const MorphicSpec& spec = hanoi::morphic_moves(v);
    bool all = true;
    std::string text;
    Json rows = Json::array();
    for (unsigned n = 1; n <= max_disks; ++n) {
      auto s = hanoi::check_morphic_solution(v, spec, n);
      all = all && s.ok;
      text += "disks " + std::to_string(n) + ": ";
      Json row{{"disks", n}, {"legal", s.legal}, {"optimal", s.optimal}, {"ok", s.ok}};
      if (s.event) {
        text += "step " + std::to_string(s.event->step) + " on " + peg_str(s.event->peg) +
                ", optimal " + std::to_string(s.optimal);
        row["step"] = s.event->step;
        row["peg"] = peg_str(s.event->peg);
      } else {
        text += "no completion";
      }
      text += s.ok ? ", ok\n" : ", FAILED\n";
      rows.push_back(row);
    }
    if (!text.empty()) text.pop_back();
    emit(out, format, text, Json{{"variant", v.name()}, {"results", rows}, {"ok", all}});
    if (ok) *ok = all ? 1 : 0;
    return HSEQ_OK;
  });
}

hseq_status hseq_census(const hseq_spec* spec, size_t prefix_length, size_t width, int aligned,
                        hseq_format format, char** out) {
  return guard([&] {
    require(spec && out, "null argument");
    Word w = iterate_fixed_point(spec->spec, prefix_length);
    auto factors = hanoi::factor_census(w, width, aligned != 0);
    std::string text;
    Json arr = Json::array();
    for (const auto& f : factors) {
      text += f.str() + "\n";
      arr.push_back(io::word_to_json(f));
    }
    if (!text.empty()) text.pop_back();
    emit(out, format, text,
         Json{{"width", width}, {"aligned", aligned != 0}, {"count", factors.size()}, {"factors", arr}});
    return HSEQ_OK;
  });
}

hseq_status hseq_squarefree(const hseq_spec* spec, size_t length, size_t max_period,
                            hseq_format format, char** out, int* found) {
  return guard([&] {
    require(spec && out, "null argument");
    Word w = iterate_fixed_point(spec->spec, length);
    auto sq = hanoi::squarefree_check(w, max_period);
    std::string text;
    Json doc{{"length", length}, {"max_period", max_period}, {"squarefree", !sq}};
    if (sq) {
      text = "square at position " + std::to_string(sq->position) + ", period " +
             std::to_string(sq->period) + ": " +
             Word(w.alphabet, {w.symbols.begin() + sq->position,
                               w.symbols.begin() + sq->position + 2 * sq->period})
                 .str();
      doc["position"] = sq->position;
      doc["period"] = sq->period;
    } else {
      text = "no square with period <= " + std::to_string(max_period) + " in " +
             std::to_string(length) + " symbols";
    }
    emit(out, format, text, doc);
    if (found) *found = sq ? 1 : 0;
    return HSEQ_OK;
  });
}

// ---- Toeplitz ----------------------------------------------------------------

hseq_status hseq_toeplitz_expand(const char* pattern, size_t length, hseq_format format,
                                 char** out) {
  return guard([&] {
    require(pattern && out, "null argument");
    Word w = toeplitz_expand(ToeplitzSpec::parse(pattern), length);
    emit(out, format, w.str(), io::word_to_json(w));
    return HSEQ_OK;
  });
}

// ---- derived sequences -------------------------------------------------------

hseq_status hseq_derive(const char* kind, size_t length, hseq_format format, char** out) {
  return guard([&] {
    require(kind && out, "null argument");
    const std::string k = kind;
    auto s_prefix = [&] { return iterate_fixed_point(catalog_lookup("classical-hanoi"), length); };
    if (k == "T") {
      Word t = derive_T(s_prefix());
      emit(out, format, t.str(), io::word_to_json(t));
    } else if (k == "U") {
      IntSequence u = derive_U(s_prefix());
      emit(out, format, u.str(), io::int_sequence_to_json(u));
    } else if (k == "V") {
      Word v = derive_V(derive_U(s_prefix()));
      emit(out, format, v.str(), io::word_to_json(v));
    } else if (k == "Z") {
      // Gaps hold at most two 1s, so 4 * length + 4 terms give enough of them.
      IntSequence z = derive_Z(iterate_fixed_point(catalog_lookup("thue-morse"), 4 * length + 4));
      z.values.resize(std::min(z.values.size(), length));
      emit(out, format, z.str(), io::int_sequence_to_json(z));
    } else {
      throw Error(Errc::invalid_argument, "unknown derived sequence '" + k + "' (T, U, V or Z)");
    }
    return HSEQ_OK;
  });
}

hseq_status hseq_doublefree(unsigned n, uint64_t* out) {
  return guard([&] {
    require(out, "null argument");
    *out = doublefree_oracle(n);
    return HSEQ_OK;
  });
}

// ---- non-uniform construction ------------------------------------------------

hseq_status hseq_construct_nonuniform(const hseq_spec* spec, size_t validate_length,
                                      hseq_format format, char** out, int* valid) {
  return guard([&] {
    require(spec && out, "null argument");
    Construction k = construct_nonuniform(spec->spec.morphism, spec->spec.start);
    Json doc = io::construction_to_json(k);

    const auto& A = k.output.domain();
    std::string text;
    for (Symbol s = 0; s < A->size(); ++s)
      text += A->name(s) + " -> " + k.output.image_word(s).str() + "\n";
    text += "coding:";
    for (Symbol s = 0; s < A->size(); ++s)
      text += " " + A->name(s) + "=" + k.coding.codomain()->name(k.coding.map(s));
    text += "\nstart " + A->name(k.start) + ", power " + std::to_string(k.power) + ", b " +
            k.source.domain()->name(k.b) + ", c " + k.source.domain()->name(k.c) +
            ", alphabet size " + std::to_string(A->size());

    int ok = 1;
    if (validate_length > 0) {
      ConstructionCheck chk = validate_construction(k, validate_length);
      ok = chk.ok ? 1 : 0;
      doc["validation"] = {{"length", validate_length}, {"ok", chk.ok}, {"diagnostic", chk.diagnostic}};
      text += "\nvalidation on " + std::to_string(validate_length) + " symbols: " +
              (chk.ok ? std::string("ok") : "FAILED: " + chk.diagnostic);
    }
    emit(out, format, text, doc);
    if (valid) *valid = ok;
    return HSEQ_OK;
  });
}

// ---- power series --------------------------------------------------------------

hseq_status hseq_christol_verify(const hseq_spec* spec, const char* relation_json, unsigned q,
                                 size_t order, hseq_format format, char** out, int* zero) {
  return guard([&] {
    require(spec && out, "null argument");
    algebra::Relation rel = algebra::period_doubling_relation();
    if (relation_json) {
      Json doc;
      try {
        doc = Json::parse(relation_json);
      } catch (const Json::parse_error& e) {
        throw Error(Errc::parse, std::string("relation JSON: ") + e.what());
      }
      rel = io::relation_from_json(doc);
    }
    Word w = iterate_fixed_point(spec->spec, order);
    algebra::Series f = algebra::series_from_sequence(w, q, order);
    algebra::Series res = algebra::evaluate_relation(rel, f);
    auto nz = res.first_nonzero();
    std::string text = relation_str(rel) + "\nresidue mod X^" + std::to_string(order) + ": " +
                       (nz ? "non-zero at X^" + std::to_string(*nz) : std::string("zero"));
    Json doc{{"relation", io::relation_to_json(rel)}, {"order", order}, {"zero", !nz}};
    if (nz) doc["first_nonzero"] = *nz;
    emit(out, format, text, doc);
    if (zero) *zero = nz ? 0 : 1;
    return HSEQ_OK;
  });
}

hseq_status hseq_christol_search(const hseq_spec* spec, unsigned q, unsigned dmax,
                                 unsigned coeff_degree, size_t order, hseq_format format,
                                 char** out, int* found) {
  return guard([&] {
    require(spec && out, "null argument");
    Word w = iterate_fixed_point(spec->spec, order);
    algebra::Series f = algebra::series_from_sequence(w, q, order);
    auto rel = algebra::find_algebraic_relation(f, dmax, coeff_degree, order);
    Json doc{{"q", q}, {"dmax", dmax}, {"coeff_degree", coeff_degree}, {"order", order},
             {"found", rel.has_value()}};
    std::string text;
    if (rel) {
      doc["relation"] = io::relation_to_json(*rel);
      text = relation_str(*rel);
    } else {
      text = "no relation of degree <= " + std::to_string(dmax) + " with coefficients of degree <= " +
             std::to_string(coeff_degree);
    }
    emit(out, format, text, doc);
    if (found) *found = rel ? 1 : 0;
    return HSEQ_OK;
  });
}

}  // extern "C"
