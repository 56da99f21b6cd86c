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

// hanoiseq command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 a checked property is false, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hanoiseq/hanoiseq.h"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Failure {
  hseq_status status;
  std::string message;
};

int exit_code(hseq_status s) {
  switch (s) {
    case HSEQ_OK: return kOk;
    case HSEQ_ERR_CONSTRUCTION_FAILURE:
    case HSEQ_ERR_UNREACHABLE:
    case HSEQ_ERR_INTERNAL: return kCheckFailed;
    default: return kUsage;
  }
}

void check(hseq_status s) {
  if (s != HSEQ_OK) throw Failure{s, hseq_last_error()};
}

class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { hseq_string_free(p_); }
  char** out() {
    hseq_string_free(p_);
    p_ = nullptr;
    return &p_;
  }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

class Spec {
 public:
  Spec(const Spec&) = delete;
  Spec& operator=(const Spec&) = delete;
  ~Spec() { hseq_spec_free(p_); }

  // A catalog name, or a path to a JSON spec file.
  explicit Spec(const std::string& ref) {
    std::ifstream in(ref);
    if (ref.ends_with(".json") || (in && ref.find('/') != std::string::npos)) {
      if (!in) throw Failure{HSEQ_ERR_INVALID_ARGUMENT, "cannot read '" + ref + "'"};
      std::stringstream ss;
      ss << in.rdbuf();
      check(hseq_spec_from_json(ss.str().c_str(), &p_));
    } else {
      check(hseq_spec_lookup(ref.c_str(), &p_));
    }
  }
  const hseq_spec* get() const { return p_; }

 private:
  hseq_spec* p_ = nullptr;
};

int parse_peg(const std::string& s) {
  if (s == "I" || s == "1") return 1;
  if (s == "II" || s == "2") return 2;
  if (s == "III" || s == "3") return 3;
  throw Failure{HSEQ_ERR_INVALID_ARGUMENT, "unknown peg '" + s + "' (I, II, III or 1, 2, 3)"};
}

void print(const CString& s) { std::cout << s.str() << '\n'; }

struct Options {
  bool json = false;
  hseq_format format() const { return json ? HSEQ_FORMAT_JSON : HSEQ_FORMAT_TEXT; }

  std::string seq, other, variant = "classical", pattern, compare, kind, relation;
  std::string target, from = "I", to;
  std::size_t length = 0, width = 3, max_period = 0, validate = 0, order = 0;
  std::uint64_t index = 0, check_count = 0;
  unsigned disks = 0, radix = 2, depth = 4, n = 0, q = 2, dmax = 2, coeff_degree = 2;
  bool aligned = false, olive = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphic sequences and Tower of Hanoi tools"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto* generate = app.add_subcommand("generate", "prefix of a fixed point");
  generate->add_option("seq", o.seq, "catalog name or JSON spec file")->required();
  generate->add_option("--length,-n", o.length, "number of symbols")->required();

  auto* list = app.add_subcommand("list", "catalog names");

  auto* hanoi = app.add_subcommand("hanoi", "Tower of Hanoi");
  hanoi->require_subcommand(1);
  auto* solve = hanoi->add_subcommand("solve", "move sequence transferring the tower");
  solve->add_option("--variant", o.variant, "classical, cyclic or lazy");
  solve->add_option("--disks", o.disks)->required();
  solve->add_option("--target", o.target, "II or III")->required();
  solve->add_flag("--olive", o.olive, "alternating algorithm (classical)");
  auto* verify = hanoi->add_subcommand("verify", "check the classical move sequence");
  verify->add_option("--disks", o.disks)->required();
  auto* bfs = hanoi->add_subcommand("bfs", "shortest transfer by breadth-first search");
  bfs->add_option("--variant", o.variant);
  bfs->add_option("--disks", o.disks)->required();
  bfs->add_option("--from", o.from, "source peg (default I)");
  bfs->add_option("--to", o.to, "target peg (default II for odd N, III for even N)");
  auto* simulate = hanoi->add_subcommand("simulate", "play a move sequence");
  simulate->add_option("--moves", o.pattern, "moves, e.g. \"a C b\"")->required();
  simulate->add_option("--disks", o.disks)->required();
  simulate->add_option("--variant", o.variant);
  auto* morphic = hanoi->add_subcommand("check-morphic",
                                        "check a variant's sequence is optimal for 1..N disks");
  morphic->add_option("--variant", o.variant);
  morphic->add_option("--disks", o.disks)->required();

  auto* toeplitz = app.add_subcommand("toeplitz", "expand a Toeplitz pattern");
  toeplitz->add_option("--pattern", o.pattern, "tokens, '.' for a hole")->required();
  toeplitz->add_option("--length", o.length)->required();
  toeplitz->add_option("--compare", o.compare, "catalog sequence to compare against");

  auto* census = app.add_subcommand("census", "distinct factors of a prefix");
  census->add_option("--seq", o.seq)->required();
  census->add_option("--width", o.width)->required();
  census->add_flag("--aligned", o.aligned, "only factors at multiples of the width");
  census->add_option("--length", o.length, "prefix length (default 10000)");

  auto* squarefree = app.add_subcommand("squarefree", "search a prefix for a square");
  squarefree->add_option("--seq", o.seq)->required();
  squarefree->add_option("--length", o.length)->required();
  squarefree->add_option("--max-period", o.max_period, "default: whole prefix, 64 above 10^4");

  auto* kernel = app.add_subcommand("kernel", "k-kernel classes on a prefix");
  kernel->add_option("--seq", o.seq)->required();
  kernel->add_option("--radix", o.radix)->required();
  kernel->add_option("--depth", o.depth)->required();
  kernel->add_option("--length", o.length, "prefix length (default 4096)");

  auto* construct = app.add_subcommand("construct-nonuniform",
                                       "non-uniform morphism with the same coded fixed point");
  construct->add_option("--seq", o.seq)->required();
  construct->add_option("--validate", o.validate, "validate on this many symbols");

  auto* christol = app.add_subcommand("christol", "algebraic relations over F_q");
  christol->require_subcommand(1);
  auto* cverify = christol->add_subcommand("verify", "evaluate a relation on the series");
  cverify->add_option("--seq", o.seq, "default period-doubling");
  cverify->add_option("--relation", o.relation, "JSON {\"q\":2,\"polynomials\":[[..],..]}");
  cverify->add_option("--q", o.q);
  cverify->add_option("--order", o.order)->required();
  auto* csearch = christol->add_subcommand("search", "look for a relation");
  csearch->add_option("--seq", o.seq, "default period-doubling");
  csearch->add_option("--q", o.q);
  csearch->add_option("--dmax", o.dmax);
  csearch->add_option("--coeff-degree", o.coeff_degree);
  csearch->add_option("--order", o.order)->required();

  auto* eval = app.add_subcommand("eval", "evaluate the automaton of a uniform sequence");
  eval->add_option("--seq", o.seq)->required();
  eval->add_option("--index", o.index)->required();
  eval->add_option("--check", o.check_count, "also compare with the prefix for n < COUNT");

  auto* derive = app.add_subcommand("derive", "derived sequences T, U, V, Z");
  derive->add_option("kind", o.kind, "T, U, V or Z")->required();
  derive->add_option("--length", o.length, "input terms")->required();

  auto* doublefree = app.add_subcommand("doublefree", "largest double-free subset count");
  doublefree->add_option("--n", o.n)->required();

  auto* equal = app.add_subcommand("fixed-point-equal", "compare two coded fixed points");
  equal->add_option("--seq", o.seq)->required();
  equal->add_option("--other", o.other)->required();
  equal->add_option("--length", o.length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "hanoiseq: " << e.what() << '\n';
    return kUsage;
  }

  const hseq_format fmt = o.format();
  try {
    CString out;
    if (*generate) {
      Spec s(o.seq);
      check(hseq_spec_generate(s.get(), o.length, fmt, out.out()));
      print(out);
      return kOk;
    }
    if (*list) {
      check(hseq_catalog_names(out.out()));
      std::cout << out.str();
      return kOk;
    }
    if (*solve) {
      check(hseq_hanoi_solve(o.variant.c_str(), o.disks, parse_peg(o.target), o.olive ? 1 : 0,
                             fmt, out.out()));
      print(out);
      return kOk;
    }
    if (*verify) {
      int ok = 0;
      check(hseq_hanoi_verify(o.disks, fmt, out.out(), &ok));
      print(out);
      return ok ? kOk : kCheckFailed;
    }
    if (*bfs) {
      int to = o.to.empty() ? (o.disks % 2 ? 2 : 3) : parse_peg(o.to);
      check(hseq_hanoi_bfs(o.variant.c_str(), o.disks, parse_peg(o.from), to, fmt, out.out(),
                           nullptr));
      print(out);
      return kOk;
    }
    if (*simulate) {
      int legal = 0;
      check(hseq_hanoi_simulate(o.pattern.c_str(), o.disks, o.variant.c_str(), fmt, out.out(),
                                &legal));
      print(out);
      return legal ? kOk : kCheckFailed;
    }
    if (*morphic) {
      int ok = 0;
      check(hseq_hanoi_check_morphic(o.variant.c_str(), o.disks, fmt, out.out(), &ok));
      print(out);
      return ok ? kOk : kCheckFailed;
    }
    if (*toeplitz) {
      check(hseq_toeplitz_expand(o.pattern.c_str(), o.length, fmt, out.out()));
      print(out);
      if (o.compare.empty()) return kOk;
      Spec s(o.compare);
      CString text, ref;
      check(hseq_toeplitz_expand(o.pattern.c_str(), o.length, HSEQ_FORMAT_TEXT, text.out()));
      check(hseq_spec_generate(s.get(), o.length, HSEQ_FORMAT_TEXT, ref.out()));
      const bool same = text.str() == ref.str();
      std::cerr << (same ? "equal to " : "differs from ") << o.compare << " on " << o.length
                << " symbols\n";
      return same ? kOk : kCheckFailed;
    }
    if (*census) {
      Spec s(o.seq);
      check(hseq_census(s.get(), o.length ? o.length : 10000, o.width, o.aligned ? 1 : 0, fmt,
                        out.out()));
      print(out);
      return kOk;
    }
    if (*squarefree) {
      Spec s(o.seq);
      std::size_t p = o.max_period ? o.max_period : (o.length > 10000 ? 64 : o.length / 2 + 1);
      int found = 0;
      check(hseq_squarefree(s.get(), o.length, p, fmt, out.out(), &found));
      print(out);
      return found ? kCheckFailed : kOk;
    }
    if (*kernel) {
      Spec s(o.seq);
      check(hseq_kernel(s.get(), o.length ? o.length : 4096, o.radix, o.depth, fmt, out.out()));
      print(out);
      return kOk;
    }
    if (*construct) {
      Spec s(o.seq);
      int valid = 1;
      check(hseq_construct_nonuniform(s.get(), o.validate, fmt, out.out(), &valid));
      print(out);
      return valid ? kOk : kCheckFailed;
    }
    if (*cverify) {
      Spec s(o.seq.empty() ? "period-doubling" : o.seq);
      int zero = 0;
      check(hseq_christol_verify(s.get(), o.relation.empty() ? nullptr : o.relation.c_str(), o.q,
                                 o.order, fmt, out.out(), &zero));
      print(out);
      return zero ? kOk : kCheckFailed;
    }
    if (*csearch) {
      Spec s(o.seq.empty() ? "period-doubling" : o.seq);
      check(hseq_christol_search(s.get(), o.q, o.dmax, o.coeff_degree, o.order, fmt, out.out(),
                                 nullptr));
      print(out);
      return kOk;
    }
    if (*eval) {
      Spec s(o.seq);
      hseq_dfao* d = nullptr;
      check(hseq_dfao_create(s.get(), &d));
      struct Free {
        hseq_dfao* d;
        ~Free() { hseq_dfao_free(d); }
      } guard{d};
      check(hseq_dfao_eval(d, o.index, out.out()));
      if (o.json) std::cout << "{\"index\": " << o.index << ", \"value\": \"" << out.str() << "\"}\n";
      else print(out);
      if (o.check_count == 0) return kOk;
      int ok = 0;
      std::uint64_t bad = 0;
      check(hseq_dfao_check(d, s.get(), o.check_count, &ok, &bad));
      if (!ok) std::cerr << "automaton disagrees with the prefix at n = " << bad << '\n';
      else std::cerr << "automaton agrees with the prefix for n < " << o.check_count << '\n';
      return ok ? kOk : kCheckFailed;
    }
    if (*derive) {
      check(hseq_derive(o.kind.c_str(), o.length, fmt, out.out()));
      print(out);
      return kOk;
    }
    if (*doublefree) {
      std::uint64_t v = 0;
      check(hseq_doublefree(o.n, &v));
      std::cout << v << '\n';
      return kOk;
    }
    if (*equal) {
      Spec a(o.seq), b(o.other);
      int eq = 0;
      check(hseq_fixed_point_equal(a.get(), b.get(), o.length, &eq));
      if (o.json) std::cout << "{\"equal\": " << (eq ? "true" : "false") << "}\n";
      else std::cout << (eq ? "equal" : "different") << '\n';
      return eq ? kOk : kCheckFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "hanoiseq: " << hseq_status_string(f.status) << ": " << f.message << '\n';
    return exit_code(f.status);
  }
  return kUsage;
}
