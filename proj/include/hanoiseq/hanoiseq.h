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

#ifndef HANOISEQ_H_INCLUDED
#define HANOISEQ_H_INCLUDED

/*
 * C interface to the hanoiseq library.
 *
 * Every function returns an hseq_status. On failure the out-parameters are
 * left untouched and hseq_last_error() describes the problem (the message is
 * per thread and valid until the next call on that thread).
 *
 * Strings returned through `char** out` are allocated by the library and must
 * be released with hseq_string_free(). Handles are released with their
 * matching *_free function; passing NULL to any *_free function is a no-op.
 *
 * Symbols are exchanged as text tokens separated by single spaces. In the
 * Hanoi alphabets uppercase letters are the barred moves (A = a-bar:
 * II -> I, B = b-bar: III -> II, C = c-bar: I -> III).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HSEQ_BUILDING_LIBRARY)
#    define HSEQ_EXPORT __declspec(dllexport)
#  else
#    define HSEQ_EXPORT __declspec(dllimport)
#  endif
#else
#  define HSEQ_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hseq_status {
  HSEQ_OK = 0,
  HSEQ_ERR_INVALID_ARGUMENT = 1,
  HSEQ_ERR_PARSE = 2,
  HSEQ_ERR_NOT_FOUND = 3,
  HSEQ_ERR_DOMAIN_MISMATCH = 4,
  HSEQ_ERR_VALIDATION = 5,
  HSEQ_ERR_UNSUPPORTED = 6,
  HSEQ_ERR_ILLEGAL_MOVE = 7,
  HSEQ_ERR_VARIANT_VIOLATION = 8,
  HSEQ_ERR_UNREACHABLE = 9,
  HSEQ_ERR_NON_CONVERGENT = 10,
  HSEQ_ERR_CONSTRUCTION_FAILURE = 11,
  HSEQ_ERR_INSUFFICIENT_TRUNCATION = 12,
  HSEQ_ERR_MODULUS_MISMATCH = 13,
  HSEQ_ERR_INTERNAL = 14
} hseq_status;

typedef enum hseq_format {
  HSEQ_FORMAT_TEXT = 0,
  HSEQ_FORMAT_JSON = 1
} hseq_format;

/* Pegs: 1 = I, 2 = II, 3 = III. */

typedef struct hseq_spec hseq_spec;  /* morphism + start symbol + optional coding */
typedef struct hseq_dfao hseq_dfao;  /* automaton built from a uniform spec */

HSEQ_EXPORT const char* hseq_version(void);
HSEQ_EXPORT const char* hseq_status_string(hseq_status status);
HSEQ_EXPORT const char* hseq_last_error(void);
HSEQ_EXPORT void hseq_string_free(char* s);

/* ---- sequences ---------------------------------------------------------- */

/* Registered names, one per line. */
HSEQ_EXPORT hseq_status hseq_catalog_names(char** out);
HSEQ_EXPORT hseq_status hseq_spec_lookup(const char* name, hseq_spec** out);
/* JSON: {"alphabet": [...], "rules": {sym: [sym, ...]}, "start": sym,
 *        "coding": {sym: sym}}  (coding optional) */
HSEQ_EXPORT hseq_status hseq_spec_from_json(const char* json, hseq_spec** out);
HSEQ_EXPORT hseq_status hseq_spec_to_json(const hseq_spec* spec, char** out);
HSEQ_EXPORT void hseq_spec_free(hseq_spec* spec);
/* Uniform width of the morphism, or 0 when it is not uniform. */
HSEQ_EXPORT hseq_status hseq_spec_uniform_width(const hseq_spec* spec, size_t* width);

/* Length-`length` prefix of the (coded) iterative fixed point. */
HSEQ_EXPORT hseq_status hseq_spec_generate(const hseq_spec* spec, size_t length,
                                           hseq_format format, char** out);

/* *equal = 1 when the coded prefixes of both specs agree on `length` terms. */
HSEQ_EXPORT hseq_status hseq_fixed_point_equal(const hseq_spec* a, const hseq_spec* b,
                                               size_t length, int* equal);

/* ---- automata ----------------------------------------------------------- */

HSEQ_EXPORT hseq_status hseq_dfao_create(const hseq_spec* spec, hseq_dfao** out);
HSEQ_EXPORT void hseq_dfao_free(hseq_dfao* dfao);
HSEQ_EXPORT hseq_status hseq_dfao_eval(const hseq_dfao* dfao, uint64_t n, char** symbol);
HSEQ_EXPORT hseq_status hseq_dfao_to_json(const hseq_dfao* dfao, char** out);
/* Compares dfao_eval(n) with the generated prefix for all n < count. */
HSEQ_EXPORT hseq_status hseq_dfao_check(const hseq_dfao* dfao, const hseq_spec* spec,
                                        uint64_t count, int* ok, uint64_t* first_mismatch);

HSEQ_EXPORT hseq_status hseq_kernel(const hseq_spec* spec, size_t prefix_length,
                                    unsigned radix, unsigned depth, hseq_format format,
                                    char** out);

/* ---- Tower of Hanoi ----------------------------------------------------- */

/* variant: "classical", "cyclic" or "lazy". *legal = 0 when a move was
 * illegal (the trace records where). */
HSEQ_EXPORT hseq_status hseq_hanoi_simulate(const char* moves, unsigned disks,
                                            const char* variant, hseq_format format,
                                            char** out, int* legal);
HSEQ_EXPORT hseq_status hseq_hanoi_verify(unsigned disks, hseq_format format, char** out,
                                          int* ok);
HSEQ_EXPORT hseq_status hseq_hanoi_bfs(const char* variant, unsigned disks, int source,
                                       int target, hseq_format format, char** out,
                                       size_t* length);
/* olive != 0 selects the alternating algorithm (classical only). */
HSEQ_EXPORT hseq_status hseq_hanoi_solve(const char* variant, unsigned disks, int target,
                                         int olive, hseq_format format, char** out);
/* Checks that the variant's morphic sequence transfers 1..max_disks disks in
 * an optimal number of moves. */
HSEQ_EXPORT hseq_status hseq_hanoi_check_morphic(const char* variant, unsigned max_disks,
                                                 hseq_format format, char** out, int* ok);

HSEQ_EXPORT hseq_status hseq_census(const hseq_spec* spec, size_t prefix_length,
                                    size_t width, int aligned, hseq_format format,
                                    char** out);
/* *found = 1 when a square was found. */
HSEQ_EXPORT hseq_status hseq_squarefree(const hseq_spec* spec, size_t length,
                                        size_t max_period, hseq_format format, char** out,
                                        int* found);

/* ---- Toeplitz ----------------------------------------------------------- */

/* Pattern tokens separated by whitespace, "." for a hole. */
HSEQ_EXPORT hseq_status hseq_toeplitz_expand(const char* pattern, size_t length,
                                             hseq_format format, char** out);

/* ---- derived sequences -------------------------------------------------- */

/* kind: "T", "U", "V" (from the classical Hanoi sequence) or "Z" (from
 * Thue-Morse). `length` counts input terms. */
HSEQ_EXPORT hseq_status hseq_derive(const char* kind, size_t length, hseq_format format,
                                    char** out);
HSEQ_EXPORT hseq_status hseq_doublefree(unsigned n, uint64_t* out);

/* ---- non-uniform construction ------------------------------------------ */

/* Builds the non-uniform presentation of a uniform spec's fixed point; when
 * validate_length > 0 also validates it on that many symbols (*valid). */
HSEQ_EXPORT hseq_status hseq_construct_nonuniform(const hseq_spec* spec,
                                                  size_t validate_length,
                                                  hseq_format format, char** out,
                                                  int* valid);

/* ---- power series ------------------------------------------------------- */

/* Evaluates a relation (JSON {"q":2,"polynomials":[[..],..]}, or NULL for
 * X(1+X)F^2 + (1+X)F + 1) on the series of the spec's sequence mod X^order.
 * *zero = 1 when the residue vanishes. */
HSEQ_EXPORT hseq_status hseq_christol_verify(const hseq_spec* spec, const char* relation_json,
                                             unsigned q, size_t order, hseq_format format,
                                             char** out, int* zero);
/* *found = 1 when a relation of degree <= dmax with coefficient degree <=
 * coeff_degree exists on the first `order` terms. */
HSEQ_EXPORT hseq_status hseq_christol_search(const hseq_spec* spec, unsigned q, unsigned dmax,
                                             unsigned coeff_degree, size_t order,
                                             hseq_format format, char** out, int* found);

#ifdef __cplusplus
}
#endif

#endif /* HANOISEQ_H_INCLUDED */
