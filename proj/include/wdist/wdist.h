// Copyright 2026 The wdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to the wdist library. Every object is an opaque handle owned
// by the caller and released with the matching *_destroy function. Strings
// returned through char** out-parameters are heap allocated and must be
// released with wd_string_free. All functions report failures through
// wd_status; wd_last_error() holds a description of the most recent failure
// on the calling thread.
//
// Column and weight indices are 0-based.

#ifndef WDIST_WDIST_H_
#define WDIST_WDIST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WDIST_API __declspec(dllexport)
#else
#define WDIST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wd_status {
  WD_OK = 0,
  WD_ERR_INVALID_ARGUMENT = 1,
  WD_ERR_PARSE = 2,
  WD_ERR_IO = 3,
  WD_ERR_NOT_PRIME = 4,
  WD_ERR_REDUCIBLE_POLYNOMIAL = 5,
  WD_ERR_UNSUPPORTED_ORDER = 6,
  WD_ERR_DIVISION_BY_ZERO = 7,
  WD_ERR_FIELD_MISMATCH = 8,
  WD_ERR_INDEX_OUT_OF_RANGE = 9,
  WD_ERR_DUPLICATE_INDEX = 10,
  WD_ERR_SINGULAR_MATRIX = 11,
  WD_ERR_RANK_DEFICIENT_GENERATOR = 12,
  WD_ERR_BUDGET_EXCEEDED = 13,
  WD_ERR_ZERO_CODE = 14,
  WD_ERR_NON_INTEGRAL_RESULT = 15,
  WD_ERR_NEGATIVE_ENTRY = 16,
  WD_ERR_TOO_FEW_KNOWNS = 17,
  WD_ERR_SINGULAR_REDUCED_SYSTEM = 18,
  WD_ERR_INCONSISTENT_KNOWNS = 19,
  WD_ERR_NON_INTEGRAL_SOLUTION = 20,
  WD_ERR_NEGATIVE_SOLUTION = 21,
  WD_ERR_REGIME_VIOLATION = 22,
  WD_ERR_RANGE_VIOLATION = 23,
  WD_ERR_SINGULAR_SELECTION = 24,
  WD_ERR_INTERNAL = 100,
} wd_status;

typedef struct wd_config wd_config;
typedef struct wd_code wd_code;
typedef struct wd_distribution wd_distribution;

// Parameters [n, k, d]_q with dual distance d_perp. A full-space code has
// d_perp = n + 1.
typedef struct wd_params {
  size_t n;
  size_t k;
  size_t d;
  size_t d_perp;
  uint32_t q;
} wd_params;

// Errors and memory.
WDIST_API const char* wd_status_name(wd_status status);
WDIST_API const char* wd_last_error(void);
// 0 success, 1 mathematical failure, 2 input error, 3 budget exceeded.
WDIST_API int wd_status_exit_code(wd_status status);
WDIST_API void wd_string_free(char* s);

// Resource limits. A NULL config means defaults everywhere below.
WDIST_API wd_status wd_config_create(wd_config** out);
WDIST_API void wd_config_destroy(wd_config* config);
WDIST_API wd_status wd_config_set_budget(wd_config* config, uint64_t codewords);
WDIST_API wd_status wd_config_set_census_budget(wd_config* config,
                                                uint64_t subsets);
WDIST_API wd_status wd_config_set_workers(wd_config* config, unsigned workers);

// Codes.
WDIST_API wd_status wd_code_parse(const char* text, wd_code** out);
WDIST_API wd_status wd_code_load(const char* path, wd_code** out);
// Uniform random generator matrix over GF(q) with rank k, 0 < k < n.
WDIST_API wd_status wd_code_random(uint32_t q, size_t n, size_t k,
                                   uint64_t seed, wd_code** out);
WDIST_API wd_status wd_code_dual(const wd_code* code, wd_code** out);
WDIST_API wd_status wd_code_format(const wd_code* code, char** out);
WDIST_API size_t wd_code_length(const wd_code* code);
WDIST_API size_t wd_code_dimension(const wd_code* code);
WDIST_API uint32_t wd_code_field_order(const wd_code* code);
WDIST_API wd_status wd_code_parameters(const wd_code* code,
                                       const wd_config* config,
                                       wd_params* out);
WDIST_API void wd_code_destroy(wd_code* code);

// Weight distributions.
WDIST_API wd_status wd_code_enumerate(const wd_code* code,
                                      const wd_config* config,
                                      wd_distribution** out);
WDIST_API wd_status wd_distribution_parse_json(const char* json,
                                               wd_distribution** out);
WDIST_API wd_status wd_distribution_to_json(const wd_distribution* a,
                                            char** out);
WDIST_API size_t wd_distribution_length(const wd_distribution* a);
WDIST_API size_t wd_distribution_dimension(const wd_distribution* a);
WDIST_API uint32_t wd_distribution_field_order(const wd_distribution* a);
// Decimal string of A_i.
WDIST_API wd_status wd_distribution_get(const wd_distribution* a, size_t i,
                                        char** out);
// 1 when nonnegative with A_0 = 1 and total q^k, else 0.
WDIST_API int wd_distribution_is_valid(const wd_distribution* a);
WDIST_API int wd_distribution_equal(const wd_distribution* a,
                                    const wd_distribution* b);
WDIST_API wd_status wd_distribution_macwilliams(const wd_distribution* a,
                                                wd_distribution** out);
WDIST_API wd_status wd_distribution_parameters(const wd_distribution* a,
                                               wd_params* out);
WDIST_API void wd_distribution_destroy(wd_distribution* a);

WDIST_API wd_status wd_params_validate(const wd_params* params);

// Rank census of the nu-column submatrices of the parity-check matrix:
// {"nu":…, "counts":{"r":"N"}, "binom_total":"…"}.
WDIST_API wd_status wd_census_json(const wd_code* code, size_t nu,
                                   const wd_config* config, char** out);

typedef enum wd_check {
  WD_CHECK_IDENTITY = 1,
  WD_CHECK_PLESS = 2,
  WD_CHECK_REGIME = 4,
  WD_CHECK_CROSSCHECK = 8,
  WD_CHECK_ALL = 15,
} wd_check;

// Runs the selected checks against `code`. When `claimed` is non-NULL it
// replaces the enumerated distribution of the code as the distribution under
// test. The report is a JSON object with one array of rows per check; *passed
// is 1 only if every row holds. Failing checks are not an error status.
WDIST_API wd_status wd_verify(const wd_code* code,
                              const wd_distribution* claimed,
                              unsigned checks, const wd_config* config,
                              char** report, int* passed);

typedef enum wd_system {
  WD_SYSTEM_PASCAL = 0,
  WD_SYSTEM_PLESS = 1,
} wd_system;

// knowns_json: {"index":"value",…} or a distribution object with "A".
WDIST_API wd_status wd_solve(const wd_params* params, wd_system system,
                             const char* knowns_json, wd_distribution** out);
// Solves both systems with the same knowns; the report holds both rational
// solutions. *agree is 1 when they coincide.
WDIST_API wd_status wd_crosscheck_json(const wd_params* params,
                                       const char* knowns_json, char** out,
                                       int* agree);
// Ranks of the two systems and of their union.
WDIST_API wd_status wd_pless_report_json(const wd_params* params, char** out);

// Closed forms.
WDIST_API wd_status wd_mds(size_t n, size_t k, uint32_t q,
                           wd_distribution** out);
// a_d is a decimal string. The result may contain negative entries; check
// wd_distribution_is_valid.
WDIST_API wd_status wd_nmds(size_t n, size_t k, uint32_t q, const char* a_d,
                            wd_distribution** out);
// seeds: sigma - 1 decimal strings A_{n-k}, …, A_{n-k+sigma-2}.
WDIST_API wd_status wd_amds(size_t n, size_t k, uint32_t q, size_t sigma,
                            const char* const* seeds, size_t seed_count,
                            wd_distribution** out);
// Binary doubly-even self-dual [24m, 12m, 4m+4] distribution.
WDIST_API wd_status wd_extremal(size_t m, wd_distribution** out);
// Solves the extremal system for the given moment rows. On success the
// report holds the solution; a singular selection yields
// WD_ERR_SINGULAR_MATRIX and, if out is non-NULL, a report with the rank and
// a kernel witness.
WDIST_API wd_status wd_extremal_system_json(size_t m, const size_t* nus,
                                            size_t nu_count,
                                            int include_symmetry, char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // WDIST_WDIST_H_
