// Copyright 2026 The balcurve Authors
//
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

#ifndef BALCURVE_BALCURVE_H
#define BALCURVE_BALCURVE_H

/* C interface to balcurve. Objects are opaque handles; every fallible call
 * returns a bc_status and, on failure, leaves a message in the context. */

#include <stddef.h>
#include <stdint.h>

#if defined(BALCURVE_BUILDING)
#define BC_API __attribute__((visibility("default")))
#else
#define BC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_INVALID_INPUT,
  BC_ERR_PRECONDITION,
  BC_ERR_HYPOTHESIS,
  BC_ERR_GENERICITY,
  BC_ERR_OUT_OF_RANGE,
  BC_ERR_DEGENERATE,
  BC_ERR_INSUFFICIENT_WINDOW,
  BC_ERR_INACCESSIBLE,
  BC_ERR_UNBALANCED_INTERMEDIATE,
  BC_ERR_PARSE,
  BC_ERR_INTERNAL
} bc_status;

typedef enum bc_format { BC_FORMAT_TEXT = 0, BC_FORMAT_JSON, BC_FORMAT_CSV } bc_format;
typedef enum bc_field { BC_FIELD_PRIME = 0, BC_FIELD_RATIONAL } bc_field;
typedef enum bc_direction { BC_DOWN = 0, BC_UP } bc_direction;

typedef struct bc_context bc_context;
typedef struct bc_split bc_split;
typedef struct bc_comb bc_comb;
typedef struct bc_buffer bc_buffer;

BC_API const char* bc_version(void);
BC_API const char* bc_status_string(bc_status status);

/* Seed and field apply to every oracle computation made through ctx. */
BC_API bc_context* bc_context_new(uint64_t seed, bc_field field);
BC_API void bc_context_free(bc_context* ctx);
BC_API const char* bc_context_last_error(const bc_context* ctx);

BC_API bc_status bc_split_new(bc_context* ctx, const int* degrees, size_t count,
                              bc_split** out);
BC_API bc_status bc_split_parse(bc_context* ctx, const char* text, bc_split** out);
BC_API void bc_split_free(bc_split* s);
BC_API size_t bc_split_rank(const bc_split* s);
BC_API long bc_split_c1(const bc_split* s);
/* Copies min(rank, capacity) degrees, largest first; returns the rank. */
BC_API size_t bc_split_degrees(const bc_split* s, int* out, size_t capacity);
BC_API int bc_split_is_balanced(const bc_split* s);
BC_API void bc_split_cohomology(const bc_split* s, int twist, long* h0, long* h1);

BC_API bc_status bc_split_modify(bc_context* ctx, const bc_split* s, int colength,
                                 bc_direction direction, bc_split** out);
/* Kernel of a general map onto O(m). */
BC_API bc_status bc_split_kernel(bc_context* ctx, const bc_split* s, int m,
                                 bc_split** out);
BC_API bc_status bc_split_extension(bc_context* ctx, const bc_split* a,
                                    const bc_split* b, bc_split** out);
/* The oracle's answer for the same modification, at colength corank-1
 * points. */
BC_API bc_status bc_oracle_modify(bc_context* ctx, const bc_split* s, int colength,
                                  bc_direction direction, bc_split** out);

BC_API bc_status bc_comb_parse(bc_context* ctx, const char* text, bc_comb** out);
BC_API void bc_comb_free(bc_comb* comb);
BC_API bc_status bc_comb_predict(bc_context* ctx, const bc_comb* comb, bc_split** out);

BC_API const char* bc_buffer_data(const bc_buffer* buf);
BC_API size_t bc_buffer_size(const bc_buffer* buf);
BC_API void bc_buffer_free(bc_buffer* buf);

/* Reports. op is one of info, end, dual, twist, partition, modify, kernel,
 * extension; `other` may be NULL except for extension. */
BC_API bc_status bc_report_split(bc_context* ctx, const char* op, const bc_split* s,
                                 const bc_split* other, int twist, int colength,
                                 bc_direction direction, int m, bc_format format,
                                 bc_buffer** out);
BC_API bc_status bc_report_tree(bc_context* ctx, const bc_comb* comb, int t_lo,
                                int t_hi, bc_format format, bc_buffer** out);
BC_API bc_status bc_format_comb(bc_context* ctx, const bc_comb* comb, bc_buffer** out);
BC_API bc_status bc_report_pn(bc_context* ctx, int n, int e, bc_format format,
                              bc_buffer** out);
BC_API bc_status bc_report_fan(bc_context* ctx, int n, int e, bc_format format,
                               bc_buffer** out);
/* e0 < 0 searches for the smallest working e0. */
BC_API bc_status bc_report_fang(bc_context* ctx, int n, int d, int e, int e0,
                                bc_format format, bc_buffer** out);
BC_API bc_status bc_report_interp(bc_context* ctx, int n, int d, long e_lo, long e_hi,
                                  bc_format format, bc_buffer** out);
/* *passed is set to 1 when every check agrees. */
BC_API bc_status bc_report_verify(bc_context* ctx, int seeds, int cases_per_seed,
                                  bc_format format, bc_buffer** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* BALCURVE_BALCURVE_H */
