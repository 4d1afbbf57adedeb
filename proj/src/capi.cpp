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

#include "balcurve/balcurve.h"

#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "balcurve/comb_io.hpp"
#include "balcurve/error.hpp"
#include "balcurve/geometry.hpp"
#include "balcurve/interp.hpp"
#include "balcurve/report.hpp"
#include "balcurve/verify.hpp"

using namespace balcurve;

struct bc_context {
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::prime;
  std::string last_error;
};

struct bc_split {
  SplitType value;
};

struct bc_comb {
  CombSpec value;
};

struct bc_buffer {
  std::string data;
};

namespace {

bc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return BC_ERR_INVALID_INPUT;
    case ErrorCode::precondition_violation: return BC_ERR_PRECONDITION;
    case ErrorCode::hypothesis_violation: return BC_ERR_HYPOTHESIS;
    case ErrorCode::genericity_failure: return BC_ERR_GENERICITY;
    case ErrorCode::out_of_range: return BC_ERR_OUT_OF_RANGE;
    case ErrorCode::degenerate: return BC_ERR_DEGENERATE;
    case ErrorCode::insufficient_window: return BC_ERR_INSUFFICIENT_WINDOW;
    case ErrorCode::inaccessible: return BC_ERR_INACCESSIBLE;
    case ErrorCode::unbalanced_intermediate: return BC_ERR_UNBALANCED_INTERMEDIATE;
    case ErrorCode::parse_error: return BC_ERR_PARSE;
    case ErrorCode::internal: return BC_ERR_INTERNAL;
  }
  return BC_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and a context message.
template <class Fn>
bc_status guarded(bc_context* ctx, Fn&& f) {
  if (!ctx) return BC_ERR_INVALID_INPUT;
  ctx->last_error.clear();
  try {
    f();
    return BC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return BC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return BC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::invalid_input, what);
}

Format format_of(bc_format f) {
  switch (f) {
    case BC_FORMAT_JSON: return Format::json;
    case BC_FORMAT_CSV: return Format::csv;
    default: return Format::text;
  }
}

ReportOptions options(const bc_context* ctx, bc_format f) {
  return ReportOptions{format_of(f), ctx->seed, ctx->field};
}

OracleOptions oracle(const bc_context* ctx) {
  OracleOptions o;
  o.field = ctx->field;
  return o;
}

void emit(bc_buffer** out, std::string s) {
  require(out != nullptr, "null output pointer");
  *out = new bc_buffer{std::move(s)};
}

void emit(bc_split** out, SplitType s) {
  require(out != nullptr, "null output pointer");
  *out = new bc_split{std::move(s)};
}

}  // namespace

extern "C" {

const char* bc_version(void) { return "0.1.0"; }

const char* bc_status_string(bc_status status) {
  switch (status) {
    case BC_OK: return "ok";
    case BC_ERR_INVALID_INPUT: return "invalid-input";
    case BC_ERR_PRECONDITION: return "precondition-violation";
    case BC_ERR_HYPOTHESIS: return "hypothesis-violation";
    case BC_ERR_GENERICITY: return "genericity-failure";
    case BC_ERR_OUT_OF_RANGE: return "out-of-range";
    case BC_ERR_DEGENERATE: return "degenerate";
    case BC_ERR_INSUFFICIENT_WINDOW: return "insufficient-window";
    case BC_ERR_INACCESSIBLE: return "inaccessible";
    case BC_ERR_UNBALANCED_INTERMEDIATE: return "unbalanced-intermediate";
    case BC_ERR_PARSE: return "parse-error";
    case BC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

bc_context* bc_context_new(uint64_t seed, bc_field field) {
  auto* ctx = new (std::nothrow) bc_context;
  if (!ctx) return nullptr;
  ctx->seed = seed;
  ctx->field = field == BC_FIELD_RATIONAL ? FieldKind::rational : FieldKind::prime;
  return ctx;
}

void bc_context_free(bc_context* ctx) { delete ctx; }

const char* bc_context_last_error(const bc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

bc_status bc_split_new(bc_context* ctx, const int* degrees, size_t count, bc_split** out) {
  return guarded(ctx, [&] {
    require(degrees != nullptr || count == 0, "null degree array");
    emit(out, SplitType::make(std::vector<int>(degrees, degrees + count)));
  });
}

bc_status bc_split_parse(bc_context* ctx, const char* text, bc_split** out) {
  return guarded(ctx, [&] {
    require(text != nullptr, "null text");
    std::string s(text);
    for (char& c : s)
      if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(s);
    std::vector<int> d;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size())
        fail(ErrorCode::parse_error, "bad degree '" + tok + "'");
      d.push_back(v);
    }
    emit(out, SplitType::make(std::move(d)));
  });
}

void bc_split_free(bc_split* s) { delete s; }

size_t bc_split_rank(const bc_split* s) { return s ? s->value.degrees().size() : 0; }

long bc_split_c1(const bc_split* s) { return s ? s->value.c1() : 0; }

size_t bc_split_degrees(const bc_split* s, int* out, size_t capacity) {
  if (!s) return 0;
  auto d = s->value.degrees();
  for (size_t i = 0; i < d.size() && i < capacity && out; ++i) out[i] = d[i];
  return d.size();
}

int bc_split_is_balanced(const bc_split* s) { return s && is_balanced(s->value); }

void bc_split_cohomology(const bc_split* s, int twist, long* h0, long* h1) {
  if (!s) return;
  const Cohomology c = h_split(s->value, twist);
  if (h0) *h0 = c.h0;
  if (h1) *h1 = c.h1;
}

bc_status bc_split_modify(bc_context* ctx, const bc_split* s, int colength,
                          bc_direction direction, bc_split** out) {
  return guarded(ctx, [&] {
    require(s != nullptr, "null splitting type");
    emit(out, general_modification(s->value, colength,
                                   direction == BC_UP ? Direction::up : Direction::down));
  });
}

bc_status bc_split_kernel(bc_context* ctx, const bc_split* s, int m, bc_split** out) {
  return guarded(ctx, [&] {
    require(s != nullptr, "null splitting type");
    emit(out, generic_kernel(s->value, m));
  });
}

bc_status bc_split_extension(bc_context* ctx, const bc_split* a, const bc_split* b,
                             bc_split** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && b != nullptr, "null splitting type");
    emit(out, balanced_extension(a->value, b->value));
  });
}

bc_status bc_oracle_modify(bc_context* ctx, const bc_split* s, int colength,
                           bc_direction direction, bc_split** out) {
  return guarded(ctx, [&] {
    require(s != nullptr, "null splitting type");
    require(colength >= 1, "colength must be positive");
    const Direction dir = direction == BC_UP ? Direction::up : Direction::down;
    std::vector<ModPoint> pts;
    for (int i = 0; i < colength; ++i) pts.push_back({i + 1, 1, dir});
    emit(out, modification_splitting(s->value, pts, ctx->seed, oracle(ctx)));
  });
}

bc_status bc_comb_parse(bc_context* ctx, const char* text, bc_comb** out) {
  return guarded(ctx, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new bc_comb{parse_comb(text)};
  });
}

void bc_comb_free(bc_comb* comb) { delete comb; }

bc_status bc_comb_predict(bc_context* ctx, const bc_comb* comb, bc_split** out) {
  return guarded(ctx, [&] {
    require(comb != nullptr, "null comb");
    const ReduceResult r = smoothing_reduce(comb->value);
    if (!r.predicted) fail(ErrorCode::invalid_input, "prediction needs a single base component");
    emit(out, *r.predicted);
  });
}

const char* bc_buffer_data(const bc_buffer* buf) { return buf ? buf->data.c_str() : ""; }

size_t bc_buffer_size(const bc_buffer* buf) { return buf ? buf->data.size() : 0; }

void bc_buffer_free(bc_buffer* buf) { delete buf; }

bc_status bc_report_split(bc_context* ctx, const char* op, const bc_split* s,
                          const bc_split* other, int twist, int colength,
                          bc_direction direction, int m, bc_format format,
                          bc_buffer** out) {
  return guarded(ctx, [&] {
    require(op != nullptr && s != nullptr, "null argument");
    SplitQuery q;
    q.op = op;
    q.a = s->value;
    if (other) q.b = other->value;
    q.twist = twist;
    q.colength = colength;
    q.direction = direction == BC_UP ? Direction::up : Direction::down;
    q.m = m;
    emit(out, report_split(q, options(ctx, format)));
  });
}

bc_status bc_report_tree(bc_context* ctx, const bc_comb* comb, int t_lo, int t_hi,
                         bc_format format, bc_buffer** out) {
  return guarded(ctx, [&] {
    require(comb != nullptr, "null comb");
    emit(out, report_tree(comb->value, t_lo, t_hi, options(ctx, format)));
  });
}

bc_status bc_format_comb(bc_context* ctx, const bc_comb* comb, bc_buffer** out) {
  return guarded(ctx, [&] {
    require(comb != nullptr, "null comb");
    emit(out, format_comb(comb->value));
  });
}

bc_status bc_report_pn(bc_context* ctx, int n, int e, bc_format format, bc_buffer** out) {
  return guarded(ctx, [&] { emit(out, report_pipeline(pn_pipeline(n, e), options(ctx, format))); });
}

bc_status bc_report_fan(bc_context* ctx, int n, int e, bc_format format, bc_buffer** out) {
  return guarded(ctx, [&] { emit(out, report_pipeline(fan_assembly(n, e), options(ctx, format))); });
}

bc_status bc_report_fang(bc_context* ctx, int n, int d, int e, int e0, bc_format format,
                         bc_buffer** out) {
  return guarded(ctx, [&] {
    if (e0 >= 0) {
      emit(out, report_pipeline(fang_assembly(n, d, e, e0), options(ctx, format)));
      return;
    }
    if (d < 3 || d > n - 1) fail(ErrorCode::out_of_range, "need 3 <= d <= n - 1");
    auto rec = fang_search(n, d, e);
    if (!rec) fail(ErrorCode::inaccessible, "no e0 in [d-1, e] gives a balanced extension");
    emit(out, report_pipeline(*rec, options(ctx, format)));
  });
}

bc_status bc_report_interp(bc_context* ctx, int n, int d, long e_lo, long e_hi,
                           bc_format format, bc_buffer** out) {
  return guarded(ctx, [&] {
    emit(out, report_interp(interp_table(n, d, e_lo, e_hi), options(ctx, format)));
  });
}

bc_status bc_report_verify(bc_context* ctx, int seeds, int cases_per_seed, bc_format format,
                           bc_buffer** out, int* passed) {
  return guarded(ctx, [&] {
    const VerifyReport r = run_verify(ctx->seed, seeds, ctx->field, cases_per_seed);
    if (passed) *passed = r.passed() ? 1 : 0;
    emit(out, report_verify(r, options(ctx, format)));
  });
}

}  // extern "C"
