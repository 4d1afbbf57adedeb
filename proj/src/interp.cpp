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

#include "balcurve/interp.hpp"

#include <set>
#include <string>

#include "balcurve/error.hpp"
#include "balcurve/splitcalc.hpp"

namespace balcurve {

namespace {

void check_nd(int n, int d) {
  if (n < 3) fail(ErrorCode::degenerate, "n - 2 must be positive");
  if (d > n) fail(ErrorCode::degenerate, "d must not exceed n");
}

}  // namespace

long q_max(int n, int d, long e) {
  check_nd(n, d);
  return floor_div(e * (n + 1 - d) - 2, n - 2) + 1;
}

long e_min(int n, int d, long q) {
  check_nd(n, d);
  return ceil_div((q - 1) * (n - 2) + 2, n + 1 - d);
}

bool point_minimal_by_remainder(int n, int d, long e) {
  check_nd(n, d);
  const long x = e * (n + 1 - d) - 2;
  const long rem = x - (n - 2) * floor_div(x, n - 2);
  return rem < n + 1 - d;
}

bool is_point_minimal(int n, int d, long e) {
  check_nd(n, d);
  const long lhs = static_cast<long>(n + 1 - d) * (e - 1) - 2;
  const long b = floor_div(e * (n + 1 - d) - 2, n - 2);
  const bool star = lhs < b * (n - 2);
  if (star != point_minimal_by_remainder(n, d, e))
    fail(ErrorCode::internal, "point-minimality tests disagree");
  return star;
}

bool slopes_match(int n, int d, long e, long e0) {
  return floor_div(-static_cast<long>(d) * e0 + e, n - d) + e ==
         e0 + floor_div(2 * e0 - 2, d - 2);
}

std::optional<long> is_accessible(int n, int d, long e) {
  if (d < 3 || d >= n)
    fail(ErrorCode::degenerate, "accessibility needs 3 <= d <= n - 1");
  for (long e0 = d - 1; e0 <= e; ++e0)
    if (slopes_match(n, d, e, e0)) return e0;
  return std::nullopt;
}

InterpTable interp_table(int n, int d, long e_lo, long e_hi) {
  if (n < 4) fail(ErrorCode::degenerate, "tables need n >= 4");
  if (d < 3 || d >= n)
    fail(ErrorCode::degenerate, "tables need 3 <= d <= n - 1");
  if (e_lo < 1 || e_hi < e_lo) fail(ErrorCode::invalid_input, "bad degree range");
  InterpTable t;
  t.n = n;
  t.d = d;
  t.e_lo = e_lo;
  t.e_hi = e_hi;
  t.accessible_modulus = static_cast<long>(d) * (n - 2);
  t.interpolating_modulus = static_cast<long>(d) * (n + 1 - d);
  t.reference_class_count = static_cast<long>(n - d) * d;
  for (long e = e_lo; e <= e_hi; ++e) {
    InterpRow row;
    row.e = e;
    row.q_max = q_max(n, d, e);
    row.point_minimal = is_point_minimal(n, d, e);
    row.e0 = is_accessible(n, d, e);
    row.accessible = row.e0.has_value();
    row.interpolating = row.accessible && row.point_minimal;
    if (row.interpolating) t.interpolating_q.push_back(row.q_max);
    if (row.accessible && t.first_accessible == 0) t.first_accessible = e;
    t.rows.push_back(row);
  }
  const long m = t.accessible_modulus;
  if (t.first_accessible == 0 || e_hi - t.first_accessible + 1 < 2 * m)
    fail(ErrorCode::insufficient_window,
         "degree window must reach " + std::to_string(2 * m) +
             " past the first accessible degree");

  // Residues and period are read off the last two full periods, where the
  // floor functions have settled.
  const long tail = e_hi - 2 * m + 1;
  auto flag = [&](long e) { return t.rows[e - e_lo].accessible; };
  std::set<long> acc, interp;
  for (long e = e_hi - m + 1; e <= e_hi; ++e)
    if (flag(e)) acc.insert(e % m);
  const long mq = t.interpolating_modulus;
  for (long e = tail; e <= e_hi; ++e)
    if (t.rows[e - e_lo].interpolating) interp.insert(t.rows[e - e_lo].q_max % mq);
  t.accessible_residues.assign(acc.begin(), acc.end());
  t.interpolating_q_residues.assign(interp.begin(), interp.end());
  for (long p = 1; p <= m; ++p) {
    bool ok = true;
    for (long e = tail; e + p <= e_hi && ok; ++e) ok = flag(e) == flag(e + p);
    if (ok) {
      t.period = p;
      break;
    }
  }
  return t;
}

}  // namespace balcurve
