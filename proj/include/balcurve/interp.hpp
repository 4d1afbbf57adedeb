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

#ifndef BALCURVE_INTERP_HPP
#define BALCURVE_INTERP_HPP

// Point-count numerology for rational curves on a general hypersurface of
// degree d in P^n, whose anticanonical index is n + 1 - d.

#include <optional>
#include <vector>

namespace balcurve {

/// Largest number of general points a balanced degree-e curve passes
/// through. Errors: n < 3 degenerate, d > n invalid_input.
long q_max(int n, int d, long e);

/// Smallest degree whose q_max reaches q. Errors: n < 3 or d > n degenerate.
long e_min(int n, int d, long q);

/// q_max(e - 1) < q_max(e), evaluated as the strict inequality between the
/// rational bound and the floor. Also checks it against the remainder test.
bool is_point_minimal(int n, int d, long e);

/// The remainder test: (e(n+1-d) - 2) mod (n-2) < n+1-d.
bool point_minimal_by_remainder(int n, int d, long e);

/// Whether some e0 in [d-1, e] makes the two extension slope floors agree.
/// Returns the smallest such e0. Errors: d < 3 or d >= n degenerate.
std::optional<long> is_accessible(int n, int d, long e);

/// The slope-floor equation itself, for one e0.
bool slopes_match(int n, int d, long e, long e0);

struct InterpRow {
  long e = 0;
  long q_max = 0;
  bool point_minimal = false;
  bool accessible = false;
  std::optional<long> e0;
  bool interpolating = false;
};

struct InterpTable {
  int n = 0;
  int d = 0;
  long e_lo = 1;
  long e_hi = 1;
  std::vector<InterpRow> rows;
  long first_accessible = 0;
  long accessible_modulus = 0;  // d(n-2)
  std::vector<long> accessible_residues;
  long interpolating_modulus = 0;  // d(n+1-d)
  std::vector<long> interpolating_q_residues;
  std::vector<long> interpolating_q;
  long period = 0;  // smallest eventual period of the accessible flags
  long reference_class_count = 0;  // (n-d)d, for comparison only
};

/// Rows for e in [e_lo, e_hi]. The window must extend at least twice the
/// modulus d(n-2) past the first accessible degree (insufficient_window).
InterpTable interp_table(int n, int d, long e_lo, long e_hi);

}  // namespace balcurve

#endif  // BALCURVE_INTERP_HPP
