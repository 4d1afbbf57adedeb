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

#ifndef BALCURVE_VERIFY_HPP
#define BALCURVE_VERIFY_HPP

// Closed-form rules checked against the oracle on seeded random instances.

#include <cstdint>
#include <string>
#include <vector>

#include "balcurve/oracle.hpp"

namespace balcurve {

struct VerifyCheck {
  std::string name;
  long cases = 0;
  long mismatches = 0;
  std::vector<std::string> failures;  // the first few, for diagnostics
  void record(bool ok, const std::string& what);
};

/// general_modification against s corank-1 points, both directions; random
/// ranks up to 5, degrees in [-5, 5], colength up to twice the rank.
VerifyCheck check_modification(std::uint64_t seed, int cases, const OracleOptions& o);
/// general_kernel against the oracle on random balanced sources.
VerifyCheck check_kernel(std::uint64_t seed, int cases, const OracleOptions& o);
/// generic_kernel against the oracle on arbitrary split sources.
VerifyCheck check_generic_kernel(std::uint64_t seed, int cases, const OracleOptions& o);
/// balanced_extension against random extensions with equal slope floors.
VerifyCheck check_extension(std::uint64_t seed, int cases, const OracleOptions& o);
/// Up modifications against dual down modifications of the dual.
VerifyCheck check_duality(std::uint64_t seed, int cases, const OracleOptions& o);
/// The same integer instances solved over both fields.
VerifyCheck check_field_independence(std::uint64_t seed, int cases);
/// Widening every h0 window leaves the answers unchanged.
VerifyCheck check_window(std::uint64_t seed, int cases, const OracleOptions& o);
/// Oracle h0 of small combs bounds the reducer's prediction from above.
VerifyCheck check_semicontinuity(std::uint64_t seed, int cases, const OracleOptions& o);

struct VerifyReport {
  std::uint64_t seed = 0;
  int seeds = 0;
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

/// Every check above for seeds seed, seed+1, ..., merged per check.
VerifyReport run_verify(std::uint64_t seed, int seeds, FieldKind field,
                        int cases_per_seed = 20);

}  // namespace balcurve

#endif  // BALCURVE_VERIFY_HPP
