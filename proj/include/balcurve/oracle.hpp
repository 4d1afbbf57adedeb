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

#ifndef BALCURVE_ORACLE_HPP
#define BALCURVE_ORACLE_HPP

// Ground truth by brute-force linear algebra.
//
// Bundles on P^1 are handled through explicit section spaces in the affine
// chart: a section of O(a) is a polynomial of degree <= a. Splitting types
// are recovered from the h0 values of a window of twists. Every random
// choice is an integer drawn from a seeded generator, so the same instance
// can be solved over either field.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "balcurve/splitcalc.hpp"

namespace balcurve {

enum class FieldKind { prime, rational };

struct OracleOptions {
  FieldKind field = FieldKind::prime;
  int retry_budget = 8;
  // Extra twists added on both ends of every h0 window.
  int window_margin = 2;
};

/// A map of split bundles, as a matrix of polynomials in the chart
/// coordinate. entries[j][i] maps summand i of the source to summand j of
/// the target; it has degree target_j - source_i and is empty when that is
/// negative. Coefficients are stored lowest degree first.
struct PolyMorphism {
  SplitType source;
  SplitType target;
  std::vector<std::vector<std::vector<long>>> entries;
  std::uint64_t seed = 0;
};

/// Draws a map with coefficients in [-2^20, 2^20]. With `surjective` set,
/// redraws until the map is certified surjective as a sheaf map (maximal
/// minors without a common zero on P^1), throwing genericity_failure when
/// the budget runs out.
PolyMorphism general_morphism(const SplitType& source, const SplitType& target,
                              std::uint64_t seed, bool surjective,
                              const OracleOptions& options = {});

bool is_surjective(const PolyMorphism& phi, FieldKind field);

/// Recovers a splitting type from consecutive h0 values; see
/// split_from_h0_profile.
SplitType splitting_from_h0_profile(int t_lo, std::span<const long> h0_values,
                                    int rank);

/// Splitting type of the kernel of a surjective map.
SplitType kernel_splitting(const PolyMorphism& phi,
                           const OracleOptions& options = {});

/// One point of an elementary modification. A down point of corank c keeps
/// the sections whose value lies in a random codimension-c subspace; an up
/// point of corank c admits a simple pole along a random c-dimensional
/// subspace.
struct ModPoint {
  long coordinate = 0;
  int corank = 1;
  Direction direction = Direction::down;
};

SplitType modification_splitting(const SplitType& s,
                                 const std::vector<ModPoint>& points,
                                 std::uint64_t seed,
                                 const OracleOptions& options = {});

/// A random extension 0 -> s1 -> E -> s2 -> 0, built from a random Cech
/// cocycle.
SplitType extension_splitting(const SplitType& s1, const SplitType& s2,
                              std::uint64_t seed,
                              const OracleOptions& options = {});

/// A vector bundle on a tree of rational curves. Component degrees are kept
/// in basis order (not sorted) so that gluing matrices refer to a fixed
/// frame.
struct TreeBundleData {
  struct Node {
    int a = 0;  // component indices
    int b = 0;
    long coord_a = 1;  // chart coordinates of the node on each side
    long coord_b = 1;
    // Identifies fibres: value on b equals glue * value on a.
    std::vector<std::vector<mpq_class>> glue;
  };
  int rank = 0;
  std::vector<std::vector<int>> components;
  std::vector<Node> nodes;
};

/// Throws invalid_input unless the data describe a tree with distinct node
/// coordinates per component and invertible gluing.
void validate_tree(const TreeBundleData& data);

long tree_euler_characteristic(const TreeBundleData& data,
                               std::span<const int> twists = {});

/// h0 and h1 with per-component twists (empty means untwisted).
Cohomology tree_cohomology(const TreeBundleData& data,
                           std::span<const int> twists = {},
                           const OracleOptions& options = {});

/// End(E) on the same tree, glued by conjugation.
TreeBundleData end_tree(const TreeBundleData& data);

}  // namespace balcurve

#endif  // BALCURVE_ORACLE_HPP
