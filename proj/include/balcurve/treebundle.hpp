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

#ifndef BALCURVE_TREEBUNDLE_HPP
#define BALCURVE_TREEBUNDLE_HPP

// Combs: a base curve with trees of rational tails ("teeth") attached, each
// tooth meeting the base in one point, carrying a bundle whose restriction
// to every component is split. The reducer predicts the splitting type of a
// smoothing by eliminating tail components from the leaves inward.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "balcurve/oracle.hpp"
#include "balcurve/splitcalc.hpp"

namespace balcurve {

enum class GluingMode { general, specified };

enum class Role { base, tail };

struct CombComponent {
  std::string id;
  Role role = Role::tail;
  SplitType type;
};

struct CombEdge {
  int parent = 0;
  int child = 0;
  // Only used in specified mode: fibre of child = glue * fibre of parent.
  std::vector<std::vector<mpq_class>> glue;
};

struct CombSpec {
  int rank = 0;
  GluingMode mode = GluingMode::general;
  std::vector<CombComponent> components;
  std::vector<CombEdge> edges;

  // Filled in by make_comb. Edges are reoriented so that parents are closer
  // to the base.
  std::vector<int> parent;    // -1 on base components
  std::vector<int> tooth_of;  // -1 on base components
  std::vector<int> tooth_roots;
  std::vector<long> tooth_degrees;
  bool teeth_balanced = false;
  // Per tooth: general gluing, or every component a twist of the trivial
  // bundle.
  std::vector<bool> tooth_gluing_ok;
  bool single_base = false;

  int base_index() const;  // the unique base component; throws otherwise
  long total_tooth_degree() const;
};

/// Validates and completes a comb. Errors: invalid_input for rank mismatch,
/// non-tree topology or missing gluing data; hypothesis_violation when a
/// tooth component is unbalanced.
CombSpec make_comb(int rank, GluingMode mode,
                   std::vector<CombComponent> components,
                   std::vector<CombEdge> edges);

/// A tooth given as its own small tree; component 0 is the root, and each
/// edge is (parent, child) in tooth-local indices.
struct Tooth {
  std::vector<SplitType> components;
  std::vector<std::pair<int, int>> edges;
  static Tooth single(const SplitType& s) { return Tooth{{s}, {}}; }
  static Tooth chain(std::vector<SplitType> comps);
};

CombSpec build_comb(const SplitType& base, const std::vector<Tooth>& teeth,
                    GluingMode mode = GluingMode::general);

struct ReduceStep {
  int component = 0;  // eliminated component
  int into = 0;       // neighbour that absorbed it
  int twist = 0;
  int corank = 0;     // 0 when no modification was needed
};

struct ReduceResult {
  std::vector<int> base_components;
  std::vector<SplitType> base_types;  // parallel to base_components
  std::vector<int> root_twists;       // per tooth
  std::vector<ReduceStep> steps;
  long k = 0;                         // total tooth degree
  // Set only for a single base component.
  std::optional<SplitType> predicted;
  std::optional<Partition> bound;
  bool within_bound = false;  // partition of predicted <= bound
  bool strict = false;        // partition of predicted < bound
};

struct ReduceOrder {
  std::vector<int> tooth_order;  // a permutation of tooth indices
  bool reverse_children = false;
};

ReduceResult smoothing_reduce(const CombSpec& comb, const ReduceOrder& order = {});

/// Whether the reducer predicts a balanced general fibre. Requires every
/// component, the base included, to be balanced, and a single base.
bool comb_is_balanced_smoothing(const CombSpec& comb);

/// Explicit oracle data for the comb: node coordinates 1, 2, ... on each
/// component, random invertible gluing in general mode.
TreeBundleData comb_tree_data(const CombSpec& comb, std::uint64_t seed,
                              const OracleOptions& options = {});

/// Per-component twists placing `t` on the base components only.
std::vector<int> base_twists(const CombSpec& comb, int t);

/// Base O + O, t teeth O + O(-1).
CombSpec example_comb(int teeth);
/// Base O(a1) + O(a2), t teeth O + O(-1).
CombSpec example_comb2(int a1, int a2, int teeth);

}  // namespace balcurve

#endif  // BALCURVE_TREEBUNDLE_HPP
