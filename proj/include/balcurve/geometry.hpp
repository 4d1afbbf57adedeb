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

#ifndef BALCURVE_GEOMETRY_HPP
#define BALCURVE_GEOMETRY_HPP

// Normal bundles of rational curves through degenerations: blowup and
// nodal-union rules, curves in P^n, and the two hypersurface assemblies
// (the fan for d = n and the fang for d < n), each ending in a comb handed
// to the reducer.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balcurve/splitcalc.hpp"
#include "balcurve/treebundle.hpp"

namespace balcurve {

struct PipelineRecord {
  std::string kind;
  std::vector<std::pair<std::string, long>> parameters;
  std::vector<std::pair<std::string, SplitType>> intermediates;
  // Geometric inputs taken on trust, by name.
  std::vector<std::string> assumptions;
  std::optional<CombSpec> comb;
  std::optional<ReduceResult> reduction;
  SplitType predicted;
  bool certified = false;

  long parameter(const std::string& name) const;
  const SplitType& intermediate(const std::string& name) const;
};

/// Normal bundle after blowing up a centre of codimension s through a point
/// of the curve: down modification of colength s - 1.
SplitType blowup_modification(const SplitType& normal, int codimension);

/// Restriction of the normal bundle of a nodal union to one component.
SplitType nodal_union_restriction(const SplitType& normal);

/// Normal bundle of a general rational curve of degree e in P^n.
/// Errors: n < 2 invalid_input, e < n out_of_range.
SplitType pn_normal(int n, int e);

/// The same computation with its intermediate components recorded.
PipelineRecord pn_pipeline(int n, int e);

/// d = n: a general degree-n hypersurface in P^n, curves of degree e.
PipelineRecord fan_assembly(int n, int e);

/// d < n with base curve degree e0.
/// Errors: out_of_range for bad parameters, inaccessible when the extension
/// slope floors differ, unbalanced_intermediate when the kernel is not
/// balanced.
PipelineRecord fang_assembly(int n, int d, int e, int e0);

/// Smallest e0 in [d-1, e] for which fang_assembly certifies, if any.
std::optional<PipelineRecord> fang_search(int n, int d, int e);

}  // namespace balcurve

#endif  // BALCURVE_GEOMETRY_HPP
