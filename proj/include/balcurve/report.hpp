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

#ifndef BALCURVE_REPORT_HPP
#define BALCURVE_REPORT_HPP

// Serialized reports shared by the C API and the command line. JSON
// documents carry "schema_version": 1. Interpolation tables in CSV use the
// columns n,d,e,q_max,point_minimal,accessible,e0,interpolating; other CSV
// reports are key,value pairs.

#include <cstdint>
#include <optional>
#include <string>

#include "balcurve/geometry.hpp"
#include "balcurve/interp.hpp"
#include "balcurve/oracle.hpp"
#include "balcurve/splitcalc.hpp"
#include "balcurve/treebundle.hpp"
#include "balcurve/verify.hpp"

namespace balcurve {

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json, csv };

struct ReportOptions {
  Format format = Format::text;
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::prime;
};

/// One splitting-type computation. Operations: info, end, dual, twist,
/// partition, modify, kernel, extension. modify, kernel and extension also
/// report the oracle's answer.
struct SplitQuery {
  std::string op = "info";
  SplitType a;
  std::optional<SplitType> b;
  int twist = 0;
  int colength = 1;
  Direction direction = Direction::down;
  int m = 0;
};

std::string report_split(const SplitQuery& q, const ReportOptions& opts);

/// Reduction and oracle cohomology of a comb over base twists t_lo..t_hi.
std::string report_tree(const CombSpec& comb, int t_lo, int t_hi,
                        const ReportOptions& opts);

std::string report_pipeline(const PipelineRecord& rec, const ReportOptions& opts);

std::string report_interp(const InterpTable& table, const ReportOptions& opts);

std::string report_verify(const VerifyReport& report, const ReportOptions& opts);

}  // namespace balcurve

#endif  // BALCURVE_REPORT_HPP
