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

#ifndef BALCURVE_COMB_IO_HPP
#define BALCURVE_COMB_IO_HPP

// Line-based comb files.
//
//   # comment
//   mode general                 (or: mode specified)
//   component B base 0 0         (id, role, degrees)
//   component T1 tail 0 -1
//   edge B T1                    (parent, child)
//   glue B T1 1 0 0 1            (specified mode; row-major, a/b allowed)

#include <string>

#include "balcurve/treebundle.hpp"

namespace balcurve {

/// Throws parse_error on malformed text, plus the make_comb errors.
CombSpec parse_comb(const std::string& text);

/// Emits text that parse_comb reads back to an equal comb.
std::string format_comb(const CombSpec& comb);

}  // namespace balcurve

#endif  // BALCURVE_COMB_IO_HPP
