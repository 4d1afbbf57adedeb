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

#ifndef BALCURVE_ERROR_HPP
#define BALCURVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace balcurve {

enum class ErrorCode {
  invalid_input,
  precondition_violation,
  hypothesis_violation,  // theorem hypotheses on a comb do not hold
  genericity_failure,    // retry budget exhausted while drawing a general object
  out_of_range,
  degenerate,            // a formula denominator vanishes
  insufficient_window,
  inaccessible,          // extension slope floors differ in the fang pipeline
  unbalanced_intermediate,
  parse_error,
  internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace balcurve

#endif  // BALCURVE_ERROR_HPP
