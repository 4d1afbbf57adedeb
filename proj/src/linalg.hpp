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

#ifndef BALCURVE_SRC_LINALG_HPP
#define BALCURVE_SRC_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace balcurve::detail {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, from_long<F>(0)));
}

// Rank by Gaussian elimination; `m` is consumed.
template <class F>
long rank(Matrix<F> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const F inv = from_long<F>(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

// Dimension of the kernel of the linear map given by `m` acting on `cols`
// unknowns. A matrix with no rows imposes nothing.
template <class F>
long nullity(Matrix<F> m, long cols) {
  return cols - rank(std::move(m));
}

// Inverse of a square matrix, or false when singular.
template <class F>
bool invert(Matrix<F> m, Matrix<F>& out) {
  const std::size_t n = m.size();
  out = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = from_long<F>(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return false;
    std::swap(m[c], m[piv]);
    std::swap(out[c], out[piv]);
    const F inv = from_long<F>(1) / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] * inv;
      out[c][j] = out[c][j] * inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[c][j];
        out[i][j] = out[i][j] - f * out[c][j];
      }
    }
  }
  return true;
}

}  // namespace balcurve::detail

#endif  // BALCURVE_SRC_LINALG_HPP
