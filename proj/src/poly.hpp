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

#ifndef BALCURVE_SRC_POLY_HPP
#define BALCURVE_SRC_POLY_HPP

// Dense univariate polynomials in the affine chart coordinate, lowest
// coefficient first. The zero polynomial is the empty vector.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "field.hpp"

namespace balcurve::detail {

template <class F>
using Poly = std::vector<F>;

template <class F>
void trim(Poly<F>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> out(a.size() + b.size() - 1, from_long<F>(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b, bool subtract = false) {
  Poly<F> out(std::max(a.size(), b.size()), from_long<F>(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract) out[i] -= b[i];
    else out[i] += b[i];
  }
  trim(out);
  return out;
}

// Remainder of a modulo b (b nonzero).
template <class F>
Poly<F> poly_rem(Poly<F> a, const Poly<F>& b) {
  const F lead_inv = from_long<F>(1) / b.back();
  while (a.size() >= b.size()) {
    const F f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly<F> r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class F>
F poly_eval(const Poly<F>& p, const F& x) {
  F acc = from_long<F>(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Coefficient of z^k, zero beyond the stored range.
template <class F>
F coeff(const Poly<F>& p, long k) {
  if (k < 0 || k >= static_cast<long>(p.size())) return from_long<F>(0);
  return p[static_cast<std::size_t>(k)];
}

// Determinant of a square polynomial matrix by Laplace expansion along the
// first row. Sizes here are at most a handful.
template <class F>
Poly<F> poly_det(const std::vector<std::vector<Poly<F>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {from_long<F>(1)};
  if (n == 1) return m[0][0];
  Poly<F> acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].empty()) continue;
    std::vector<std::vector<Poly<F>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<F>> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Poly<F> term = poly_mul(m[0][c], poly_det(minor));
    acc = poly_add(acc, term, c % 2 == 1);
  }
  return acc;
}

}  // namespace balcurve::detail

#endif  // BALCURVE_SRC_POLY_HPP
