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

#include "balcurve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "balcurve/error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace balcurve {

using detail::Fp;
using detail::from_long;
using detail::Matrix;
using detail::Poly;

namespace {

constexpr long kCoeffRange = 1L << 20;

long draw(std::mt19937_64& rng) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * kCoeffRange + 1)) -
         kCoeffRange;
}

template <class F>
F power(long x, long k) {
  F acc = from_long<F>(1);
  const F base = from_long<F>(x);
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

// Evaluates h0 on the window of twists that pins down a bundle of the given
// rank and degree whose summands all have degree <= upper, then inverts.
SplitType recover(int rank, long c1, long upper, const OracleOptions& options,
                  const std::function<long(int)>& h0) {
  const long lower = c1 - static_cast<long>(rank - 1) * upper;
  const long t_lo = -upper - 1 - options.window_margin;
  const long t_hi = -lower + options.window_margin;
  std::vector<long> values;
  for (long t = t_lo; t <= t_hi; ++t) values.push_back(h0(static_cast<int>(t)));
  SplitType s = split_from_h0_profile(static_cast<int>(t_lo), values, rank);
  if (s.c1() != c1)
    fail(ErrorCode::internal, "recovered degree " + std::to_string(s.c1()) +
                                  " differs from expected " + std::to_string(c1));
  return s;
}

#define BALCURVE_DISPATCH(field, fn, ...)              \
  ((field) == FieldKind::prime ? fn<Fp>(__VA_ARGS__) \
                               : fn<mpq_class>(__VA_ARGS__))

template <class F>
Poly<F> to_poly(const std::vector<long>& c) {
  Poly<F> p;
  for (long v : c) p.push_back(from_long<F>(v));
  detail::trim(p);
  return p;
}

template <class F>
bool surjective_in(const PolyMorphism& phi) {
  const int rs = phi.source.rank(), rt = phi.target.rank();
  if (rt > rs) return false;
  auto a = phi.source.degrees();
  auto b = phi.target.degrees();
  const long sum_b = std::accumulate(b.begin(), b.end(), 0L);
  Poly<F> g;
  bool infinity_ok = false;
  std::vector<int> cols(rt);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<std::vector<Poly<F>>> m(rt, std::vector<Poly<F>>(rt));
    long degree = sum_b;
    for (int k = 0; k < rt; ++k) degree -= a[cols[k]];
    for (int j = 0; j < rt; ++j)
      for (int k = 0; k < rt; ++k) m[j][k] = to_poly<F>(phi.entries[j][cols[k]]);
    Poly<F> det = detail::poly_det(m);
    if (!detail::is_zero(detail::coeff(det, degree))) infinity_ok = true;
    g = detail::poly_gcd(g, det);
    // Advance to the next column subset in lexicographic order.
    int k = rt - 1;
    while (k >= 0 && cols[k] == rs - rt + k) --k;
    if (k < 0) break;
    ++cols[k];
    for (int l = k + 1; l < rt; ++l) cols[l] = cols[l - 1] + 1;
  }
  return infinity_ok && g.size() == 1;
}

template <class F>
long kernel_h0(const PolyMorphism& phi, int t) {
  auto a = phi.source.degrees();
  auto b = phi.target.degrees();
  std::vector<long> col_off, row_off;
  long cols = 0, rows = 0;
  for (int x : a) {
    col_off.push_back(cols);
    cols += std::max(0, x + t + 1);
  }
  for (int y : b) {
    row_off.push_back(rows);
    rows += std::max(0, y + t + 1);
  }
  if (cols == 0) return 0;
  auto m = detail::zero_matrix<F>(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long k = 0; k < a[i] + t + 1; ++k)
      for (std::size_t j = 0; j < b.size(); ++j) {
        const auto& e = phi.entries[j][i];
        for (std::size_t l = 0; l < e.size(); ++l)
          m[row_off[j] + k + l][col_off[i] + k] += from_long<F>(e[l]);
      }
  return detail::nullity(std::move(m), cols);
}

template <class F>
bool full_row_rank(const std::vector<std::vector<long>>& n) {
  if (n.empty()) return true;
  Matrix<F> m;
  for (const auto& row : n) {
    std::vector<F> r;
    for (long v : row) r.push_back(from_long<F>(v));
    m.push_back(std::move(r));
  }
  return detail::rank(std::move(m)) == static_cast<long>(n.size());
}

struct PointCondition {
  long coordinate;
  std::vector<std::vector<long>> rows;
};

template <class F>
long modification_h0(const SplitType& s, const std::vector<PointCondition>& pts,
                     int shift, int t) {
  auto a = s.degrees();
  std::vector<long> off;
  long cols = 0;
  for (int x : a) {
    off.push_back(cols);
    cols += std::max(0, x + t + shift + 1);
  }
  if (cols == 0) return 0;
  Matrix<F> m;
  for (const auto& p : pts) {
    for (const auto& row : p.rows) {
      std::vector<F> r(cols, from_long<F>(0));
      for (std::size_t i = 0; i < a.size(); ++i) {
        const F coef = from_long<F>(row[i]);
        F pw = from_long<F>(1);
        const F x = from_long<F>(p.coordinate);
        for (long k = 0; k < a[i] + t + shift + 1; ++k) {
          r[off[i] + k] = coef * pw;
          pw = pw * x;
        }
      }
      m.push_back(std::move(r));
    }
  }
  return detail::nullity(std::move(m), cols);
}

// Cocycle coefficients xi[i][j][k - lo] for z^k, -b_j + 1 <= k <= -a_i - 1.
struct Cocycle {
  std::vector<std::vector<std::vector<long>>> xi;
};

template <class F>
long extension_h0(const SplitType& s1, const SplitType& s2, const Cocycle& c,
                  int t) {
  auto a = s1.degrees();
  auto b = s2.degrees();
  const int maxb = b.front();
  std::vector<long> off1, off2, len1;
  long cols = 0;
  for (int x : a) {
    off1.push_back(cols);
    long len = std::max(0, std::max(x + t, maxb + t - 1) + 1);
    len1.push_back(len);
    cols += len;
  }
  for (int y : b) {
    off2.push_back(cols);
    cols += std::max(0, y + t + 1);
  }
  if (cols == 0) return 0;
  Matrix<F> m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Row for the coefficient of z^e, e >= 1, in the first-block coordinate
    // on the other chart.
    std::map<long, std::vector<F>> rows;
    auto row = [&](long e) -> std::vector<F>& {
      auto it = rows.find(e);
      if (it == rows.end())
        it = rows.emplace(e, std::vector<F>(cols, from_long<F>(0))).first;
      return it->second;
    };
    for (long k = 0; k < len1[i]; ++k) {
      long e = k - a[i] - t;
      if (e >= 1) row(e)[off1[i] + k] += from_long<F>(1);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      const long lo = -b[j] + 1;
      const auto& xi = c.xi[i][j];
      for (std::size_t q = 0; q < xi.size(); ++q) {
        const long kappa = lo + static_cast<long>(q);
        for (long l = 0; l < b[j] + t + 1; ++l) {
          long e = kappa + l - t;
          if (e >= 1) row(e)[off2[j] + l] += from_long<F>(xi[q]);
        }
      }
    }
    for (auto& [e, r] : rows) m.push_back(std::move(r));
  }
  return detail::nullity(std::move(m), cols);
}

template <class F>
long tree_h0(const TreeBundleData& d, std::span<const int> twists) {
  const int r = d.rank;
  std::vector<std::vector<long>> off(d.components.size());
  long cols = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const int tw = twists.empty() ? 0 : twists[c];
    for (int deg : d.components[c]) {
      off[c].push_back(cols);
      cols += std::max(0, deg + tw + 1);
    }
  }
  if (cols == 0) return 0;
  auto length = [&](std::size_t c, int k) {
    const int tw = twists.empty() ? 0 : twists[c];
    return std::max(0, d.components[c][k] + tw + 1);
  };
  Matrix<F> m;
  for (const auto& node : d.nodes) {
    Matrix<F> g;
    for (const auto& row : node.glue) {
      std::vector<F> gr;
      for (const auto& q : row) gr.push_back(detail::from_rational<F>(q));
      g.push_back(std::move(gr));
    }
    const F xa = from_long<F>(node.coord_a);
    const F xb = from_long<F>(node.coord_b);
    for (int rho = 0; rho < r; ++rho) {
      std::vector<F> row(cols, from_long<F>(0));
      for (int k = 0; k < r; ++k) {
        F pw = from_long<F>(1);
        for (long e = 0; e < length(node.a, k); ++e) {
          row[off[node.a][k] + e] += g[rho][k] * pw;
          pw = pw * xa;
        }
      }
      F pw = from_long<F>(1);
      for (long e = 0; e < length(node.b, rho); ++e) {
        row[off[node.b][rho] + e] -= pw;
        pw = pw * xb;
      }
      m.push_back(std::move(row));
    }
  }
  return detail::nullity(std::move(m), cols);
}

}  // namespace

PolyMorphism general_morphism(const SplitType& source, const SplitType& target,
                              std::uint64_t seed, bool surjective,
                              const OracleOptions& options) {
  bool any = false;
  for (int b : target.degrees())
    for (int a : source.degrees()) any = any || b - a >= 0;
  if (!any)
    fail(ErrorCode::genericity_failure,
         "no nonzero map " + source.to_string() + " -> " + target.to_string());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < std::max(1, options.retry_budget); ++attempt) {
    PolyMorphism phi{source, target, {}, seed};
    for (int b : target.degrees()) {
      std::vector<std::vector<long>> row;
      for (int a : source.degrees()) {
        std::vector<long> e;
        for (int k = 0; k <= b - a; ++k) e.push_back(draw(rng));
        row.push_back(std::move(e));
      }
      phi.entries.push_back(std::move(row));
    }
    if (!surjective || is_surjective(phi, options.field)) return phi;
  }
  fail(ErrorCode::genericity_failure,
       "no surjective map " + source.to_string() + " -> " + target.to_string() +
           " found within the retry budget");
}

bool is_surjective(const PolyMorphism& phi, FieldKind field) {
  return BALCURVE_DISPATCH(field, surjective_in, phi);
}

SplitType splitting_from_h0_profile(int t_lo, std::span<const long> h0_values,
                                    int rank) {
  return split_from_h0_profile(t_lo, h0_values, rank);
}

SplitType kernel_splitting(const PolyMorphism& phi,
                           const OracleOptions& options) {
  const int rank = phi.source.rank() - phi.target.rank();
  if (rank < 1) fail(ErrorCode::invalid_input, "kernel would have rank 0");
  if (!is_surjective(phi, options.field))
    fail(ErrorCode::precondition_violation, "map is not surjective");
  return recover(rank, phi.source.c1() - phi.target.c1(),
                 phi.source.max_degree(), options, [&](int t) {
                   return BALCURVE_DISPATCH(options.field, kernel_h0, phi, t);
                 });
}

SplitType modification_splitting(const SplitType& s,
                                 const std::vector<ModPoint>& points,
                                 std::uint64_t seed,
                                 const OracleOptions& options) {
  const int r = s.rank();
  std::set<long> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.coordinate).second)
      fail(ErrorCode::invalid_input, "coincident modification points");
    if (p.corank < 1 || p.corank > r)
      fail(ErrorCode::invalid_input, "corank must lie in [1, rank]");
  }
  std::mt19937_64 rng(seed);
  std::vector<PointCondition> conditions;
  int ups = 0;
  long c1 = s.c1();
  for (const auto& p : points) {
    const int rows = p.direction == Direction::down ? p.corank : r - p.corank;
    if (p.direction == Direction::up) {
      ++ups;
      c1 += p.corank;
    } else {
      c1 -= p.corank;
    }
    PointCondition pc{p.coordinate, {}};
    bool ok = false;
    for (int attempt = 0; attempt < std::max(1, options.retry_budget) && !ok;
         ++attempt) {
      pc.rows.assign(rows, std::vector<long>(r));
      for (auto& row : pc.rows)
        for (auto& v : row) v = draw(rng);
      ok = options.field == FieldKind::prime ? full_row_rank<Fp>(pc.rows)
                                             : full_row_rank<mpq_class>(pc.rows);
    }
    if (!ok)
      fail(ErrorCode::genericity_failure, "degenerate modification subspace");
    conditions.push_back(std::move(pc));
  }
  return recover(r, c1, s.max_degree() + ups, options, [&](int t) {
    return BALCURVE_DISPATCH(options.field, modification_h0, s, conditions,
                             ups, t);
  });
}

SplitType extension_splitting(const SplitType& s1, const SplitType& s2,
                              std::uint64_t seed,
                              const OracleOptions& options) {
  std::mt19937_64 rng(seed);
  Cocycle c;
  for (int a : s1.degrees()) {
    std::vector<std::vector<long>> row;
    for (int b : s2.degrees()) {
      std::vector<long> xi;
      for (int k = -b + 1; k <= -a - 1; ++k) xi.push_back(draw(rng));
      row.push_back(std::move(xi));
    }
    c.xi.push_back(std::move(row));
  }
  const int upper = std::max(s1.max_degree(), s2.max_degree());
  return recover(s1.rank() + s2.rank(), s1.c1() + s2.c1(), upper, options,
                 [&](int t) {
                   return BALCURVE_DISPATCH(options.field, extension_h0, s1,
                                            s2, c, t);
                 });
}

void validate_tree(const TreeBundleData& data) {
  const int n = static_cast<int>(data.components.size());
  if (n == 0 || data.rank < 1)
    fail(ErrorCode::invalid_input, "tree needs a component and positive rank");
  for (const auto& c : data.components)
    if (static_cast<int>(c.size()) != data.rank)
      fail(ErrorCode::invalid_input, "component rank differs from bundle rank");
  if (static_cast<int>(data.nodes.size()) != n - 1)
    fail(ErrorCode::invalid_input, "a tree has one node fewer than components");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<std::set<long>> coords(n);
  for (const auto& node : data.nodes) {
    if (node.a < 0 || node.a >= n || node.b < 0 || node.b >= n || node.a == node.b)
      fail(ErrorCode::invalid_input, "node refers to a bad component");
    if (find(node.a) == find(node.b))
      fail(ErrorCode::invalid_input, "components do not form a tree");
    parent[find(node.a)] = find(node.b);
    if (!coords[node.a].insert(node.coord_a).second ||
        !coords[node.b].insert(node.coord_b).second)
      fail(ErrorCode::invalid_input, "node coordinates collide on a component");
    if (static_cast<int>(node.glue.size()) != data.rank)
      fail(ErrorCode::invalid_input, "gluing matrix has the wrong size");
    for (const auto& row : node.glue)
      if (static_cast<int>(row.size()) != data.rank)
        fail(ErrorCode::invalid_input, "gluing matrix has the wrong size");
    Matrix<mpq_class> inv;
    if (!detail::invert(node.glue, inv))
      fail(ErrorCode::invalid_input, "gluing matrix is singular");
  }
}

long tree_euler_characteristic(const TreeBundleData& data,
                               std::span<const int> twists) {
  long chi = 0;
  for (std::size_t c = 0; c < data.components.size(); ++c) {
    const long tw = twists.empty() ? 0 : twists[c];
    for (int deg : data.components[c]) chi += deg + tw + 1;
  }
  return chi - static_cast<long>(data.rank) * static_cast<long>(data.nodes.size());
}

Cohomology tree_cohomology(const TreeBundleData& data, std::span<const int> twists,
                           const OracleOptions& options) {
  validate_tree(data);
  if (!twists.empty() && twists.size() != data.components.size())
    fail(ErrorCode::invalid_input, "one twist per component expected");
  Cohomology c;
  c.h0 = BALCURVE_DISPATCH(options.field, tree_h0, data, twists);
  c.h1 = c.h0 - tree_euler_characteristic(data, twists);
  if (c.h1 < 0) fail(ErrorCode::internal, "negative h1 on a tree");
  return c;
}

TreeBundleData end_tree(const TreeBundleData& data) {
  validate_tree(data);
  const int r = data.rank;
  TreeBundleData out;
  out.rank = r * r;
  for (const auto& comp : data.components) {
    std::vector<int> degs;
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) degs.push_back(comp[k] - comp[l]);
    out.components.push_back(std::move(degs));
  }
  for (const auto& node : data.nodes) {
    Matrix<mpq_class> h;
    detail::invert(node.glue, h);
    TreeBundleData::Node n2 = node;
    n2.glue.assign(r * r, std::vector<mpq_class>(r * r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l)
            n2.glue[i * r + j][k * r + l] = node.glue[i][k] * h[l][j];
    out.nodes.push_back(std::move(n2));
  }
  return out;
}

}  // namespace balcurve
