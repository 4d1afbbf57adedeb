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

#include "balcurve/geometry.hpp"

#include "balcurve/error.hpp"

namespace balcurve {

long PipelineRecord::parameter(const std::string& name) const {
  for (const auto& [k, v] : parameters)
    if (k == name) return v;
  fail(ErrorCode::invalid_input, "no parameter " + name);
}

const SplitType& PipelineRecord::intermediate(const std::string& name) const {
  for (const auto& [k, v] : intermediates)
    if (k == name) return v;
  fail(ErrorCode::invalid_input, "no intermediate " + name);
}

namespace {

SplitType uniform(int count, int degree) {
  return SplitType::make(std::vector<int>(count, degree));
}

SplitType two_blocks(int c1, int d1, int c2, int d2) {
  std::vector<int> v(c1, d1);
  v.insert(v.end(), c2, d2);
  return SplitType::make(std::move(v));
}

void expect(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::internal, "bookkeeping check failed: " + what);
}

// Glues two component normal bundles at one node and reduces.
PipelineRecord glue_pair(PipelineRecord rec, const SplitType& x1,
                         const SplitType& x2) {
  rec.intermediates.emplace_back("X1", x1);
  rec.intermediates.emplace_back("X2", x2);
  CombSpec comb = build_comb(x1, {Tooth::single(x2)});
  ReduceResult red = smoothing_reduce(comb);
  rec.predicted = *red.predicted;
  rec.comb = std::move(comb);
  rec.reduction = std::move(red);
  return rec;
}

}  // namespace

SplitType blowup_modification(const SplitType& normal, int codimension) {
  if (codimension < 1) fail(ErrorCode::invalid_input, "codimension must be positive");
  if (codimension == 1) return normal;
  return general_modification(normal, codimension - 1, Direction::down);
}

SplitType nodal_union_restriction(const SplitType& normal) {
  return general_modification(normal, 1, Direction::up);
}

PipelineRecord pn_pipeline(int n, int e) {
  if (n < 2) fail(ErrorCode::invalid_input, "need n >= 2");
  if (e < n) fail(ErrorCode::out_of_range, "degree below n");
  PipelineRecord rec;
  rec.kind = "pn";
  rec.parameters = {{"n", n}, {"e", e}};
  const SplitType rnc = uniform(n - 1, n + 2);
  if (e == n) {
    rec.intermediates.emplace_back("N", rnc);
    rec.predicted = rnc;
  } else if (e < 2 * n) {
    // C1 a rational normal curve, C2 of degree e-n+1 spanning P^{e-n+1};
    // X1 blows up a P^{e-n}, X2 a P^{2n-e-1}.
    const SplitType x1 = blowup_modification(rnc, 2 * n - e);
    const int k = e - n + 1;
    const SplitType c2 = two_blocks(k - 1, k + 2, n - k, k);
    const SplitType x2 = blowup_modification(c2, k);
    expect(x1 == two_blocks(e - n, n + 2, 2 * n - e - 1, n + 1), "X1 in the middle range");
    expect(x2 == two_blocks(e - n, e - n + 2, 2 * n - e - 1, e - n + 1), "X2 in the middle range");
    rec.intermediates.emplace_back("C2", c2);
    rec = glue_pair(std::move(rec), x1, x2);
  } else {
    const int e2 = e - n + 1;
    const SplitType n2 = pn_normal(n, e2);
    const int rho = balance_info(n2).upper_rank;
    rec.parameters.emplace_back("e2", e2);
    rec.parameters.emplace_back("rho", rho);
    rec.intermediates.emplace_back("N2", n2);
    const SplitType x1 = blowup_modification(rnc, rho + 1);
    const SplitType x2 = blowup_modification(n2, n - rho);
    rec = glue_pair(std::move(rec), x1, x2);
  }
  rec.certified = is_balanced(rec.predicted) && rec.predicted.rank() == n - 1 &&
                  rec.predicted.c1() == static_cast<long>(e) * (n + 1) - 2;
  expect(rec.certified, "P^n normal bundle balanced of the expected degree");
  return rec;
}

SplitType pn_normal(int n, int e) { return pn_pipeline(n, e).predicted; }

PipelineRecord fan_assembly(int n, int e) {
  if (n < 4) fail(ErrorCode::out_of_range, "need n >= 4");
  if (e < n - 1) fail(ErrorCode::out_of_range, "need e >= n - 1");
  PipelineRecord rec;
  rec.kind = "fan";
  int e1, a;
  if (e >= (n - 1) * (n - 1)) {
    e1 = static_cast<int>(ceil_div(e, n));
    a = e1 * n - e;
  } else {
    e1 = n - 1;
    a = n * (n - 1) - e;
    rec.assumptions.push_back("rathmann_vanishing");
  }
  const int teeth = e1 * (n - 1) - a;
  rec.parameters = {{"n", n}, {"d", n}, {"e", e}, {"e1", e1}, {"a", a}, {"teeth", teeth}};
  const SplitType pn = pn_normal(n - 1, e1);
  rec.intermediates.emplace_back("N_C1_Pn-1", pn);
  const SplitType base = a == 0 ? pn : general_modification(pn, a, Direction::down);
  rec.intermediates.emplace_back("N_C1_X1", base);
  expect(base.c1() == static_cast<long>(e1) * n - 2 - a, "fan base degree");
  const SplitType trivial = uniform(n - 2, 0);
  rec.intermediates.emplace_back("tooth", trivial);
  CombSpec comb = build_comb(base, std::vector<Tooth>(teeth, Tooth::single(trivial)));
  ReduceResult red = smoothing_reduce(comb);
  rec.predicted = *red.predicted;
  rec.comb = std::move(comb);
  rec.reduction = std::move(red);
  rec.certified = is_balanced(rec.predicted) && rec.predicted.rank() == n - 2 &&
                  rec.predicted.c1() == e - 2;
  return rec;
}

PipelineRecord fang_assembly(int n, int d, int e, int e0) {
  if (d < 3 || d > n - 1) fail(ErrorCode::out_of_range, "need 3 <= d <= n - 1");
  if (e0 < d - 1) fail(ErrorCode::out_of_range, "base curve degree below d - 1");
  if (e0 > e) fail(ErrorCode::out_of_range, "base curve degree above e");
  PipelineRecord rec;
  rec.kind = "fang";
  rec.parameters = {{"n", n}, {"d", d}, {"e", e}, {"e0", e0}, {"m", d - 1}};

  // G restricted to C0 is the cokernel of O(-(d-1)e0) -> O(e0) + (n-d+1)O.
  std::vector<int> dual_src(n - d + 1, 0);
  dual_src.push_back(-e0);
  const SplitType g = dual(generic_kernel(SplitType::make(dual_src), (d - 1) * e0));
  expect(g.rank() == n - d + 1 && g.c1() == static_cast<long>(d) * e0, "G ledger");
  rec.intermediates.emplace_back("G", g);

  const SplitType k = generic_kernel(g, e);
  rec.intermediates.emplace_back("K", k);
  if (!is_balanced(k))
    fail(ErrorCode::unbalanced_intermediate, "kernel " + k.to_string() + " is not balanced");
  const SplitType vertical = twist(dual(k), e);
  rec.intermediates.emplace_back("vertical", vertical);
  const SplitType n0 = balanced_type(d - 2, static_cast<long>(d) * e0 - 2);
  rec.intermediates.emplace_back("N0", n0);

  SplitType ext;
  try {
    ext = balanced_extension(vertical, n0);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::precondition_violation) throw;
    fail(ErrorCode::inaccessible, std::string("degree not accessible from e0 = ") +
                                      std::to_string(e0) + ": " + err.what());
  }
  rec.intermediates.emplace_back("N_C1_X1", ext);

  const SplitType trivial = uniform(n - 2, 0);
  CombSpec comb = build_comb(ext, std::vector<Tooth>(e - e0, Tooth::single(trivial)));
  ReduceResult red = smoothing_reduce(comb);
  rec.parameters.emplace_back("teeth", e - e0);
  rec.predicted = *red.predicted;
  rec.comb = std::move(comb);
  rec.reduction = std::move(red);
  rec.certified = is_balanced(rec.predicted) && rec.predicted.rank() == n - 2 &&
                  rec.predicted.c1() == static_cast<long>(e) * (n + 1 - d) - 2;
  return rec;
}

std::optional<PipelineRecord> fang_search(int n, int d, int e) {
  for (int e0 = d - 1; e0 <= e; ++e0) {
    try {
      PipelineRecord rec = fang_assembly(n, d, e, e0);
      if (rec.certified) return rec;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::inaccessible &&
          err.code() != ErrorCode::unbalanced_intermediate &&
          err.code() != ErrorCode::precondition_violation)
        throw;
    }
  }
  return std::nullopt;
}

}  // namespace balcurve
