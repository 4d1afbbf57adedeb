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

#include "balcurve/verify.hpp"

#include <algorithm>
#include <random>

#include "balcurve/error.hpp"
#include "balcurve/splitcalc.hpp"
#include "balcurve/treebundle.hpp"

namespace balcurve {

void VerifyCheck::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++mismatches;
  if (failures.size() < 5) failures.push_back(what);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.mismatches == 0 && c.cases > 0; });
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

SplitType random_split(std::mt19937_64& rng, int rank, int lo, int hi) {
  std::vector<int> d(rank);
  for (auto& x : d) x = uniform(rng, lo, hi);
  return SplitType::make(d);
}

SplitType random_balanced(std::mt19937_64& rng, int rank, int floor_lo, int floor_hi) {
  const long b = uniform(rng, floor_lo, floor_hi);
  return balanced_type(rank, b * rank + uniform(rng, 0, rank - 1));
}

std::vector<ModPoint> corank_one_points(int count, Direction dir) {
  std::vector<ModPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back({i + 1, 1, dir});
  return pts;
}

std::string show(const SplitType& a, const SplitType& b) {
  return a.to_string() + " vs " + b.to_string();
}

}  // namespace

VerifyCheck check_modification(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"modification", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int r = uniform(rng, 1, 5);
    const SplitType s = random_split(rng, r, -5, 5);
    const int len = uniform(rng, 1, 2 * r);
    const Direction dir = uniform(rng, 0, 1) ? Direction::up : Direction::down;
    const SplitType closed = general_modification(s, len, dir);
    const SplitType oracle = modification_splitting(s, corank_one_points(len, dir), rng(), o);
    c.record(closed == oracle, s.to_string() + (dir == Direction::up ? " up " : " down ") +
                                   std::to_string(len) + ": " + show(closed, oracle));
  }
  return c;
}

VerifyCheck check_kernel(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"kernel", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const SplitType s = random_balanced(rng, uniform(rng, 2, 5), -3, 3);
    const int m = s.max_degree() + uniform(rng, 0, 4);
    const SplitType closed = general_kernel(s, m);
    const SplitType oracle =
        kernel_splitting(general_morphism(s, SplitType::make({m}), rng(), true, o), o);
    c.record(closed == oracle, s.to_string() + " -> O(" + std::to_string(m) + "): " +
                                   show(closed, oracle));
  }
  return c;
}

VerifyCheck check_generic_kernel(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"generic_kernel", 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (c.cases < cases) {
    const SplitType s = random_split(rng, uniform(rng, 2, 5), -4, 4);
    const int m = s.degrees()[1] + uniform(rng, 0, 6);
    int forms = 0;
    bool unit = false;
    for (int a : s.degrees()) {
      forms += m >= a;
      unit = unit || m == a;
    }
    if (forms < 2 && !unit) continue;
    const SplitType closed = generic_kernel(s, m);
    const SplitType oracle =
        kernel_splitting(general_morphism(s, SplitType::make({m}), rng(), true, o), o);
    c.record(closed == oracle, s.to_string() + " -> O(" + std::to_string(m) + "): " +
                                   show(closed, oracle));
  }
  return c;
}

VerifyCheck check_extension(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"extension", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int b = uniform(rng, -3, 3);
    const int r1 = uniform(rng, 1, 3), r2 = uniform(rng, 1, 3);
    const SplitType s1 = balanced_type(r1, static_cast<long>(b) * r1 + uniform(rng, 0, r1 - 1));
    const SplitType s2 = balanced_type(r2, static_cast<long>(b) * r2 + uniform(rng, 0, r2 - 1));
    const SplitType closed = balanced_extension(s1, s2);
    const SplitType oracle = extension_splitting(s1, s2, rng(), o);
    c.record(closed == oracle && closed == balanced_type(r1 + r2, direct_sum(s1, s2).c1()),
             s1.to_string() + " by " + s2.to_string() + ": " + show(closed, oracle));
  }
  return c;
}

VerifyCheck check_duality(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"duality", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int r = uniform(rng, 1, 4);
    const SplitType s = random_split(rng, r, -4, 4);
    std::vector<ModPoint> up, down;
    const int npts = uniform(rng, 1, 3);
    for (int j = 0; j < npts; ++j) {
      const int corank = uniform(rng, 1, r);
      up.push_back({j + 1, corank, Direction::up});
      down.push_back({j + 1, corank, Direction::down});
    }
    const SplitType a = modification_splitting(s, up, rng(), o);
    const SplitType b = dual(modification_splitting(dual(s), down, rng(), o));
    c.record(a == b, s.to_string() + ": " + show(a, b));
  }
  return c;
}

VerifyCheck check_field_independence(std::uint64_t seed, int cases) {
  VerifyCheck c{"field_independence", 0, 0, {}};
  OracleOptions p, q;
  p.field = FieldKind::prime;
  q.field = FieldKind::rational;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int r = uniform(rng, 1, 4);
    const SplitType s = random_split(rng, r, -3, 3);
    const int len = uniform(rng, 1, r + 1);
    const Direction dir = uniform(rng, 0, 1) ? Direction::up : Direction::down;
    const std::uint64_t k = rng();
    const auto pts = corank_one_points(len, dir);
    const SplitType a = modification_splitting(s, pts, k, p);
    const SplitType b = modification_splitting(s, pts, k, q);
    c.record(a == b, "modification " + s.to_string() + ": " + show(a, b));

    const SplitType bal = random_balanced(rng, uniform(rng, 2, 4), -2, 2);
    const int m = bal.max_degree() + uniform(rng, 0, 3);
    const PolyMorphism phi = general_morphism(bal, SplitType::make({m}), rng(), true, p);
    const SplitType ka = kernel_splitting(phi, p);
    const SplitType kb = kernel_splitting(phi, q);
    c.record(ka == kb, "kernel " + bal.to_string() + ": " + show(ka, kb));

    const SplitType e1 = random_split(rng, uniform(rng, 1, 2), -2, 2);
    const SplitType e2 = random_split(rng, uniform(rng, 1, 2), -2, 2);
    const std::uint64_t ke = rng();
    const SplitType xa = extension_splitting(e1, e2, ke, p);
    const SplitType xb = extension_splitting(e1, e2, ke, q);
    c.record(xa == xb, "extension " + e1.to_string() + " by " + e2.to_string() + ": " + show(xa, xb));
  }
  return c;
}

VerifyCheck check_window(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"window", 0, 0, {}};
  OracleOptions wide = o;
  wide.window_margin = o.window_margin + 4;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int r = uniform(rng, 1, 4);
    const SplitType s = random_split(rng, r, -4, 4);
    const int len = uniform(rng, 1, 2 * r);
    const Direction dir = uniform(rng, 0, 1) ? Direction::up : Direction::down;
    const std::uint64_t k = rng();
    const auto pts = corank_one_points(len, dir);
    const SplitType a = modification_splitting(s, pts, k, o);
    const SplitType b = modification_splitting(s, pts, k, wide);
    c.record(a == b, "modification " + s.to_string() + ": " + show(a, b));

    const SplitType e1 = random_split(rng, uniform(rng, 1, 2), -3, 3);
    const SplitType e2 = random_split(rng, uniform(rng, 1, 2), -3, 3);
    const std::uint64_t ke = rng();
    const SplitType xa = extension_splitting(e1, e2, ke, o);
    const SplitType xb = extension_splitting(e1, e2, ke, wide);
    c.record(xa == xb, "extension " + e1.to_string() + " by " + e2.to_string() + ": " + show(xa, xb));
  }
  return c;
}

VerifyCheck check_semicontinuity(std::uint64_t seed, int cases, const OracleOptions& o) {
  VerifyCheck c{"semicontinuity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int r = uniform(rng, 1, 3);
    const SplitType base = random_split(rng, r, -2, 2);
    // Up to three tail components, spread over one to three teeth.
    const int tails = uniform(rng, 1, 3);
    std::vector<Tooth> teeth;
    for (int t = 0; t < tails;) {
      const int len = uniform(rng, 1, tails - t);
      std::vector<SplitType> comps;
      for (int j = 0; j < len; ++j) comps.push_back(random_balanced(rng, r, -1, 1));
      teeth.push_back(Tooth::chain(comps));
      t += len;
    }
    const CombSpec comb = build_comb(base, teeth);
    const SplitType pred = *smoothing_reduce(comb).predicted;
    const TreeBundleData data = comb_tree_data(comb, rng(), o);
    bool ok = true;
    for (int t = -pred.max_degree() - 2; t <= -pred.min_degree() + 1 && ok; ++t)
      ok = tree_cohomology(data, base_twists(comb, t), o).h0 >= h_split(pred, t).h0;
    c.record(ok, "comb on base " + base.to_string() + " predicted " + pred.to_string());
  }
  return c;
}

VerifyReport run_verify(std::uint64_t seed, int seeds, FieldKind field, int cases_per_seed) {
  if (seeds < 1) fail(ErrorCode::invalid_input, "need at least one seed");
  if (cases_per_seed < 1) fail(ErrorCode::invalid_input, "need at least one case per seed");
  OracleOptions o;
  o.field = field;
  VerifyReport report;
  report.seed = seed;
  report.seeds = seeds;
  auto merge = [&](VerifyCheck part) {
    for (auto& c : report.checks)
      if (c.name == part.name) {
        c.cases += part.cases;
        c.mismatches += part.mismatches;
        for (auto& f : part.failures)
          if (c.failures.size() < 5) c.failures.push_back(std::move(f));
        return;
      }
    report.checks.push_back(std::move(part));
  };
  const int small = std::max(1, cases_per_seed / 4);
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t k = seed + static_cast<std::uint64_t>(s);
    merge(check_modification(k, cases_per_seed, o));
    merge(check_kernel(k, cases_per_seed, o));
    merge(check_generic_kernel(k, cases_per_seed, o));
    merge(check_extension(k, cases_per_seed, o));
    merge(check_duality(k, cases_per_seed, o));
    merge(check_window(k, small, o));
    merge(check_semicontinuity(k, small, o));
    merge(check_field_independence(k, small));
  }
  return report;
}

}  // namespace balcurve
