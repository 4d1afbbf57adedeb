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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "balcurve/error.hpp"
#include "balcurve/verify.hpp"

namespace balcurve {
namespace {

SplitType S(std::vector<int> d) { return SplitType::make(std::move(d)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

const OracleOptions kRational{FieldKind::rational, 8, 2};

// Resultant of two binary forms given by full coefficient lists (low degree
// first), via the Sylvester determinant over Q.
mpq_class sylvester_resultant(const std::vector<long>& f, const std::vector<long>& g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i][i + k] = f[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[n + i][i + k] = g[k];
  mpq_class det = 1;
  for (int c = 0; c < size; ++c) {
    int p = c;
    while (p < size && a[p][c] == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < size; ++r) {
      const mpq_class q = a[r][c] / a[c][c];
      for (int k = c; k < size; ++k) a[r][k] -= q * a[c][k];
    }
  }
  return det;
}

TEST(GeneralMorphism, ShapeAndDeterminism) {
  const PolyMorphism a = general_morphism(S({1, 0, -2}), S({2, 1}), 7, false);
  ASSERT_EQ(a.entries.size(), 2u);
  ASSERT_EQ(a.entries[0].size(), 3u);
  EXPECT_EQ(a.entries[0][0].size(), 2u);  // degree 2 - 1
  EXPECT_EQ(a.entries[0][2].size(), 5u);  // degree 2 + 2
  EXPECT_EQ(a.entries[1][0].size(), 1u);
  const PolyMorphism b = general_morphism(S({1, 0, -2}), S({2, 1}), 7, false);
  EXPECT_EQ(a.entries, b.entries);
  const PolyMorphism c = general_morphism(S({1, 0, -2}), S({2, 1}), 8, false);
  EXPECT_NE(a.entries, c.entries);
}

TEST(GeneralMorphism, NoNonzeroMap) {
  EXPECT_EQ(code_of([] { general_morphism(S({3, 3}), S({1}), 0, false); }),
            ErrorCode::genericity_failure);
  EXPECT_EQ(code_of([] { general_morphism(S({0}), S({2}), 0, true); }),
            ErrorCode::genericity_failure);
}

TEST(IsSurjective, AgreesWithResultant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int a1 = static_cast<int>(rng() % (m + 1));
    const int a2 = static_cast<int>(rng() % (m + 1));
    PolyMorphism phi{S({a1, a2}), S({m}), {}, 0};
    const auto& src = phi.source.degrees();
    std::vector<std::vector<long>> row;
    for (int a : src) {
      std::vector<long> e(m - a + 1);
      for (auto& x : e) x = static_cast<long>(rng() % 5) - 2;
      row.push_back(e);
    }
    phi.entries = {row};
    const bool expected = sylvester_resultant(row[0], row[1]) != 0;
    EXPECT_EQ(is_surjective(phi, FieldKind::rational), expected);
  }
}

TEST(IsSurjective, InfinityMatters) {
  // (z, 1) homogenises to (x, y): no common zero.
  PolyMorphism onto{S({0, 0}), S({1}), {{{0, 1}, {1, 0}}}, 0};
  EXPECT_TRUE(is_surjective(onto, FieldKind::prime));
  // z and 2z share the zero at 0.
  PolyMorphism zero{S({0, 0}), S({1}), {{{0, 1}, {0, 2}}}, 0};
  EXPECT_FALSE(is_surjective(zero, FieldKind::prime));
  // 1 and 1 as degree-one forms are both y: common zero at infinity.
  PolyMorphism inf{S({0, 0}), S({1}), {{{1, 0}, {1, 0}}}, 0};
  EXPECT_FALSE(is_surjective(inf, FieldKind::prime));
}

TEST(KernelSplitting, Examples) {
  const PolyMorphism phi = general_morphism(S({1, 1, 0}), S({2}), 1, true);
  EXPECT_EQ(kernel_splitting(phi), S({0, 0}));
  const PolyMorphism psi = general_morphism(S({0, 0, 0}), S({1}), 2, true);
  EXPECT_EQ(kernel_splitting(psi, kRational), S({-1, 0}));
  // Euler sequence on the line, twisted.
  PolyMorphism euler{S({0, 0}), S({1}), {{{0, 1}, {1, 0}}}, 0};
  EXPECT_EQ(kernel_splitting(euler), S({-1}));
}

TEST(KernelSplitting, Errors) {
  PolyMorphism square{S({0}), S({0}), {{{1}}}, 0};
  EXPECT_EQ(code_of([&] { kernel_splitting(square); }), ErrorCode::invalid_input);
  PolyMorphism zero{S({0, 0}), S({1}), {{{0, 1}, {0, 2}}}, 0};
  EXPECT_EQ(code_of([&] { kernel_splitting(zero); }), ErrorCode::precondition_violation);
}

TEST(KernelSplitting, MatchesClosedForm) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const int r = 2 + static_cast<int>(rng() % 3);
    const long c = static_cast<long>(rng() % 13) - 6;
    const SplitType s = balanced_type(r, c);
    const int m = s.max_degree() + static_cast<int>(rng() % 4);
    const PolyMorphism phi = general_morphism(s, S({m}), rng(), true);
    EXPECT_EQ(kernel_splitting(phi), general_kernel(s, m));
  }
}

TEST(ModificationSplitting, CorankOnePointsFollowLowering) {
  const std::vector<ModPoint> pts{{0, 1, Direction::down}, {1, 1, Direction::down}};
  EXPECT_EQ(modification_splitting(S({5, 3}), pts, 4), S({3, 3}));
  EXPECT_EQ(modification_splitting(S({2, 2}), {{0, 1, Direction::down}}, 4), S({2, 1}));
  EXPECT_EQ(modification_splitting(S({0, 0}), {{3, 1, Direction::up}}, 4, kRational),
            S({1, 0}));
}

TEST(ModificationSplitting, SingleFatPoint) {
  // A single point of corank 2 lowers both summands: the elementary
  // modification at one point is E(-p) on the chosen quotient.
  EXPECT_EQ(modification_splitting(S({5, 3}), {{0, 2, Direction::down}}, 1), S({4, 2}));
  EXPECT_EQ(modification_splitting(S({1, 1, 1}), {{2, 3, Direction::down}}, 1), S({0, 0, 0}));
}

TEST(ModificationSplitting, Errors) {
  const std::vector<ModPoint> twice{{1, 1, Direction::down}, {1, 1, Direction::down}};
  EXPECT_EQ(code_of([&] { modification_splitting(S({1, 1}), twice, 0); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { modification_splitting(S({1, 1}), {{0, 3, Direction::down}}, 0); }),
            ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { modification_splitting(S({1, 1}), {{0, 0, Direction::up}}, 0); }),
            ErrorCode::invalid_input);
}

TEST(ExtensionSplitting, Examples) {
  EXPECT_EQ(extension_splitting(S({0, 0}), S({0, 0, 0}), 3), S({0, 0, 0, 0, 0}));
  EXPECT_EQ(extension_splitting(S({-1}), S({1}), 3), S({0, 0}));
  EXPECT_EQ(extension_splitting(S({-2}), S({2}), 3, kRational), S({0, 0}));
  // No room for a nonsplit extension.
  EXPECT_EQ(extension_splitting(S({3}), S({0}), 3), S({3, 0}));
}

TEST(ProfileRecovery, Wrapper) {
  std::vector<long> h;
  for (int t = -4; t <= 2; ++t) h.push_back(h_split(S({2, 0}), t).h0);
  EXPECT_EQ(splitting_from_h0_profile(-4, h, 2), S({2, 0}));
}

TreeBundleData line_chain(std::vector<int> degs) {
  TreeBundleData d;
  d.rank = 1;
  for (int x : degs) d.components.push_back({x});
  for (std::size_t i = 0; i + 1 < degs.size(); ++i)
    d.nodes.push_back({static_cast<int>(i), static_cast<int>(i + 1), 2, 1, {{mpq_class(3)}}});
  return d;
}

TEST(TreeCohomology, LineBundleChains) {
  EXPECT_EQ(tree_cohomology(line_chain({1, 1})), (Cohomology{3, 0}));
  EXPECT_EQ(tree_cohomology(line_chain({-1, 2})), (Cohomology{2, 0}));
  EXPECT_EQ(tree_cohomology(line_chain({-2, 0})), (Cohomology{0, 1}));
  // The middle component kills the constants on both sides.
  EXPECT_EQ(tree_cohomology(line_chain({0, -1, 0})), (Cohomology{0, 0}));
  EXPECT_EQ(tree_cohomology(line_chain({0, -2, 0}), {}, kRational), (Cohomology{0, 1}));
}

TEST(TreeCohomology, TwistsShiftEachComponent) {
  const TreeBundleData d = line_chain({0, 0});
  const std::vector<int> tw{-1, 1};
  EXPECT_EQ(tree_cohomology(d, tw), (Cohomology{1, 0}));
  EXPECT_EQ(tree_euler_characteristic(d, tw), 1);
}

TEST(TreeCohomology, GluingMatters) {
  // O + O(-1) on one side, O(-1) + O on the other: identity glue pairs the
  // trivial summand with a negative one, a swap pairs the two trivial ones.
  TreeBundleData d;
  d.rank = 2;
  d.components = {{0, -1}, {0, -1}};
  d.nodes.push_back({0, 1, 1, 1, {{1, 0}, {0, 1}}});
  EXPECT_EQ(tree_cohomology(d).h0, 1);
  d.components = {{0, -1}, {-1, 0}};
  EXPECT_EQ(tree_cohomology(d).h0, 0);
}

TEST(TreeCohomology, EulerCharacteristicBookkeeping) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    TreeBundleData d;
    d.rank = 2;
    for (int c = 0; c < n; ++c)
      d.components.push_back({static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2});
    for (int c = 1; c < n; ++c) {
      const int p = static_cast<int>(rng() % c);
      d.nodes.push_back({p, c, c + 1, 1, {{1, 1}, {0, 1}}});
    }
    const Cohomology h = tree_cohomology(d);
    EXPECT_EQ(h.h0 - h.h1, tree_euler_characteristic(d));
    EXPECT_GE(h.h1, 0);
  }
}

TEST(TreeCohomology, Validation) {
  TreeBundleData d = line_chain({0, 0});
  d.nodes[0].glue = {{mpq_class(0)}};
  EXPECT_EQ(code_of([&] { tree_cohomology(d); }), ErrorCode::invalid_input);
  TreeBundleData cyc = line_chain({0, 0, 0});
  cyc.nodes[1] = {0, 1, 5, 5, {{mpq_class(1)}}};
  EXPECT_EQ(code_of([&] { tree_cohomology(cyc); }), ErrorCode::invalid_input);
  TreeBundleData clash = line_chain({0, 0, 0});
  clash.nodes[1].coord_a = 1;  // component 1 already has its node at 1
  EXPECT_EQ(code_of([&] { tree_cohomology(clash); }), ErrorCode::invalid_input);
  TreeBundleData ranks = line_chain({0, 0});
  ranks.components[1] = {0, 0};
  EXPECT_EQ(code_of([&] { tree_cohomology(ranks); }), ErrorCode::invalid_input);
  const std::vector<int> bad_twists{1};
  EXPECT_EQ(code_of([&] { tree_cohomology(line_chain({0, 0}), bad_twists); }),
            ErrorCode::invalid_input);
}

TEST(EndTree, SingleComponentMatchesEndBundle) {
  for (const auto& degs : std::vector<std::vector<int>>{{1, 1, 0}, {3, 0}, {2, 2}}) {
    TreeBundleData d;
    d.rank = static_cast<int>(degs.size());
    d.components = {degs};
    const Cohomology h = tree_cohomology(end_tree(d));
    EXPECT_EQ(h, h_split(end_bundle(S(degs)), 0));
  }
}

TEST(EndTree, GluedLineBundlesAreTrivial) {
  // End of a line bundle is the structure sheaf, on any tree.
  const Cohomology h = tree_cohomology(end_tree(line_chain({4, -3, 1})));
  EXPECT_EQ(h, (Cohomology{1, 0}));
}

TEST(FieldIndependence, PrimeAndRationalAgree) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = rng();
    const SplitType s = S({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4) - 2, 0});
    const std::vector<ModPoint> pts{{0, 1, Direction::down}, {1, 2, Direction::down}};
    EXPECT_EQ(modification_splitting(s, pts, seed), modification_splitting(s, pts, seed, kRational));
  }
}

// The randomized internal checks used by `verify`, over several seeds each.
class OracleChecks : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleChecks, AllAgree) {
  const std::uint64_t seed = GetParam();
  const OracleOptions o;
  for (const VerifyCheck& c :
       {check_modification(seed, 10, o), check_kernel(seed, 10, o),
        check_generic_kernel(seed, 10, o), check_extension(seed, 10, o),
        check_duality(seed, 10, o), check_field_independence(seed, 3),
        check_window(seed, 3, o), check_semicontinuity(seed, 3, o)}) {
    EXPECT_GT(c.cases, 0) << c.name;
    EXPECT_EQ(c.mismatches, 0) << c.name << ": "
                               << (c.failures.empty() ? "" : c.failures.front());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleChecks, ::testing::Range<std::uint64_t>(0, 20));

TEST(RunVerify, Summary) {
  const VerifyReport r = run_verify(5, 2, FieldKind::prime, 4);
  EXPECT_EQ(r.seed, 5u);
  EXPECT_EQ(r.seeds, 2);
  EXPECT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.passed());
}

}  // namespace
}  // namespace balcurve
