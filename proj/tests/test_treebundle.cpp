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

#include "balcurve/treebundle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "balcurve/error.hpp"

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

SplitType random_balanced(std::mt19937_64& rng, int r, int lo, int hi) {
  const long c = lo * r + static_cast<long>(rng() % static_cast<std::uint64_t>((hi - lo) * r + 1));
  return balanced_type(r, c);
}

SplitType random_split(std::mt19937_64& rng, int r, int lo, int hi) {
  std::vector<int> d(r);
  for (auto& x : d) x = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return S(d);
}

CombSpec random_comb(std::mt19937_64& rng, int max_rank, int max_teeth, int max_chain,
                     bool balanced_base) {
  const int r = 1 + static_cast<int>(rng() % max_rank);
  const SplitType base = balanced_base ? random_balanced(rng, r, -3, 3) : random_split(rng, r, -3, 3);
  const int teeth = 1 + static_cast<int>(rng() % max_teeth);
  std::vector<Tooth> ts;
  for (int t = 0; t < teeth; ++t) {
    const int len = 1 + static_cast<int>(rng() % max_chain);
    std::vector<SplitType> comps;
    for (int j = 0; j < len; ++j) comps.push_back(random_balanced(rng, r, -2, 2));
    ts.push_back(Tooth::chain(comps));
  }
  return build_comb(base, ts);
}

TEST(MakeComb, ReorientsTowardsTheBase) {
  std::vector<CombComponent> comps{{"T", Role::tail, S({0, 0})},
                                   {"B", Role::base, S({1, 1})},
                                   {"U", Role::tail, S({1, 0})}};
  std::vector<CombEdge> edges{{0, 1, {}}, {2, 0, {}}};
  const CombSpec c = make_comb(2, GluingMode::general, comps, edges);
  EXPECT_EQ(c.parent, (std::vector<int>{1, -1, 0}));
  EXPECT_EQ(c.tooth_of, (std::vector<int>{0, -1, 0}));
  EXPECT_EQ(c.tooth_roots, (std::vector<int>{0}));
  EXPECT_EQ(c.tooth_degrees, (std::vector<long>{1}));
  EXPECT_EQ(c.base_index(), 1);
  EXPECT_EQ(c.total_tooth_degree(), 1);
  EXPECT_TRUE(c.single_base);
}

TEST(MakeComb, FlippedEdgesInvertTheirGlue) {
  std::vector<CombComponent> comps{{"B", Role::base, S({0, 0})}, {"T", Role::tail, S({0, 0})}};
  std::vector<CombEdge> edges{{1, 0, {{2, 1}, {0, 1}}}};
  const CombSpec c = make_comb(2, GluingMode::specified, comps, edges);
  ASSERT_EQ(c.edges.size(), 1u);
  EXPECT_EQ(c.edges[0].parent, 0);
  EXPECT_EQ(c.edges[0].child, 1);
  EXPECT_EQ(c.edges[0].glue[0][0], mpq_class(1, 2));
  EXPECT_EQ(c.edges[0].glue[0][1], mpq_class(-1, 2));
  EXPECT_EQ(c.edges[0].glue[1][1], mpq_class(1));
}

TEST(MakeComb, Errors) {
  const auto comp = [](std::string id, Role role, std::vector<int> d) {
    return CombComponent{std::move(id), role, S(std::move(d))};
  };
  EXPECT_EQ(code_of([&] { make_comb(2, GluingMode::general, {}, {}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] {
              make_comb(2, GluingMode::general, {comp("B", Role::base, {0})}, {});
            }),
            ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] {
              make_comb(1, GluingMode::general, {comp("T", Role::tail, {0})}, {});
            }),
            ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] {
              make_comb(1, GluingMode::general,
                        {comp("B", Role::base, {0}), comp("T", Role::tail, {0}),
                         comp("U", Role::tail, {0})},
                        {{0, 1, {}}, {1, 0, {}}});
            }),
            ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] {
              make_comb(1, GluingMode::general,
                        {comp("B", Role::base, {0}), comp("T", Role::tail, {0}),
                         comp("C", Role::base, {0})},
                        {{0, 1, {}}, {1, 2, {}}});
            }),
            ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] {
              make_comb(2, GluingMode::general,
                        {comp("B", Role::base, {0, 0}), comp("T", Role::tail, {2, 0})},
                        {{0, 1, {}}});
            }),
            ErrorCode::hypothesis_violation);
  EXPECT_EQ(code_of([&] {
              make_comb(1, GluingMode::specified,
                        {comp("B", Role::base, {0}), comp("T", Role::tail, {0})},
                        {{0, 1, {{mpq_class(0)}}}});
            }),
            ErrorCode::invalid_input);
}

TEST(MakeComb, TwoBaseComponents) {
  std::vector<CombComponent> comps{{"B1", Role::base, S({0})},
                                   {"B2", Role::base, S({1})},
                                   {"T", Role::tail, S({2})}};
  const CombSpec c = make_comb(1, GluingMode::general, comps, {{0, 1, {}}, {1, 2, {}}});
  EXPECT_FALSE(c.single_base);
  EXPECT_EQ(code_of([&] { c.base_index(); }), ErrorCode::invalid_input);
  const ReduceResult r = smoothing_reduce(c);
  EXPECT_FALSE(r.predicted.has_value());
  EXPECT_EQ(r.base_types, (std::vector<SplitType>{S({0}), S({3})}));
}

TEST(BuildComb, NamesAndShape) {
  const CombSpec c = build_comb(S({1, 0}), {Tooth::single(S({0, 0})),
                                            Tooth::chain({S({1, 1}), S({0, -1}), S({2, 2})})});
  ASSERT_EQ(c.components.size(), 5u);
  EXPECT_EQ(c.components[0].id, "B");
  EXPECT_EQ(c.components[1].id, "T1.1");
  EXPECT_EQ(c.components[4].id, "T2.3");
  EXPECT_EQ(c.parent, (std::vector<int>{-1, 0, 0, 2, 3}));
  EXPECT_EQ(c.tooth_degrees, (std::vector<long>{0, 5}));
}

TEST(SmoothingReduce, ExampleCombs) {
  for (int t = 1; t <= 6; ++t) {
    const ReduceResult r = smoothing_reduce(example_comb(t));
    EXPECT_EQ(*r.predicted, balanced_type(2, -t));
    EXPECT_EQ(r.k, -t);
    EXPECT_TRUE(r.within_bound);
    EXPECT_FALSE(r.strict);
    EXPECT_TRUE(comb_is_balanced_smoothing(example_comb(t)));
  }
  // Each tooth (0,-1) lowers the top of the base once.
  const ReduceResult r = smoothing_reduce(example_comb2(3, 1, 2));
  EXPECT_EQ(*r.predicted, S({1, 1}));
  EXPECT_EQ(*r.bound, Partition::of(S({1, 1})));
}

TEST(SmoothingReduce, ChainTooth) {
  const CombSpec c = build_comb(S({2, 2}), {Tooth::chain({S({1, 0}), S({0, 0})})});
  const ReduceResult r = smoothing_reduce(c);
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].component, 2);
  EXPECT_EQ(r.steps[0].twist, 0);
  EXPECT_EQ(r.steps[0].corank, 0);
  EXPECT_EQ(r.steps[1].component, 1);
  EXPECT_EQ(r.steps[1].twist, 1);
  EXPECT_EQ(r.steps[1].corank, 1);
  EXPECT_EQ(r.root_twists, (std::vector<int>{1}));
  EXPECT_EQ(*r.predicted, S({3, 2}));
  EXPECT_EQ(r.k, 1);
}

TEST(SmoothingReduce, UnbalancedBaseCanExceedModifiedBound) {
  // A degree-two tooth (1,1) only twists the base: (4,-1) becomes (5,0),
  // which is lexicographically above M_2(4,-1) = (4,1).
  const ReduceResult r = smoothing_reduce(build_comb(S({4, -1}), {Tooth::single(S({1, 1}))}));
  EXPECT_EQ(*r.predicted, S({5, 0}));
  EXPECT_EQ(*r.bound, Partition::of(S({4, 1})));
  EXPECT_FALSE(r.within_bound);
}

TEST(SmoothingReduce, HypothesisChecks) {
  const CombSpec spec = build_comb(S({0, 0}), {Tooth::single(S({1, 0}))}, GluingMode::specified);
  EXPECT_EQ(code_of([&] { smoothing_reduce(spec); }), ErrorCode::hypothesis_violation);
  const CombSpec ok = build_comb(S({0, 0}), {Tooth::single(S({1, 1}))}, GluingMode::specified);
  EXPECT_EQ(*smoothing_reduce(ok).predicted, S({1, 1}));
  EXPECT_EQ(code_of([] { comb_is_balanced_smoothing(build_comb(S({2, 0}), {Tooth::single(S({0, 0}))})); }),
            ErrorCode::hypothesis_violation);
  ReduceOrder bad{{0, 0}, false};
  EXPECT_EQ(code_of([&] { smoothing_reduce(example_comb(2), bad); }), ErrorCode::invalid_input);
}

TEST(SmoothingReduce, OrderIndependence) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const CombSpec c = random_comb(rng, 4, 6, 3, false);
    const SplitType p = *smoothing_reduce(c).predicted;
    ReduceOrder o;
    o.tooth_order.resize(c.tooth_roots.size());
    std::iota(o.tooth_order.begin(), o.tooth_order.end(), 0);
    std::shuffle(o.tooth_order.begin(), o.tooth_order.end(), rng);
    o.reverse_children = true;
    EXPECT_EQ(*smoothing_reduce(c, o).predicted, p);
  }
}

TEST(SmoothingReduce, DegreeAndBalancedBase) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const CombSpec c = random_comb(rng, 4, 6, 3, true);
    const ReduceResult r = smoothing_reduce(c);
    const SplitType& base = c.components[0].type;
    EXPECT_EQ(r.predicted->c1(), base.c1() + r.k);
    EXPECT_TRUE(is_balanced(*r.predicted));
    EXPECT_TRUE(r.within_bound);
    EXPECT_FALSE(r.strict);
  }
}

TEST(CombTreeData, ShapeAndCoordinates) {
  const CombSpec c = example_comb(3);
  const TreeBundleData d = comb_tree_data(c, 4);
  EXPECT_EQ(d.rank, 2);
  ASSERT_EQ(d.nodes.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(d.nodes[i].a, 0);
    EXPECT_EQ(d.nodes[i].coord_a, i + 1);
    EXPECT_EQ(d.nodes[i].coord_b, 1);
  }
  EXPECT_NO_THROW(validate_tree(d));
  EXPECT_EQ(comb_tree_data(c, 4).nodes[1].glue, d.nodes[1].glue);
  EXPECT_EQ(base_twists(c, 3), (std::vector<int>{3, 0, 0, 0}));
}

// The limit bundle on the comb has at least as many sections as the
// predicted smoothing, twist by twist.
TEST(CombTreeData, Semicontinuity) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) {
    const CombSpec c = random_comb(rng, 3, 3, 2, false);
    const SplitType p = *smoothing_reduce(c).predicted;
    const TreeBundleData d = comb_tree_data(c, rng());
    for (int t = -p.max_degree() - 2; t <= -p.min_degree() + 1; ++t)
      EXPECT_GE(tree_cohomology(d, base_twists(c, t)).h0, h_split(p, t).h0);
  }
}

}  // namespace
}  // namespace balcurve
