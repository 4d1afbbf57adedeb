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

#include "balcurve/splitcalc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "balcurve/error.hpp"

namespace balcurve {
namespace {

SplitType S(std::vector<int> d) { return SplitType::make(std::move(d)); }

std::vector<int> V(const SplitType& s) { return {s.degrees().begin(), s.degrees().end()}; }

// All non-increasing sequences of the given length with entries in [lo, hi].
void for_each_sorted(int rank, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == rank) {
      f(cur);
      return;
    }
    for (int a = top; a >= lo; --a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(hi);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

TEST(SplitType, SortsAndRecordsDegree) {
  EXPECT_EQ(V(S({0, 1, 1})), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(S({0, 1, 1}).rank(), 3);
  EXPECT_EQ(S({0, 1, 1}).c1(), 2);
  EXPECT_EQ(S({5, 5}).c1(), 10);
  EXPECT_EQ(V(S({-1, 0, 0})), (std::vector<int>{0, 0, -1}));
  EXPECT_EQ(S({-1, 0, 0}).c1(), -1);
  EXPECT_EQ(S({3, -2}).to_string(), "(3,-2)");
}

TEST(SplitType, RejectsEmpty) {
  EXPECT_EQ(code_of([] { S({}); }), ErrorCode::invalid_input);
}

TEST(SplitType, MakeIsIdempotent) {
  const SplitType s = S({2, -1, 4, 0});
  EXPECT_EQ(S(V(s)), s);
}

TEST(BalanceInfo, Examples) {
  BalanceInfo a = balance_info(S({6, 6, 6}));
  EXPECT_TRUE(a.balanced);
  EXPECT_EQ(a.upper_rank, 3);
  EXPECT_EQ(a.upper_degree, 6);
  EXPECT_EQ(a.slope_floor, 6);
  EXPECT_TRUE(is_twist_of_trivial(S({6, 6, 6})));

  BalanceInfo b = balance_info(S({1, 0, 0}));
  EXPECT_TRUE(b.balanced);
  EXPECT_EQ(b.upper_rank, 1);
  EXPECT_EQ(b.upper_degree, 1);
  EXPECT_EQ(b.slope_floor, 0);
  EXPECT_FALSE(is_twist_of_trivial(S({1, 0, 0})));

  EXPECT_FALSE(balance_info(S({2, 0})).balanced);
  EXPECT_EQ(balance_info(S({-1, -2})).slope_floor, -2);
}

TEST(HSplit, Examples) {
  EXPECT_EQ(h_split(S({5, 5}), 0), (Cohomology{12, 0}));
  EXPECT_EQ(h_split(S({-2, -3}), 0), (Cohomology{0, 3}));
  EXPECT_EQ(h_split(S({2, 2, 2}), -3), (Cohomology{0, 0}));
  EXPECT_EQ(h_split(S({3, -4}), 1), (Cohomology{5, 2}));
}

TEST(HSplit, EulerCharacteristic) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const int r = 1 + static_cast<int>(rng() % 6);
    std::vector<int> d(r);
    for (auto& x : d) x = static_cast<int>(rng() % 21) - 10;
    const SplitType s = S(d);
    const int t = static_cast<int>(rng() % 21) - 10;
    const Cohomology h = h_split(s, t);
    EXPECT_EQ(h.h0 - h.h1, s.c1() + static_cast<long>(r) * (t + 1));
    EXPECT_GE(h.h0, 0);
    EXPECT_GE(h.h1, 0);
  }
}

TEST(EndBundle, PairwiseDifferences) {
  EXPECT_EQ(V(end_bundle(S({1, 1, 0}))), (std::vector<int>{1, 1, 0, 0, 0, 0, 0, -1, -1}));
  EXPECT_EQ(V(end_bundle(S({4, 4, 4}))), std::vector<int>(9, 0));
  const SplitType e = end_bundle(S({2, 0}));
  EXPECT_EQ(V(e), (std::vector<int>{2, 0, 0, -2}));
  EXPECT_EQ(h_split(e, 0).h1, 1);
}

TEST(EndBundle, RigidityMatchesBalance) {
  for (int r = 1; r <= 4; ++r)
    for_each_sorted(r, -4, 4, [](const std::vector<int>& d) {
      const SplitType s = S(d);
      EXPECT_EQ(is_balanced(s), h_split(end_bundle(s), 0).h1 == 0) << s.to_string();
    });
}

TEST(Basics, DualTwistSum) {
  EXPECT_EQ(V(dual(S({3, 1, -2}))), (std::vector<int>{2, -1, -3}));
  EXPECT_EQ(V(twist(S({3, 1}), -2)), (std::vector<int>{1, -1}));
  EXPECT_EQ(V(direct_sum(S({1, 0}), S({2}))), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(V(balanced_type(3, 7)), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(V(balanced_type(2, -3)), (std::vector<int>{-1, -2}));
  EXPECT_EQ(code_of([] { balanced_type(0, 1); }), ErrorCode::invalid_input);
}

TEST(Basics, FloorAndCeiling) {
  for (long x = -20; x <= 20; ++x)
    for (long y = 1; y <= 7; ++y) {
      const long q = floor_div(x, y);
      EXPECT_LE(q * y, x);
      EXPECT_GT((q + 1) * y, x);
      const long c = ceil_div(x, y);
      EXPECT_GE(c * y, x);
      EXPECT_LT((c - 1) * y, x);
    }
}

TEST(Partition, RoundTrip) {
  for (int r = 1; r <= 4; ++r)
    for_each_sorted(r, -3, 3, [](const std::vector<int>& d) {
      const Partition p = Partition::of(S(d));
      EXPECT_EQ(V(p.to_split()), d);
      EXPECT_EQ(Partition::of(p.to_split()), p);
      EXPECT_EQ(p.width(), static_cast<int>(d.size()));
    });
  const Partition p = Partition::of(S({3, 3, 1}));
  ASSERT_EQ(p.blocks().size(), 2u);
  EXPECT_EQ(p.blocks()[0], (Partition::Block{3, 2}));
  EXPECT_EQ(p.blocks()[1], (Partition::Block{1, 1}));
  EXPECT_EQ(p.degree(), 7);
}

TEST(Partition, BlockValidation) {
  EXPECT_EQ(code_of([] { Partition::from_blocks({{1, 1}, {1, 2}}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { Partition::from_blocks({{2, 0}}); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { Partition::from_blocks({}); }), ErrorCode::invalid_input);
  EXPECT_EQ(V(Partition::from_blocks({{2, 1}, {-1, 2}}).to_split()), (std::vector<int>{2, -1, -1}));
}

TEST(ModifyPartition, Examples) {
  EXPECT_EQ(modify_partition(Partition::of(S({0, 0, 0})), 2), Partition::of(S({1, 1, 0})));
  EXPECT_EQ(modify_partition(Partition::of(S({2, 1})), -3), Partition::of(S({0, 0})));
  const Partition p = Partition::of(S({4, 2, 2, -1}));
  EXPECT_EQ(modify_partition(p, 0), p);
}

TEST(ModifyPartition, DegreeWidthAndComposition) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int r = 1 + static_cast<int>(rng() % 5);
    std::vector<int> d(r);
    for (auto& x : d) x = static_cast<int>(rng() % 11) - 5;
    const Partition p = Partition::of(S(d));
    const int k1 = static_cast<int>(rng() % 7);
    const int k2 = static_cast<int>(rng() % 7);
    const int sign = rng() % 2 ? 1 : -1;
    const Partition a = modify_partition(p, sign * k1);
    EXPECT_EQ(a.width(), p.width());
    EXPECT_EQ(a.degree(), p.degree() + sign * k1);
    EXPECT_EQ(modify_partition(a, sign * k2), modify_partition(p, sign * (k1 + k2)));
  }
}

// Among all partitions contained in (k < 0) or containing (k > 0) the given
// one with degree shifted by k, the modification is the lexicographically
// smallest.
TEST(ModifyPartition, LexicographicallySmallestNeighbour) {
  for (int r = 1; r <= 3; ++r)
    for_each_sorted(r, -2, 2, [r](const std::vector<int>& d) {
      const Partition p = Partition::of(S(d));
      for (int k = -4; k <= 4; ++k) {
        if (k == 0) continue;
        std::optional<Partition> best;
        for_each_sorted(r, -7, 7, [&](const std::vector<int>& b) {
          long sum = 0;
          bool nested = true;
          for (int i = 0; i < r; ++i) {
            sum += b[i];
            nested = nested && (k < 0 ? b[i] <= d[i] : b[i] >= d[i]);
          }
          if (!nested || sum != p.degree() + k) return;
          const Partition c = Partition::of(S(b));
          if (!best || c < *best) best = c;
        });
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(modify_partition(p, k), *best) << p.to_string() << " k=" << k;
      }
    });
}

TEST(GeneralModification, Examples) {
  EXPECT_EQ(V(general_modification(S({2, 2}), 1, Direction::down)), (std::vector<int>{2, 1}));
  EXPECT_EQ(V(general_modification(S({1, 0, 0}), 2, Direction::down)), (std::vector<int>{0, 0, -1}));
  EXPECT_EQ(V(general_modification(S({0, 0}), 1, Direction::up)), (std::vector<int>{1, 0}));
  EXPECT_EQ(V(general_modification(S({5, 3}), 2, Direction::down)), (std::vector<int>{3, 3}));
  EXPECT_EQ(code_of([] { general_modification(S({1}), 0, Direction::down); }), ErrorCode::invalid_input);
}

TEST(GeneralModification, BalancedCaseSplit) {
  // For balanced E with r+ <= s <= r the upper rank becomes r + r+ - s one
  // degree lower; for s < r+ it drops to r+ - s at the same degree.
  for (int r = 1; r <= 5; ++r)
    for (int rp = 1; rp <= r; ++rp)
      for (int s = 1; s <= r; ++s) {
        std::vector<int> d(r, 2);
        for (int i = rp; i < r; ++i) d[i] = 1;
        const BalanceInfo got = balance_info(general_modification(S(d), s, Direction::down));
        if (s < rp) {
          EXPECT_EQ(got.upper_rank, rp - s);
          EXPECT_EQ(got.upper_degree, 2);
        } else {
          EXPECT_EQ(got.upper_rank, r + rp - s);
          EXPECT_EQ(got.upper_degree, 1);
        }
        EXPECT_TRUE(got.balanced);
      }
}

TEST(GeneralKernel, Examples) {
  EXPECT_EQ(V(general_kernel(S({1, 1}), 1)), (std::vector<int>{1}));
  EXPECT_EQ(V(general_kernel(S({1, 1, 0}), 2)), (std::vector<int>{0, 0}));
  EXPECT_EQ(V(general_kernel(S({2, 2, 2}), 3)), (std::vector<int>{2, 1}));
}

TEST(GeneralKernel, Errors) {
  EXPECT_EQ(code_of([] { general_kernel(S({3}), 3); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([] { general_kernel(S({2, 2}), 1); }), ErrorCode::precondition_violation);
  EXPECT_EQ(code_of([] { general_kernel(S({3, 1}), 3); }), ErrorCode::precondition_violation);
}

TEST(GeneralKernel, RankDegreeBalance) {
  for (int r = 2; r <= 6; ++r)
    for (long c = -12; c <= 12; ++c) {
      const SplitType s = balanced_type(r, c);
      for (int m = s.max_degree(); m <= s.max_degree() + 8; ++m) {
        const SplitType k = general_kernel(s, m);
        EXPECT_EQ(k.rank(), r - 1);
        EXPECT_EQ(k.c1(), s.c1() - m);
        EXPECT_TRUE(is_balanced(k));
        EXPECT_EQ(generic_kernel(s, m), k) << s.to_string() << " m=" << m;
      }
    }
}

TEST(GenericKernel, UnbalancedSources) {
  // Summands of degree above m split off unchanged.
  EXPECT_EQ(V(generic_kernel(S({5, 0, 0}), 2)), (std::vector<int>{5, -2}));
  EXPECT_EQ(V(generic_kernel(S({0, 0}), 2)), (std::vector<int>{-2}));
  EXPECT_EQ(V(generic_kernel(S({3, 0, 0}), 3)), (std::vector<int>{0, 0}));
  EXPECT_EQ(code_of([] { generic_kernel(S({5, 0}), 2); }), ErrorCode::precondition_violation);
  EXPECT_EQ(code_of([] { generic_kernel(S({0}), 2); }), ErrorCode::invalid_input);
}

TEST(BalancedExtension, Examples) {
  EXPECT_EQ(V(balanced_extension(S({0, 0}), S({0, 0, 0}))), std::vector<int>(5, 0));
  EXPECT_EQ(V(balanced_extension(S({1, 0}), S({1, 1, 0}))), (std::vector<int>{1, 1, 1, 0, 0}));
  EXPECT_EQ(V(balanced_extension(S({4}), S({4}))), (std::vector<int>{4, 4}));
}

TEST(BalancedExtension, Preconditions) {
  EXPECT_EQ(code_of([] { balanced_extension(S({1}), S({0})); }), ErrorCode::precondition_violation);
  EXPECT_EQ(code_of([] { balanced_extension(S({2, 0}), S({1})); }), ErrorCode::precondition_violation);
}

TEST(ProfileInversion, Examples) {
  std::vector<long> p;
  for (int t = -5; t <= 2; ++t) p.push_back(h_split(S({3, 3}), t).h0);
  EXPECT_EQ(V(split_from_h0_profile(-5, p, 2)), (std::vector<int>{3, 3}));

  std::vector<long> q;
  for (int t = -3; t <= 3; ++t) q.push_back(std::max(0, t + 2) + std::max(0, t));
  EXPECT_EQ(V(split_from_h0_profile(-3, q, 2)), (std::vector<int>{1, -1}));

  const std::vector<long> bumpy{0, 2, 3, 5};
  EXPECT_EQ(code_of([&] { split_from_h0_profile(0, bumpy, 2); }), ErrorCode::invalid_input);
}

}  // namespace
}  // namespace balcurve
