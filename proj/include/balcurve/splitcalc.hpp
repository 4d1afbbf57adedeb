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

#ifndef BALCURVE_SPLITCALC_HPP
#define BALCURVE_SPLITCALC_HPP

// Arithmetic of splitting types of vector bundles on the projective line.
//
// A bundle O(a_1) + ... + O(a_r) is stored by its degree multiset, sorted
// non-increasingly. Everything here is closed-form integer arithmetic; the
// linear-algebra ground truth lives in oracle.hpp.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace balcurve {

class SplitType {
 public:
  /// The trivial line bundle.
  SplitType() : SplitType(std::vector<int>{0}) {}

  /// Sorts `degrees` non-increasingly. Throws invalid_input when empty.
  static SplitType make(std::vector<int> degrees);

  std::span<const int> degrees() const { return degrees_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  long c1() const { return c1_; }
  int max_degree() const { return degrees_.front(); }
  int min_degree() const { return degrees_.back(); }

  /// "(1,1,0)"
  std::string to_string() const;

  friend bool operator==(const SplitType&, const SplitType&) = default;

 private:
  explicit SplitType(std::vector<int> sorted);

  std::vector<int> degrees_;
  long c1_ = 0;
};

struct BalanceInfo {
  bool balanced = false;
  int upper_rank = 0;    // multiplicity of the top degree
  int upper_degree = 0;  // the top degree
  long slope_floor = 0;  // floor(c1 / rank)
};

struct Cohomology {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

BalanceInfo balance_info(const SplitType& s);
bool is_balanced(const SplitType& s);
bool is_twist_of_trivial(const SplitType& s);

/// h0 and h1 of s(t).
Cohomology h_split(const SplitType& s, int t);

/// Hom(s, s): all pairwise differences a_i - a_j.
SplitType end_bundle(const SplitType& s);
SplitType dual(const SplitType& s);
SplitType twist(const SplitType& s, int t);
SplitType direct_sum(const SplitType& a, const SplitType& b);

/// The unique balanced type of the given rank and degree.
SplitType balanced_type(int rank, long degree);

long floor_div(long num, long den);
long ceil_div(long num, long den);

/// Harder-Narasimhan block form: heights strictly decreasing, widths > 0.
class Partition {
 public:
  struct Block {
    int height;
    int width;
    friend bool operator==(const Block&, const Block&) = default;
  };

  static Partition of(const SplitType& s);
  /// Validates heights strictly decreasing and widths positive.
  static Partition from_blocks(std::vector<Block> blocks);

  SplitType to_split() const;
  std::span<const Block> blocks() const { return blocks_; }
  int width() const;
  long degree() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the full non-increasing degree sequence.
  /// Only meaningful between partitions of equal width.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<Block> blocks_;
};

/// M_k: k-fold raise of a lowest column (k > 0) or lowering of a highest
/// column (k < 0). Width is preserved and the degree shifts by k.
Partition modify_partition(const Partition& p, int k);

enum class Direction { down, up };

/// Splitting type of a general elementary modification of total colength
/// `colength`, in general position against every Harder-Narasimhan block.
SplitType general_modification(const SplitType& s, int colength,
                               Direction direction);

/// Kernel of a general surjection from a balanced bundle onto O(m), by the
/// explicit block formulas (with the rank r-1 width correction).
/// Requires rank >= 2 and m >= upper degree.
SplitType general_kernel(const SplitType& s, int m);

/// Kernel of a general map from an arbitrary split bundle to O(m).
///
/// Summands of degree > m split off. For the rest the map is a tuple of
/// general binary forms, whose ideal has the Hilbert function
/// |prod(1 - t^delta_i) / (1 - t)^2|_+, so h0 of every twist of the kernel
/// is known in closed form. Throws precondition_violation when the map is
/// not surjective (fewer than two nonzero forms and no unit among them).
SplitType generic_kernel(const SplitType& s, int m);

/// General extension 0 -> a -> E -> b -> 0 of balanced bundles with equal
/// slope floors: balanced, and it splits.
SplitType balanced_extension(const SplitType& a, const SplitType& b);

/// Recovers the splitting type from h0 values on consecutive twists
/// t_lo, t_lo+1, ...; h0(t_lo) must be 0 and the profile must end with
/// slope `rank`.
SplitType split_from_h0_profile(int t_lo, std::span<const long> h0_values,
                                int rank);

}  // namespace balcurve

#endif  // BALCURVE_SPLITCALC_HPP
