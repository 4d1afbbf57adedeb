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

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "balcurve/error.hpp"

namespace balcurve {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::precondition_violation: return "precondition-violation";
    case ErrorCode::hypothesis_violation: return "hypothesis-violation";
    case ErrorCode::genericity_failure: return "genericity-failure";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::insufficient_window: return "insufficient-window";
    case ErrorCode::inaccessible: return "inaccessible";
    case ErrorCode::unbalanced_intermediate: return "unbalanced-intermediate";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

SplitType::SplitType(std::vector<int> sorted)
    : degrees_(std::move(sorted)),
      c1_(std::accumulate(degrees_.begin(), degrees_.end(), 0L)) {}

SplitType SplitType::make(std::vector<int> degrees) {
  if (degrees.empty()) fail(ErrorCode::invalid_input, "empty splitting type");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return SplitType(std::move(degrees));
}

std::string SplitType::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out << ',';
    out << degrees_[i];
  }
  out << ')';
  return out.str();
}

long floor_div(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

long ceil_div(long num, long den) { return -floor_div(-num, den); }

BalanceInfo balance_info(const SplitType& s) {
  BalanceInfo info;
  info.balanced = s.max_degree() - s.min_degree() <= 1;
  info.upper_degree = s.max_degree();
  auto d = s.degrees();
  info.upper_rank = static_cast<int>(std::count(d.begin(), d.end(), d.front()));
  info.slope_floor = floor_div(s.c1(), s.rank());
  return info;
}

bool is_balanced(const SplitType& s) {
  return s.max_degree() - s.min_degree() <= 1;
}

bool is_twist_of_trivial(const SplitType& s) {
  return s.max_degree() == s.min_degree();
}

Cohomology h_split(const SplitType& s, int t) {
  Cohomology c;
  for (int a : s.degrees()) {
    long v = static_cast<long>(a) + t + 1;
    if (v > 0) c.h0 += v; else c.h1 -= v;
  }
  return c;
}

SplitType end_bundle(const SplitType& s) {
  std::vector<int> out;
  out.reserve(s.degrees().size() * s.degrees().size());
  for (int a : s.degrees())
    for (int b : s.degrees()) out.push_back(a - b);
  return SplitType::make(std::move(out));
}

SplitType dual(const SplitType& s) {
  std::vector<int> out;
  for (int a : s.degrees()) out.push_back(-a);
  return SplitType::make(std::move(out));
}

SplitType twist(const SplitType& s, int t) {
  std::vector<int> out;
  for (int a : s.degrees()) out.push_back(a + t);
  return SplitType::make(std::move(out));
}

SplitType direct_sum(const SplitType& a, const SplitType& b) {
  std::vector<int> out(a.degrees().begin(), a.degrees().end());
  out.insert(out.end(), b.degrees().begin(), b.degrees().end());
  return SplitType::make(std::move(out));
}

SplitType balanced_type(int rank, long degree) {
  if (rank < 1) fail(ErrorCode::invalid_input, "rank must be positive");
  long b = floor_div(degree, rank);
  long plus = degree - b * rank;
  std::vector<int> out(rank, static_cast<int>(b));
  for (long i = 0; i < plus; ++i) out[i] = static_cast<int>(b + 1);
  return SplitType::make(std::move(out));
}

// Partitions

Partition Partition::of(const SplitType& s) {
  Partition p;
  for (int a : s.degrees()) {
    if (!p.blocks_.empty() && p.blocks_.back().height == a)
      ++p.blocks_.back().width;
    else
      p.blocks_.push_back({a, 1});
  }
  return p;
}

Partition Partition::from_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) fail(ErrorCode::invalid_input, "empty partition");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].width <= 0)
      fail(ErrorCode::invalid_input, "partition widths must be positive");
    if (i && blocks[i].height >= blocks[i - 1].height)
      fail(ErrorCode::invalid_input,
           "partition heights must be strictly decreasing");
  }
  Partition p;
  p.blocks_ = std::move(blocks);
  return p;
}

SplitType Partition::to_split() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.width, b.height);
  return SplitType::make(std::move(out));
}

int Partition::width() const {
  int w = 0;
  for (const auto& b : blocks_) w += b.width;
  return w;
}

long Partition::degree() const {
  long d = 0;
  for (const auto& b : blocks_) d += static_cast<long>(b.height) * b.width;
  return d;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ' ';
    out << blocks_[i].height << '^' << blocks_[i].width;
  }
  out << ']';
  return out.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  SplitType sa = a.to_split();
  SplitType sb = b.to_split();
  auto da = sa.degrees();
  auto db = sb.degrees();
  return std::lexicographical_compare_three_way(da.begin(), da.end(),
                                                db.begin(), db.end());
}

Partition modify_partition(const Partition& p, int k) {
  std::vector<int> d;
  for (const auto& b : p.blocks()) d.insert(d.end(), b.width, b.height);
  // d stays sorted non-increasingly throughout.
  for (; k > 0; --k) {
    // Raise the first of the lowest entries.
    auto it = std::lower_bound(d.begin(), d.end(), d.back(), std::greater<>());
    ++*it;
  }
  for (; k < 0; ++k) {
    // Lower the last of the highest entries.
    auto it = std::upper_bound(d.begin(), d.end(), d.front(), std::greater<>());
    --*std::prev(it);
  }
  return Partition::of(SplitType::make(std::move(d)));
}

SplitType general_modification(const SplitType& s, int colength,
                               Direction direction) {
  if (colength <= 0)
    fail(ErrorCode::invalid_input, "colength must be positive");
  int k = direction == Direction::down ? -colength : colength;
  return modify_partition(Partition::of(s), k).to_split();
}

SplitType general_kernel(const SplitType& s, int m) {
  if (s.rank() < 2)
    fail(ErrorCode::invalid_input, "kernel of a line bundle has rank 0");
  if (!is_balanced(s))
    fail(ErrorCode::precondition_violation, "source must be balanced");
  if (m < s.max_degree())
    fail(ErrorCode::precondition_violation,
         "target degree below the upper degree; no general surjection");
  const long r = s.rank();
  const long b = floor_div(s.c1(), r);
  const long rp = s.c1() - r * b;
  const long ell = m - b;
  const long q = floor_div(ell, r - 1);
  const long p = ell - q * (r - 1);
  std::vector<int> out;
  auto put = [&](long count, long degree) {
    out.insert(out.end(), count, static_cast<int>(degree + b));
  };
  if (p <= rp) {
    put(rp - p, 1 - q);
    put(r - 1 - rp + p, -q);
  } else {
    put(r - 1 - p + rp, -q);
    put(p - rp, -q - 1);
  }
  return SplitType::make(std::move(out));
}

namespace {

// Codimension of a general ideal with generators of the given degrees in
// degree j of k[x,y]: (j+1) minus the truncated Froberg series coefficient.
long ideal_dim(const std::vector<long>& deltas, long j) {
  if (j < 0) return 0;
  if (std::find(deltas.begin(), deltas.end(), 0) != deltas.end()) return j + 1;
  std::vector<long> c(static_cast<std::size_t>(j) + 1, 0);
  c[0] = 1;
  for (long d : deltas)
    for (long i = j; i >= d; --i) c[i] -= c[i - d];
  for (int pass = 0; pass < 2; ++pass)
    for (long i = 1; i <= j; ++i) c[i] += c[i - 1];
  for (long i = 0; i <= j; ++i)
    if (c[i] <= 0) return j + 1;
  return j + 1 - c[j];
}

}  // namespace

SplitType generic_kernel(const SplitType& s, int m) {
  if (s.rank() < 2)
    fail(ErrorCode::invalid_input, "kernel of a line bundle has rank 0");
  std::vector<long> deltas;
  for (int a : s.degrees())
    if (m - a >= 0) deltas.push_back(m - a);
  bool unit = std::find(deltas.begin(), deltas.end(), 0) != deltas.end();
  if (deltas.size() < 2 && !unit)
    fail(ErrorCode::precondition_violation,
         "no surjection onto O(" + std::to_string(m) + ") from " +
             s.to_string());
  const int r = s.rank();
  const long upper = s.max_degree();
  const long c = s.c1() - m;
  // Kernel degrees lie in [c - (r-2) * upper, upper].
  const long lowest = c - static_cast<long>(r - 2) * upper;
  const long t_lo = -upper - 1;
  const long t_hi = -lowest + 1;
  std::vector<long> h0;
  for (long t = t_lo; t <= t_hi; ++t)
    h0.push_back(h_split(s, static_cast<int>(t)).h0 - ideal_dim(deltas, m + t));
  return split_from_h0_profile(static_cast<int>(t_lo), h0, r - 1);
}

SplitType balanced_extension(const SplitType& a, const SplitType& b) {
  if (!is_balanced(a) || !is_balanced(b))
    fail(ErrorCode::precondition_violation, "extension terms must be balanced");
  if (floor_div(a.c1(), a.rank()) != floor_div(b.c1(), b.rank()))
    fail(ErrorCode::precondition_violation,
         "slope floors differ: " + a.to_string() + " and " + b.to_string());
  return balanced_type(a.rank() + b.rank(), a.c1() + b.c1());
}

SplitType split_from_h0_profile(int t_lo, std::span<const long> h0_values,
                                int rank) {
  if (h0_values.size() < 2 || h0_values[0] != 0)
    fail(ErrorCode::invalid_input, "h0 profile must start at zero");
  std::vector<int> out;
  long prev_delta = 0;
  for (std::size_t i = 1; i < h0_values.size(); ++i) {
    long delta = h0_values[i] - h0_values[i - 1];
    long count = delta - prev_delta;
    if (count < 0) fail(ErrorCode::invalid_input, "h0 profile is not convex");
    int t = t_lo + static_cast<int>(i);
    out.insert(out.end(), count, -t);
    prev_delta = delta;
  }
  if (static_cast<int>(out.size()) != rank)
    fail(ErrorCode::invalid_input, "h0 profile does not end with slope " +
                                  std::to_string(rank));
  return SplitType::make(std::move(out));
}

}  // namespace balcurve
