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

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

#include "balcurve/error.hpp"
#include "linalg.hpp"

namespace balcurve {

int CombSpec::base_index() const {
  if (!single_base) fail(ErrorCode::invalid_input, "comb has more than one base component");
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].role == Role::base) return static_cast<int>(i);
  fail(ErrorCode::internal, "comb without base");
}

long CombSpec::total_tooth_degree() const {
  return std::accumulate(tooth_degrees.begin(), tooth_degrees.end(), 0L);
}

Tooth Tooth::chain(std::vector<SplitType> comps) {
  Tooth t{std::move(comps), {}};
  for (int i = 1; i < static_cast<int>(t.components.size()); ++i)
    t.edges.emplace_back(i - 1, i);
  return t;
}

namespace {

bool valid_glue(const std::vector<std::vector<mpq_class>>& g, int rank) {
  if (static_cast<int>(g.size()) != rank) return false;
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != rank) return false;
  detail::Matrix<mpq_class> inv;
  return detail::invert(g, inv);
}

}  // namespace

CombSpec make_comb(int rank, GluingMode mode,
                   std::vector<CombComponent> components,
                   std::vector<CombEdge> edges) {
  const int n = static_cast<int>(components.size());
  if (n == 0) fail(ErrorCode::invalid_input, "comb has no components");
  if (rank < 1) fail(ErrorCode::invalid_input, "rank must be positive");
  for (const auto& c : components)
    if (c.type.rank() != rank)
      fail(ErrorCode::invalid_input, "component " + c.id + " has rank " +
                                         std::to_string(c.type.rank()) +
                                         ", expected " + std::to_string(rank));
  if (static_cast<int>(edges.size()) != n - 1)
    fail(ErrorCode::invalid_input, "a tree needs exactly one edge fewer than components");

  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  std::vector<std::vector<int>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.parent < 0 || ed.parent >= n || ed.child < 0 || ed.child >= n ||
        ed.parent == ed.child)
      fail(ErrorCode::invalid_input, "edge refers to a bad component");
    if (find(ed.parent) == find(ed.child))
      fail(ErrorCode::invalid_input, "comb topology has a cycle");
    uf[find(ed.parent)] = find(ed.child);
    adj[ed.parent].push_back(static_cast<int>(e));
    adj[ed.child].push_back(static_cast<int>(e));
    if (mode == GluingMode::specified && !valid_glue(ed.glue, rank))
      fail(ErrorCode::invalid_input, "specified gluing needs an invertible matrix on every edge");
  }

  int bases = 0, base_edges = 0;
  for (const auto& c : components) bases += c.role == Role::base;
  if (bases == 0) fail(ErrorCode::invalid_input, "comb has no base component");
  for (const auto& ed : edges)
    base_edges += components[ed.parent].role == Role::base &&
                  components[ed.child].role == Role::base;
  if (base_edges != bases - 1)
    fail(ErrorCode::invalid_input, "base components must form a connected tree");

  CombSpec comb;
  comb.rank = rank;
  comb.mode = mode;
  comb.parent.assign(n, -1);
  comb.tooth_of.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (components[i].role == Role::base) {
      seen[i] = true;
      q.push(i);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : adj[v]) {
      auto& ed = edges[e];
      int w = ed.parent == v ? ed.child : ed.parent;
      if (seen[w]) continue;
      seen[w] = true;
      if (ed.parent != v) {
        std::swap(ed.parent, ed.child);
        if (mode == GluingMode::specified) {
          detail::Matrix<mpq_class> inv;
          detail::invert(ed.glue, inv);
          ed.glue = std::move(inv);
        }
      }
      comb.parent[w] = v;
      if (components[v].role == Role::base) {
        comb.tooth_of[w] = static_cast<int>(comb.tooth_roots.size());
        comb.tooth_roots.push_back(w);
        comb.tooth_degrees.push_back(0);
      } else {
        comb.tooth_of[w] = comb.tooth_of[v];
      }
      q.push(w);
    }
  }

  comb.teeth_balanced = true;
  comb.tooth_gluing_ok.assign(comb.tooth_roots.size(), true);
  for (int i = 0; i < n; ++i) {
    const int t = comb.tooth_of[i];
    if (t < 0) continue;
    comb.tooth_degrees[t] += components[i].type.c1();
    if (!is_balanced(components[i].type))
      fail(ErrorCode::hypothesis_violation,
           "tooth component " + components[i].id + " " +
               components[i].type.to_string() + " is not balanced");
    if (mode == GluingMode::specified && !is_twist_of_trivial(components[i].type))
      comb.tooth_gluing_ok[t] = false;
  }
  comb.single_base = bases == 1;
  comb.components = std::move(components);
  comb.edges = std::move(edges);
  return comb;
}

CombSpec build_comb(const SplitType& base, const std::vector<Tooth>& teeth,
                    GluingMode mode) {
  std::vector<CombComponent> comps{{"B", Role::base, base}};
  std::vector<CombEdge> edges;
  for (std::size_t t = 0; t < teeth.size(); ++t) {
    const int offset = static_cast<int>(comps.size());
    const auto& tooth = teeth[t];
    if (tooth.components.empty())
      fail(ErrorCode::invalid_input, "tooth without components");
    for (std::size_t i = 0; i < tooth.components.size(); ++i)
      comps.push_back({"T" + std::to_string(t + 1) + "." + std::to_string(i + 1),
                       Role::tail, tooth.components[i]});
    edges.push_back({0, offset, {}});
    for (auto [p, c] : tooth.edges) edges.push_back({offset + p, offset + c, {}});
  }
  if (mode == GluingMode::specified) {
    for (auto& e : edges) {
      e.glue.assign(base.rank(), std::vector<mpq_class>(base.rank(), 0));
      for (int i = 0; i < base.rank(); ++i) e.glue[i][i] = 1;
    }
  }
  return make_comb(base.rank(), mode, std::move(comps), std::move(edges));
}

ReduceResult smoothing_reduce(const CombSpec& comb, const ReduceOrder& order) {
  if (!comb.teeth_balanced)
    fail(ErrorCode::hypothesis_violation, "tooth components must be balanced");
  for (std::size_t t = 0; t < comb.tooth_gluing_ok.size(); ++t)
    if (!comb.tooth_gluing_ok[t])
      fail(ErrorCode::hypothesis_violation,
           "tooth " + std::to_string(t + 1) +
               " has specified gluing but a component that is not a twist of the trivial bundle");
  const int n = static_cast<int>(comb.components.size());
  const int r = comb.rank;
  const int teeth = static_cast<int>(comb.tooth_roots.size());

  std::vector<int> tooth_order = order.tooth_order;
  if (tooth_order.empty()) {
    tooth_order.resize(teeth);
    std::iota(tooth_order.begin(), tooth_order.end(), 0);
  }
  {
    std::vector<int> sorted = tooth_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(teeth);
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) fail(ErrorCode::invalid_input, "tooth order is not a permutation");
  }

  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i)
    if (comb.parent[i] >= 0) children[comb.parent[i]].push_back(i);
  if (order.reverse_children)
    for (auto& c : children) std::reverse(c.begin(), c.end());

  std::vector<SplitType> cur;
  for (const auto& c : comb.components) cur.push_back(c.type);

  ReduceResult res;
  res.root_twists.assign(teeth, 0);
  std::function<void(int)> eliminate = [&](int f) {
    for (int c : children[f]) eliminate(c);
    const SplitType& type = cur[f];
    if (!is_balanced(type))
      fail(ErrorCode::internal, "tail component became unbalanced during reduction");
    const BalanceInfo info = balance_info(type);
    const int p = comb.parent[f];
    ReduceStep step{f, p, info.upper_degree, r - info.upper_rank};
    cur[p] = twist(cur[p], info.upper_degree);
    if (step.corank > 0) cur[p] = general_modification(cur[p], step.corank, Direction::down);
    if (comb.components[p].role == Role::base) res.root_twists[comb.tooth_of[f]] += info.upper_degree;
    res.steps.push_back(step);
  };
  for (int t : tooth_order) eliminate(comb.tooth_roots[t]);

  for (int i = 0; i < n; ++i)
    if (comb.components[i].role == Role::base) {
      res.base_components.push_back(i);
      res.base_types.push_back(cur[i]);
    }
  res.k = comb.total_tooth_degree();
  if (comb.single_base) {
    const SplitType& base = comb.components[comb.base_index()].type;
    res.predicted = res.base_types.front();
    if (res.predicted->c1() != base.c1() + res.k)
      fail(ErrorCode::internal, "degree not conserved by the reduction");
    res.bound = modify_partition(Partition::of(base), static_cast<int>(res.k));
    const Partition got = Partition::of(*res.predicted);
    res.within_bound = got <= *res.bound;
    res.strict = got < *res.bound;
  }
  return res;
}

bool comb_is_balanced_smoothing(const CombSpec& comb) {
  const int b = comb.base_index();
  if (!is_balanced(comb.components[b].type))
    fail(ErrorCode::hypothesis_violation, "base component must be balanced");
  return is_balanced(*smoothing_reduce(comb).predicted);
}

TreeBundleData comb_tree_data(const CombSpec& comb, std::uint64_t seed,
                              const OracleOptions& options) {
  TreeBundleData d;
  d.rank = comb.rank;
  for (const auto& c : comb.components)
    d.components.emplace_back(c.type.degrees().begin(), c.type.degrees().end());
  std::vector<long> next(comb.components.size(), 1);
  std::mt19937_64 rng(seed);
  const long range = 1L << 20;
  for (const auto& e : comb.edges) {
    TreeBundleData::Node node;
    node.a = e.parent;
    node.b = e.child;
    node.coord_a = next[e.parent]++;
    node.coord_b = next[e.child]++;
    if (comb.mode == GluingMode::specified) {
      node.glue = e.glue;
    } else {
      bool ok = false;
      for (int attempt = 0; attempt < std::max(1, options.retry_budget) && !ok; ++attempt) {
        node.glue.assign(comb.rank, std::vector<mpq_class>(comb.rank));
        for (auto& row : node.glue)
          for (auto& v : row)
            v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
        ok = valid_glue(node.glue, comb.rank);
      }
      if (!ok) fail(ErrorCode::genericity_failure, "no invertible gluing found");
    }
    d.nodes.push_back(std::move(node));
  }
  return d;
}

std::vector<int> base_twists(const CombSpec& comb, int t) {
  std::vector<int> tw(comb.components.size(), 0);
  for (std::size_t i = 0; i < tw.size(); ++i)
    if (comb.components[i].role == Role::base) tw[i] = t;
  return tw;
}

CombSpec example_comb(int teeth) { return example_comb2(0, 0, teeth); }

CombSpec example_comb2(int a1, int a2, int teeth) {
  std::vector<Tooth> ts(teeth, Tooth::single(SplitType::make({0, -1})));
  return build_comb(SplitType::make({a1, a2}), ts);
}

}  // namespace balcurve
