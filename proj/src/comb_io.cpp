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

#include "balcurve/comb_io.hpp"

#include <map>
#include <sstream>

#include "balcurve/error.hpp"

namespace balcurve {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

CombSpec parse_comb(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  GluingMode mode = GluingMode::general;
  std::vector<CombComponent> comps;
  std::map<std::string, int> index;
  std::vector<CombEdge> edges;
  std::map<std::pair<int, int>, std::vector<mpq_class>> glue;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "mode") {
      std::string m;
      ls >> m;
      if (m == "general") mode = GluingMode::general;
      else if (m == "specified" || m == "explicit") mode = GluingMode::specified;
      else parse_fail(line_no, "unknown mode '" + m + "'");
    } else if (kw == "component") {
      std::string id, role;
      if (!(ls >> id >> role)) parse_fail(line_no, "component needs an id and a role");
      if (index.count(id)) parse_fail(line_no, "duplicate component '" + id + "'");
      Role r;
      if (role == "base") r = Role::base;
      else if (role == "tail") r = Role::tail;
      else parse_fail(line_no, "role must be base or tail");
      std::vector<int> degs;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          degs.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          parse_fail(line_no, "bad degree '" + tok + "'");
        }
      }
      if (degs.empty()) parse_fail(line_no, "component without degrees");
      index[id] = static_cast<int>(comps.size());
      comps.push_back({id, r, SplitType::make(degs)});
    } else if (kw == "edge" || kw == "glue") {
      std::string a, b;
      if (!(ls >> a >> b)) parse_fail(line_no, kw + " needs two component ids");
      if (!index.count(a) || !index.count(b)) parse_fail(line_no, "unknown component");
      if (kw == "edge") {
        edges.push_back({index[a], index[b], {}});
      } else {
        std::vector<mpq_class> vals;
        std::string tok;
        while (ls >> tok) {
          try {
            mpq_class v(tok);
            if (sgn(v.get_den()) == 0) throw std::invalid_argument(tok);
            v.canonicalize();
            vals.push_back(v);
          } catch (const std::exception&) {
            parse_fail(line_no, "bad matrix entry '" + tok + "'");
          }
        }
        glue[{index[a], index[b]}] = std::move(vals);
      }
    } else {
      parse_fail(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (comps.empty()) fail(ErrorCode::parse_error, "no components");
  const int rank = comps.front().type.rank();
  for (auto& e : edges) {
    auto it = glue.find({e.parent, e.child});
    if (it == glue.end()) continue;
    if (static_cast<int>(it->second.size()) != rank * rank)
      fail(ErrorCode::parse_error, "glue matrix needs rank^2 entries");
    e.glue.assign(rank, std::vector<mpq_class>(rank));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) e.glue[i][j] = it->second[i * rank + j];
    glue.erase(it);
  }
  if (!glue.empty()) fail(ErrorCode::parse_error, "glue given for a pair that is not an edge");
  return make_comb(rank, mode, std::move(comps), std::move(edges));
}

std::string format_comb(const CombSpec& comb) {
  std::ostringstream out;
  out << "mode " << (comb.mode == GluingMode::general ? "general" : "specified") << '\n';
  for (const auto& c : comb.components) {
    out << "component " << c.id << ' ' << (c.role == Role::base ? "base" : "tail");
    for (int d : c.type.degrees()) out << ' ' << d;
    out << '\n';
  }
  for (const auto& e : comb.edges)
    out << "edge " << comb.components[e.parent].id << ' ' << comb.components[e.child].id << '\n';
  if (comb.mode == GluingMode::specified)
    for (const auto& e : comb.edges) {
      out << "glue " << comb.components[e.parent].id << ' ' << comb.components[e.child].id;
      for (const auto& row : e.glue)
        for (const auto& v : row) out << ' ' << v.get_str();
      out << '\n';
    }
  return out.str();
}

}  // namespace balcurve
