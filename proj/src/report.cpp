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

#include "balcurve/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

#include "balcurve/comb_io.hpp"
#include "balcurve/error.hpp"

namespace balcurve {

using Json = nlohmann::ordered_json;

namespace {

Json degrees(const SplitType& s) {
  return Json(std::vector<int>(s.degrees().begin(), s.degrees().end()));
}

bool is_int_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_int_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].dump();
    return s + ")";
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !is_int_array(j) && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, scalar(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const Json& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream out;
  if (format == Format::csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) {
      if (v.find('\n') != std::string::npos)
        out << k << ":\n" << v;
      else
        out << k << ": " << v << '\n';
    }
  }
  return out.str();
}

Json header(const std::string& kind, const ReportOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["seed"] = opts.seed;
  j["field"] = opts.field == FieldKind::prime ? "prime" : "rational";
  return j;
}

OracleOptions oracle_options(const ReportOptions& opts) {
  OracleOptions o;
  o.field = opts.field;
  return o;
}

Json reduction_json(const ReduceResult& r) {
  Json j;
  Json bases = Json::array();
  for (std::size_t i = 0; i < r.base_types.size(); ++i)
    bases.push_back({{"component", r.base_components[i]}, {"type", degrees(r.base_types[i])}});
  j["base_types"] = bases;
  j["root_twists"] = r.root_twists;
  j["k"] = r.k;
  if (r.predicted) {
    j["predicted"] = degrees(*r.predicted);
    j["balanced"] = is_balanced(*r.predicted);
    j["bound"] = degrees(r.bound->to_split());
    j["within_bound"] = r.within_bound;
    j["strict"] = r.strict;
  }
  return j;
}

}  // namespace

std::string report_split(const SplitQuery& q, const ReportOptions& opts) {
  Json doc = header("split", opts);
  doc["op"] = q.op;
  doc["input"] = degrees(q.a);
  const OracleOptions oo = oracle_options(opts);
  if (q.op == "info") {
    const BalanceInfo info = balance_info(q.a);
    const Cohomology h = h_split(q.a, q.twist);
    doc["rank"] = q.a.rank();
    doc["c1"] = q.a.c1();
    doc["balanced"] = info.balanced;
    doc["upper_rank"] = info.upper_rank;
    doc["upper_degree"] = info.upper_degree;
    doc["slope_floor"] = info.slope_floor;
    doc["twist"] = q.twist;
    doc["h0"] = h.h0;
    doc["h1"] = h.h1;
    doc["partition"] = Partition::of(q.a).to_string();
    doc["end_h1"] = h_split(end_bundle(q.a), 0).h1;
  } else if (q.op == "end") {
    const SplitType e = end_bundle(q.a);
    doc["result"] = degrees(e);
    doc["h1"] = h_split(e, 0).h1;
  } else if (q.op == "dual") {
    doc["result"] = degrees(dual(q.a));
  } else if (q.op == "twist") {
    doc["twist"] = q.twist;
    doc["result"] = degrees(twist(q.a, q.twist));
  } else if (q.op == "partition") {
    const Partition p = Partition::of(q.a);
    doc["partition"] = p.to_string();
    doc["k"] = q.m;
    const Partition mk = modify_partition(p, q.m);
    doc["modified"] = mk.to_string();
    doc["result"] = degrees(mk.to_split());
  } else if (q.op == "modify") {
    const SplitType closed = general_modification(q.a, q.colength, q.direction);
    std::vector<ModPoint> pts;
    for (int i = 0; i < q.colength; ++i) pts.push_back({i + 1, 1, q.direction});
    const SplitType oracle = modification_splitting(q.a, pts, opts.seed, oo);
    doc["colength"] = q.colength;
    doc["direction"] = q.direction == Direction::down ? "down" : "up";
    doc["result"] = degrees(closed);
    doc["oracle"] = degrees(oracle);
    doc["agree"] = closed == oracle;
  } else if (q.op == "kernel") {
    doc["m"] = q.m;
    const SplitType closed = generic_kernel(q.a, q.m);
    doc["result"] = degrees(closed);
    if (is_balanced(q.a) && q.m >= q.a.max_degree())
      doc["balanced_formula"] = degrees(general_kernel(q.a, q.m));
    const PolyMorphism phi =
        general_morphism(q.a, SplitType::make({q.m}), opts.seed, true, oo);
    const SplitType oracle = kernel_splitting(phi, oo);
    doc["oracle"] = degrees(oracle);
    doc["agree"] = closed == oracle;
  } else if (q.op == "extension") {
    if (!q.b) fail(ErrorCode::invalid_input, "extension needs a second splitting type");
    doc["other"] = degrees(*q.b);
    const SplitType closed = balanced_extension(q.a, *q.b);
    const SplitType oracle = extension_splitting(q.a, *q.b, opts.seed, oo);
    doc["result"] = degrees(closed);
    doc["oracle"] = degrees(oracle);
    doc["agree"] = closed == oracle;
  } else {
    fail(ErrorCode::invalid_input, "unknown split operation '" + q.op + "'");
  }
  return render(doc, opts.format);
}

std::string report_tree(const CombSpec& comb, int t_lo, int t_hi,
                        const ReportOptions& opts) {
  if (t_hi < t_lo) fail(ErrorCode::invalid_input, "empty twist range");
  Json doc = header("tree", opts);
  doc["rank"] = comb.rank;
  doc["components"] = comb.components.size();
  doc["teeth"] = comb.tooth_roots.size();
  doc["tooth_degrees"] = comb.tooth_degrees;
  std::optional<ReduceResult> red;
  try {
    red = smoothing_reduce(comb);
    doc["reduction"] = reduction_json(*red);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::hypothesis_violation) throw;
    doc["reduction"] = {{"error", e.what()}};
  }
  const OracleOptions oo = oracle_options(opts);
  const TreeBundleData data = comb_tree_data(comb, opts.seed, oo);
  Json rows = Json::array();
  bool semicontinuous = true;
  for (int t = t_lo; t <= t_hi; ++t) {
    const std::vector<int> tw = base_twists(comb, t);
    const Cohomology h = tree_cohomology(data, tw, oo);
    Json row = {{"t", t}, {"h0", h.h0}, {"h1", h.h1}};
    if (red && red->predicted) {
      const long p = h_split(*red->predicted, t).h0;
      row["predicted_h0"] = p;
      semicontinuous = semicontinuous && h.h0 >= p;
    }
    rows.push_back(row);
  }
  doc["cohomology"] = rows;
  if (red && red->predicted) doc["semicontinuous"] = semicontinuous;
  const TreeBundleData end = end_tree(data);
  const Cohomology he = tree_cohomology(end, {}, oo);
  doc["end"] = {{"h0", he.h0}, {"h1", he.h1}, {"chi", tree_euler_characteristic(end)}};
  doc["comb"] = format_comb(comb);
  return render(doc, opts.format);
}

std::string report_pipeline(const PipelineRecord& rec, const ReportOptions& opts) {
  Json doc = header(rec.kind, opts);
  Json params;
  for (const auto& [k, v] : rec.parameters) params[k] = v;
  doc["parameters"] = params;
  Json inter;
  for (const auto& [k, v] : rec.intermediates) inter[k] = degrees(v);
  doc["intermediates"] = inter;
  doc["assumptions"] = rec.assumptions;
  if (rec.reduction) doc["reduction"] = reduction_json(*rec.reduction);
  doc["predicted"] = degrees(rec.predicted);
  doc["rank"] = rec.predicted.rank();
  doc["degree"] = rec.predicted.c1();
  doc["certified"] = rec.certified;
  return render(doc, opts.format);
}

std::string report_interp(const InterpTable& t, const ReportOptions& opts) {
  if (opts.format == Format::csv) {
    std::ostringstream out;
    out << "n,d,e,q_max,point_minimal,accessible,e0,interpolating\n";
    for (const auto& r : t.rows) {
      out << t.n << ',' << t.d << ',' << r.e << ',' << r.q_max << ','
          << r.point_minimal << ',' << r.accessible << ',';
      if (r.e0) out << *r.e0;
      out << ',' << r.interpolating << '\n';
    }
    return out.str();
  }
  Json doc = header("interp", opts);
  doc["n"] = t.n;
  doc["d"] = t.d;
  doc["e_lo"] = t.e_lo;
  doc["e_hi"] = t.e_hi;
  doc["first_accessible"] = t.first_accessible;
  doc["accessible_modulus"] = t.accessible_modulus;
  doc["accessible_residues"] = t.accessible_residues;
  doc["accessible_class_count"] = t.accessible_residues.size();
  doc["reference_class_count"] = t.reference_class_count;
  doc["interpolating_modulus"] = t.interpolating_modulus;
  doc["interpolating_q_residues"] = t.interpolating_q_residues;
  doc["interpolating_class_count"] = t.interpolating_q_residues.size();
  doc["period"] = t.period;
  if (opts.format == Format::json) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json row = {{"e", r.e}, {"q_max", r.q_max}, {"point_minimal", r.point_minimal},
                  {"accessible", r.accessible}};
      row["e0"] = r.e0 ? Json(*r.e0) : Json(nullptr);
      row["interpolating"] = r.interpolating;
      rows.push_back(row);
    }
    doc["rows"] = rows;
    doc["interpolating_q"] = t.interpolating_q;
    return render(doc, Format::json);
  }
  std::ostringstream out;
  out << render(doc, Format::text);
  out << "interpolating_q:";
  for (long q : t.interpolating_q) out << ' ' << q;
  out << "\n\n   e  q_max  pm  acc   e0  interp\n";
  for (const auto& r : t.rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%4ld  %5ld  %2d  %3d  %3s  %6d\n", r.e, r.q_max,
                  r.point_minimal, r.accessible,
                  r.e0 ? std::to_string(*r.e0).c_str() : "-", r.interpolating);
    out << line;
  }
  return out.str();
}

std::string report_verify(const VerifyReport& r, const ReportOptions& opts) {
  Json doc = header("verify", opts);
  doc["seeds"] = r.seeds;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"cases", c.cases}, {"mismatches", c.mismatches}};
    if (!c.failures.empty()) j["failures"] = c.failures;
    checks.push_back(j);
  }
  doc["checks"] = checks;
  doc["passed"] = r.passed();
  if (opts.format != Format::text) return render(doc, opts.format);
  std::ostringstream out;
  out << "verify: seed " << r.seed << ", " << r.seeds << " seeds\n";
  for (const auto& c : r.checks) {
    out << (c.mismatches == 0 ? "ok    " : "FAIL  ") << c.name << "  " << c.cases
        << " cases, " << c.mismatches << " mismatches\n";
    for (const auto& f : c.failures) out << "      " << f << "\n";
  }
  out << (r.passed() ? "all checks passed\n" : "some checks failed\n");
  return out.str();
}

}  // namespace balcurve
