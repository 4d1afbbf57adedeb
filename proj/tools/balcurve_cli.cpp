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

// balcurve-cli: command-line front end over the C interface.
//
// Exit status: 0 success, 1 domain error (or failed verification), 2 usage,
// which includes malformed splitting types and comb files.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "balcurve/balcurve.h"

namespace {

struct Global {
  uint64_t seed = 0;
  std::string field = "prime";
  std::string format = "text";
  std::string output;
};

struct DomainError {
  std::string message;
  int exit_code = 1;
};

using Ctx = std::unique_ptr<bc_context, decltype(&bc_context_free)>;
using Split = std::unique_ptr<bc_split, decltype(&bc_split_free)>;
using Comb = std::unique_ptr<bc_comb, decltype(&bc_comb_free)>;
using Buffer = std::unique_ptr<bc_buffer, decltype(&bc_buffer_free)>;

void check(bc_context* ctx, bc_status st) {
  if (st != BC_OK)
    throw DomainError{std::string(bc_status_string(st)) + ": " + bc_context_last_error(ctx),
                      st == BC_ERR_PARSE ? 2 : 1};
}

Split parse_split(bc_context* ctx, const std::string& text) {
  bc_split* s = nullptr;
  check(ctx, bc_split_parse(ctx, text.c_str(), &s));
  return Split(s, bc_split_free);
}

std::string take(bc_buffer* b) {
  Buffer owned(b, bc_buffer_free);
  return std::string(bc_buffer_data(b), bc_buffer_size(b));
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError{"invalid-input: cannot read " + path, 2};
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_output(const Global& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw DomainError{"invalid-input: cannot write " + g.output, 2};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of vector bundles on rational curves and combs"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--field", g.field, "Oracle field")
      ->check(CLI::IsMember({"prime", "rational"}))
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Output file (default: standard output)");

  std::string degrees, other, op = "info", direction = "down";
  int twist = 0, colength = 1, m = 0;
  auto* split = app.add_subcommand("split", "Splitting-type arithmetic");
  split->add_option("--degrees", degrees, "Degrees, e.g. 1,1,0")->required();
  split->add_option("--op", op, "Operation")
      ->check(CLI::IsMember({"info", "end", "dual", "twist", "partition", "modify",
                             "kernel", "extension"}))
      ->capture_default_str();
  split->add_option("--other", other, "Second type (extension quotient)");
  split->add_option("--twist,-t", twist, "Twist for info and twist")->capture_default_str();
  split->add_option("--colength", colength, "Modification colength")->capture_default_str();
  split->add_option("--direction", direction, "Modification direction")
      ->check(CLI::IsMember({"up", "down"}))
      ->capture_default_str();
  split->add_option("--m", m, "Target degree for kernel; k for partition")->capture_default_str();

  std::string comb_path;
  int tmin = -2, tmax = 2;
  bool emit_comb = false;
  auto* tree = app.add_subcommand("tree", "Reduce a comb and compute its cohomology");
  tree->add_option("--comb", comb_path, "Comb file, or - for standard input")->required();
  tree->add_option("--tmin", tmin, "Lowest base twist")->capture_default_str();
  tree->add_option("--tmax", tmax, "Highest base twist")->capture_default_str();
  tree->add_flag("--emit-comb", emit_comb, "Print the normalized comb file instead");

  int n = 0, d = 0, e = 0, e0 = -1;
  long emin = 1, emax = 0;
  auto* pn = app.add_subcommand("pn", "Normal bundle of a rational curve in P^n");
  pn->add_option("--n", n)->required();
  pn->add_option("--e", e)->required();
  auto* fan = app.add_subcommand("fan", "Degree-n hypersurface in P^n");
  fan->add_option("--n", n)->required();
  fan->add_option("--e", e)->required();
  auto* fang = app.add_subcommand("fang", "Degree-d hypersurface in P^n, d < n");
  fang->add_option("--n", n)->required();
  fang->add_option("--d", d)->required();
  fang->add_option("--e", e)->required();
  fang->add_option("--e0", e0, "Base curve degree (default: smallest that works)");
  auto* interp = app.add_subcommand("interp", "Interpolation table");
  interp->add_option("--n", n)->required();
  interp->add_option("--d", d)->required();
  interp->add_option("--emin", emin)->capture_default_str();
  interp->add_option("--emax", emax)->required();
  int seeds = 20, cases = 20;
  auto* verify = app.add_subcommand("verify", "Closed forms against the oracle");
  verify->add_option("--seeds", seeds)->capture_default_str();
  verify->add_option("--cases", cases, "Cases per seed and check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  const bc_format fmt = g.format == "json" ? BC_FORMAT_JSON
                        : g.format == "csv" ? BC_FORMAT_CSV
                                            : BC_FORMAT_TEXT;
  Ctx ctx(bc_context_new(g.seed, g.field == "rational" ? BC_FIELD_RATIONAL : BC_FIELD_PRIME),
          bc_context_free);
  bc_context* c = ctx.get();
  bc_buffer* buf = nullptr;
  int status = 0;
  try {
    if (split->parsed()) {
      Split a = parse_split(c, degrees);
      Split b(nullptr, bc_split_free);
      if (!other.empty()) b = parse_split(c, other);
      check(c, bc_report_split(c, op.c_str(), a.get(), b.get(), twist, colength,
                               direction == "up" ? BC_UP : BC_DOWN, m, fmt, &buf));
    } else if (tree->parsed()) {
      bc_comb* raw = nullptr;
      check(c, bc_comb_parse(c, read_input(comb_path).c_str(), &raw));
      Comb comb(raw, bc_comb_free);
      if (emit_comb)
        check(c, bc_format_comb(c, comb.get(), &buf));
      else
        check(c, bc_report_tree(c, comb.get(), tmin, tmax, fmt, &buf));
    } else if (pn->parsed()) {
      check(c, bc_report_pn(c, n, e, fmt, &buf));
    } else if (fan->parsed()) {
      check(c, bc_report_fan(c, n, e, fmt, &buf));
    } else if (fang->parsed()) {
      check(c, bc_report_fang(c, n, d, e, e0, fmt, &buf));
    } else if (interp->parsed()) {
      check(c, bc_report_interp(c, n, d, emin, emax, fmt, &buf));
    } else if (verify->parsed()) {
      int passed = 0;
      check(c, bc_report_verify(c, seeds, cases, fmt, &buf, &passed));
      status = passed ? 0 : 1;
    }
    write_output(g, take(buf));
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.message << '\n';
    return err.exit_code;
  }
  return status;
}
