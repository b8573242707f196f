/*
 * Copyright 2026 The ghnets Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ghnets/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "ghnets/errors.hpp"
#include "ghnets/gh_solver.hpp"
#include "ghnets/harness.hpp"
#include "ghnets/homotopy.hpp"
#include "ghnets/io.hpp"

namespace ghnets::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string certificate;
  std::string window;
  std::string grid;
  std::string lam;
  std::string method = "auto";
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t cell_limit = kExhaustiveCellLimit;
  // verify / experiment
  std::vector<std::string> suites;
  std::string experiment;
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  std::size_t min_count = 1;
  std::size_t max_count = 6;
  std::string min_separation = "0";
  long max_denominator = 64;
  std::string sizes = "2,3,4,5,6,7,8";
  std::size_t k = 5;
  std::string factor = "2";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

io::Space load_space(const std::string& path) { return io::parse_space(read_file(path), path); }

Scalar option_scalar(const std::string& text, const std::string& flag) {
  try {
    return Scalar::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(flag, e.what());
  }
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  return parts;
}

Window option_window(const std::string& text) {
  const auto parts = split(text);
  if (parts.size() != 2) throw ParseError("--window", "expected lo,hi");
  const Scalar lo = option_scalar(parts[0], "--window"), hi = option_scalar(parts[1], "--window");
  if (!(lo < hi)) throw ParseError("--window", "expected lo < hi");
  return Window(lo, hi);
}

/// Default window: the hull of X widened by 1 on each side.
Window window_for(const Options& o, const PointSet& x) {
  if (!o.window.empty()) return option_window(o.window);
  return Window(x.front() - Scalar(1), x.back() + Scalar(1));
}

PointSet point_set(const io::Space& s, const std::string& path) {
  if (const auto* p = std::get_if<PointSet>(&s)) return *p;
  if (const auto* g = std::get_if<io::Grid>(&s)) return g->points();
  throw ParseError(path, std::string("expected a points or grid document, got ") + io::kind_name(s));
}

std::string pair_list(const std::vector<IndexPair>& pairs) {
  std::string s;
  for (const auto& [i, j] : pairs) s += (s.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(j);
  return s;
}

/// Writes to the -o path when given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ParseError(o.output, "cannot write file");
  f << text;
}

int dist_h(const Options& o, std::ostream& out) {
  const IntervalUnion a = io::as_interval_union(load_space(o.inputs.at(0)));
  const IntervalUnion b = io::as_interval_union(load_space(o.inputs.at(1)));
  emit(o, out, hausdorff(a, b).to_string() + "\n");
  return kExitOk;
}

int dist_gh(const Options& o, std::ostream& out) {
  const io::Space xs = load_space(o.inputs.at(0)), ys = load_space(o.inputs.at(1));
  const FiniteMetricSpace x = io::as_metric_space(xs), y = io::as_metric_space(ys);
  const bool exhaustive = o.method == "exact" || (o.method == "auto" && x.size() * y.size() <= o.cell_limit);
  const GHResult r = exhaustive ? gh_exact(x, y, o.method == "exact" ? std::max(o.cell_limit, x.size() * y.size()) : o.cell_limit)
                                : gh_branch_bound(x, y, o.budget);
  const DistortionCertificate cert = distortion(r.incumbent.relation(), x, y);
  std::ostringstream s;
  s << "status " << (r.exact ? "exact" : "bounds-only (node budget exhausted)") << '\n'
    << "method " << (exhaustive ? "exhaustive" : "branch-and-bound") << '\n'
    << "lower " << r.lower << '\n'
    << "upper " << r.upper << '\n'
    << "exact " << (r.exact ? r.exact->to_string() : std::string("none")) << '\n'
    << "distortion " << cert.value << '\n'
    << "witness " << pair_list({cert.first, cert.second}) << '\n'
    << "correspondence " << pair_list(r.incumbent.pairs()) << '\n';
  if (!o.certificate.empty()) {
    std::ofstream f(o.certificate, std::ios::binary);
    if (!f) throw ParseError(o.certificate, "cannot write file");
    f << io::dump(io::certificate_to_json(xs, ys, r));
    s << "certificate " << o.certificate << '\n';
  }
  emit(o, out, s.str());
  return kExitOk;
}

int contract_cmd(const Options& o, std::ostream& out) {
  const PointSet x = point_set(load_space(o.inputs.at(0)), o.inputs.at(0));
  const HomotopyParam lam(option_scalar(o.lam, "--lam"));
  emit(o, out, io::print_space(contract(x, lam, window_for(o, x))));
  return kExitOk;
}

int trace_cmd(const Options& o, std::ostream& out) {
  const PointSet x = point_set(load_space(o.inputs.at(0)), o.inputs.at(0));
  std::vector<HomotopyParam> grid;
  for (const auto& t : split(o.grid)) grid.emplace_back(option_scalar(t, "--grid"));
  std::ostringstream s;
  write_trace_csv(s, trace(x, window_for(o, x), grid));
  emit(o, out, s.str());
  return kExitOk;
}

harness::GeneratorConfig generator_config(const Options& o) {
  harness::GeneratorConfig cfg;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.min_count = o.min_count;
  cfg.max_count = o.max_count;
  cfg.min_separation = option_scalar(o.min_separation, "--min-separation");
  cfg.max_denominator = o.max_denominator;
  if (!o.window.empty()) cfg.window = option_window(o.window);
  return cfg;
}

int verify(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : o.suites) {
    if (s == "all") {
      for (const auto& p : harness::properties()) {
        if (p.theorem_backed) names.push_back(p.name);
      }
    } else {
      harness::property(s);
      names.push_back(s);
    }
  }
  const harness::GeneratorConfig cfg = generator_config(o);
  io::Json reports = io::Json::array();
  bool passed = true;
  for (const auto& n : names) {
    const harness::SuiteReport r = harness::run_suite(n, cfg);
    passed = passed && r.passed();
    reports.push_back(harness::report_to_json(r));
  }
  emit(o, out, io::dump(io::Json{{"status", passed ? "pass" : "fail"}, {"reports", std::move(reports)}}));
  return passed ? kExitOk : kExitSuiteFailed;
}

int experiment(const Options& o, std::ostream& out) {
  std::ostringstream s;
  if (o.experiment == "homothety") {
    std::vector<std::size_t> sizes;
    for (const auto& t : split(o.sizes)) {
      const Scalar n = option_scalar(t, "--sizes");
      if (!n.is_integer() || n.sign() < 0) throw ParseError("--sizes", "expected non-negative integers");
      sizes.push_back(static_cast<std::size_t>(n.numerator().get_ui()));
    }
    harness::write_experiment_csv(s, harness::homothety_experiment(option_scalar(o.lam.empty() ? "3/2" : o.lam, "--lam"),
                                                                   sizes, o.budget));
  } else if (o.experiment == "geometric-progression") {
    harness::write_experiment_csv(
        s, harness::geometric_progression_experiment(o.k, option_scalar(o.factor, "--factor"), o.budget));
  } else if (o.experiment == "lambda-bound-search") {
    const harness::SuiteReport r = harness::lambda_bound_counterexample_search(generator_config(o));
    emit(o, out, io::dump(harness::report_to_json(r)));
    return r.failures.empty() ? kExitOk : kExitSuiteFailed;
  } else {
    throw ParseError("experiment", "unknown experiment \"" + o.experiment +
                                       "\" (expected homothety, geometric-progression or lambda-bound-search)");
  }
  emit(o, out, s.str());
  return kExitOk;
}

void add_output(CLI::App* sub, Options& o) { sub->add_option("-o,--output", o.output, "Write the result here instead of stdout"); }

void add_generator(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Generator seed");
  sub->add_option("--cases", o.cases, "Cases per suite (0 = suite default)");
  sub->add_option("--window", o.window, "Window lo,hi");
  sub->add_option("--min-count", o.min_count, "Smallest generated point count");
  sub->add_option("--max-count", o.max_count, "Largest generated point count");
  sub->add_option("--min-separation", o.min_separation, "Smallest gap between generated points");
  sub->add_option("--max-denominator", o.max_denominator, "Denominator bound for generated coordinates");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Hausdorff and Gromov-Hausdorff distances on the line", "ghnets"};
  app.require_subcommand(1);

  auto* dh = app.add_subcommand("dist-h", "Hausdorff distance between two subsets of the line");
  dh->add_option("inputs", o.inputs, "Two space documents")->required()->expected(2);
  add_output(dh, o);

  auto* dgh = app.add_subcommand("dist-gh", "Gromov-Hausdorff distance between two finite spaces");
  dgh->add_option("inputs", o.inputs, "Two space documents (points, grid or matrix)")->required()->expected(2);
  dgh->add_option("--method", o.method, "auto, exact or bb")->check(CLI::IsMember({"auto", "exact", "bb"}));
  dgh->add_option("--budget", o.budget, "Node budget for branch and bound");
  dgh->add_option("--cell-limit", o.cell_limit, "Largest |X||Y| solved exhaustively under --method auto");
  dgh->add_option("--certificate", o.certificate, "Write a JSON certificate here");
  add_output(dgh, o);

  auto* con = app.add_subcommand("contract", "The thickened net at one homotopy time");
  con->add_option("input", o.inputs, "Point set document")->required()->expected(1);
  con->add_option("--lam", o.lam, "Homotopy time in [0, 1]")->required();
  con->add_option("--window", o.window, "Window lo,hi (default: hull of X widened by 1)");
  add_output(con, o);

  auto* tr = app.add_subcommand("trace", "CSV trace of the homotopy over a time grid");
  tr->add_option("input", o.inputs, "Point set document")->required()->expected(1);
  tr->add_option("--grid", o.grid, "Ascending comma-separated times")->required();
  tr->add_option("--window", o.window, "Window lo,hi (default: hull of X widened by 1)");
  add_output(tr, o);

  auto* ver = app.add_subcommand("verify", "Run randomized theorem suites");
  ver->add_option("suites", o.suites, "Suite names, or all")->required();
  add_generator(ver, o);
  add_output(ver, o);

  auto* exp = app.add_subcommand("experiment", "Run a named experiment");
  exp->add_option("name", o.experiment, "homothety, geometric-progression or lambda-bound-search")->required();
  exp->add_option("--lam", o.lam, "Homothety factor (default 3/2)");
  exp->add_option("--sizes", o.sizes, "Comma-separated N values for homothety");
  exp->add_option("--k", o.k, "Largest progression length");
  exp->add_option("--factor", o.factor, "Scale factor for the progression");
  exp->add_option("--budget", o.budget, "Node budget for branch and bound");
  add_generator(exp, o);
  add_output(exp, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (dh->parsed()) return dist_h(o, out);
    if (dgh->parsed()) return dist_gh(o, out);
    if (con->parsed()) return contract_cmd(o, out);
    if (tr->parsed()) return trace_cmd(o, out);
    if (ver->parsed()) return verify(o, out);
    return experiment(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: invalid input: " << e.what() << '\n';
  } catch (const ThresholdExceeded& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitBadInput;
}

}  // namespace ghnets::cli
