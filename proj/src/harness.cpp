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

#include "ghnets/harness.hpp"

#include <algorithm>
#include <ostream>

#include "ghnets/constructions.hpp"
#include "ghnets/correspondence.hpp"
#include "ghnets/errors.hpp"
#include "ghnets/gh_solver.hpp"
#include "ghnets/homotopy.hpp"
#include "ghnets/order_lemmas.hpp"

namespace ghnets::harness {

namespace {

long floor_of(const Scalar& s) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), s.raw().get_num_mpz_t(), s.raw().get_den_mpz_t());
  return f.get_si();
}

long ceil_of(const Scalar& s) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), s.raw().get_num_mpz_t(), s.raw().get_den_mpz_t());
  return c.get_si();
}

}  // namespace

InstanceGenerator::InstanceGenerator(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg.max_denominator < 1) throw DomainError("generator: denominator bound must be positive");
  if (cfg.min_count < 1 || cfg.max_count < cfg.min_count) throw DomainError("generator: bad count range");
  if (cfg.min_separation.sign() < 0) throw DomainError("generator: negative separation");
}

long InstanceGenerator::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Scalar InstanceGenerator::scalar(const Scalar& lo, const Scalar& hi) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const long den = integer(1, cfg_.max_denominator);
    const long first = ceil_of(lo * Scalar(den)), last = floor_of(hi * Scalar(den));
    if (first <= last) return Scalar(integer(first, last), den);
  }
  return lo;
}

Scalar InstanceGenerator::time() {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Scalar t = scalar(0, 1);
    if (t < Scalar(1)) return t;
  }
  return Scalar(0);
}

PointSet InstanceGenerator::net(std::optional<std::size_t> max_count) {
  const std::size_t hi = std::max(cfg_.min_count, std::min(cfg_.max_count, max_count.value_or(cfg_.max_count)));
  const auto count = static_cast<std::size_t>(integer(static_cast<long>(cfg_.min_count), static_cast<long>(hi)));
  std::vector<Scalar> pts;
  for (std::size_t attempt = 0; pts.size() < count && attempt < 50 * count; ++attempt) {
    Scalar c = scalar(cfg_.window.lo(), cfg_.window.hi());
    const bool clear = std::all_of(pts.begin(), pts.end(), [&](const Scalar& p) {
      const Scalar gap = abs(p - c);
      return gap.sign() > 0 && cfg_.min_separation <= gap;
    });
    if (clear) pts.push_back(std::move(c));
  }
  return PointSet::from_unsorted(std::move(pts));
}

FiniteMetricSpace InstanceGenerator::metric(std::size_t n) {
  std::vector<Scalar> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = scalar(1, 10);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    }
  }
  return FiniteMetricSpace(n, std::move(d));
}

namespace {

Json sp(const io::Space& s) { return io::space_to_json(s); }

PointSet points_at(const Json& inst, const char* key) {
  const io::Space s = io::space_from_json(inst.at(key), std::string("$.") + key);
  if (const auto* g = std::get_if<io::Grid>(&s)) return g->points();
  if (const auto* p = std::get_if<PointSet>(&s)) return *p;
  throw DomainError(std::string(key) + ": expected a point set");
}

Window window_at(const Json& inst) {
  const io::Space s = io::space_from_json(inst.at("window"), "$.window");
  if (const auto* w = std::get_if<Window>(&s)) return *w;
  throw DomainError("window: expected a window");
}

Scalar scalar_at(const Json& inst, const char* key) { return io::scalar_from_json(inst.at(key), std::string("$.") + key); }

Json pairs_json(const std::vector<IndexPair>& pairs) {
  Json a = Json::array();
  for (const auto& [i, j] : pairs) a.push_back(Json::array({i, j}));
  return a;
}

Correspondence correspondence_at(const Json& inst, const PointSet& x, const PointSet& y) {
  std::vector<IndexPair> pairs;
  for (const auto& p : inst.at("pairs")) pairs.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
  return Correspondence(Relation(std::move(pairs)), x.size(), y.size());
}

std::string describe(const char* what, const Scalar& lhs, const char* rel, const Scalar& rhs) {
  return std::string(what) + ": " + lhs.to_string() + " " + rel + " " + rhs.to_string();
}

/// Image of every x_i under a perturbation, as indices into the sorted,
/// deduplicated image set.
std::pair<PointSet, std::vector<IndexPair>> perturbed(const PointSet& x, std::vector<Scalar> moved) {
  PointSet y = PointSet::from_unsorted(moved);
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto pts = y.points();
    pairs.emplace_back(i, static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), moved[i]) - pts.begin()));
  }
  return {std::move(y), std::move(pairs)};
}

Json gen_two_nets(InstanceGenerator& g, std::optional<std::size_t> cap) {
  const PointSet a = g.net(cap);
  const PointSet b = g.net(cap);
  return Json{{"window", sp(g.config().window)}, {"a", sp(a)}, {"b", sp(b)}};
}

CaseResult check_ultrametric_hausdorff(const Json& inst) {
  const Window w = window_at(inst);
  const PointSet a = points_at(inst, "a"), b = points_at(inst, "b");
  const Scalar lhs = hausdorff(a, b);
  const Scalar rhs = max(covering_radius(a, w), covering_radius(b, w));
  CaseResult r;
  if (rhs < lhs) r.failure = describe("d_H(A, B) > max covering radius", lhs, ">", rhs);
  r.tag = lhs == rhs ? "equality" : "strict";
  return r;
}

CaseResult check_ultrametric_gh(const Json& inst) {
  const Window w = window_at(inst);
  const PointSet a = points_at(inst, "a"), b = points_at(inst, "b");
  const Scalar dh = hausdorff(a, b);
  const Scalar rhs = max(covering_radius(a, w), covering_radius(b, w));
  const GHResult gh = gh_branch_bound(FiniteMetricSpace::from_points(a), FiniteMetricSpace::from_points(b));
  CaseResult r;
  r.tag = gh.exact ? "solver-exact" : "bounds-only";
  if (dh < gh.upper) r.failure = describe("solver d_GH above d_H", gh.upper, ">", dh);
  else if (rhs < dh) r.failure = describe("d_H chain above max covering radius", dh, ">", rhs);
  else if (rhs < gh.upper) r.failure = describe("solver d_GH above max covering radius", gh.upper, ">", rhs);
  return r;
}

Json gen_bounded_cloud(InstanceGenerator& g) {
  auto one = [&]() -> Json {
    if (g.integer(0, 1) == 0) return sp(g.net(4));
    return sp(io::Matrix{g.metric(static_cast<std::size_t>(g.integer(1, 4)))});
  };
  Json x = one();
  Json y = one();
  return Json{{"x", std::move(x)}, {"y", std::move(y)}};
}

CaseResult check_bounded_cloud(const Json& inst) {
  const FiniteMetricSpace x = io::as_metric_space(io::space_from_json(inst.at("x"), "$.x"));
  const FiniteMetricSpace y = io::as_metric_space(io::space_from_json(inst.at("y"), "$.y"));
  const Scalar g = *gh_exact(x, y).exact;
  const Scalar lo = abs(diam(x) - diam(y)) / Scalar(2);
  const Scalar hi = max(diam(x), diam(y)) / Scalar(2);
  CaseResult r;
  if (g < lo) r.failure = describe("d_GH below half the diameter gap", g, "<", lo);
  else if (hi < g) r.failure = describe("d_GH above half the larger diameter", g, ">", hi);
  r.tag = g == lo ? "lower-attained" : (g == hi ? "upper-attained" : "interior");
  return r;
}

Json gen_order_preservation(InstanceGenerator& g) {
  const auto n = static_cast<std::size_t>(g.integer(2, 6));
  std::vector<Scalar> xs;
  Scalar at = g.scalar(0, 5);
  for (std::size_t k = 0; k < n; ++k) {
    xs.push_back(at);
    at += g.scalar(1, 20);
  }
  const PointSet x(xs);
  const Scalar amplitude = g.scalar(0, 8);
  std::vector<Scalar> moved;
  for (const auto& v : xs) moved.push_back(v + g.scalar(-amplitude, amplitude));
  auto [y, pairs] = perturbed(x, moved);
  for (long extra = g.integer(0, 2); extra > 0; --extra) {
    pairs.emplace_back(static_cast<std::size_t>(g.integer(0, static_cast<long>(x.size()) - 1)),
                       static_cast<std::size_t>(g.integer(0, static_cast<long>(y.size()) - 1)));
  }
  return Json{{"x", sp(x)}, {"y", sp(y)}, {"pairs", pairs_json(pairs)}};
}

CaseResult check_order_preservation_case(const Json& inst) {
  const PointSet x = points_at(inst, "x"), y = points_at(inst, "y");
  const Correspondence c = correspondence_at(inst, x, y);
  const Scalar dis = distortion(c.relation(), x, y).value;
  bool in_hypothesis = true;
  for (std::size_t i = 1; i < x.size(); ++i) in_hypothesis = in_hypothesis && dis * Scalar(2) < x[i] - x[i - 1];
  const OrderPreservationReport rep = check_order_preservation(c, x, y);
  CaseResult r;
  r.tag = to_string(rep.status);
  const bool refused = rep.status == CheckStatus::kRefused;
  if (refused && in_hypothesis) r.failure = "gate refused an instance with t > 2 dis R";
  else if (!refused && !in_hypothesis) r.failure = "gate admitted an instance with t <= 2 dis R";
  else if (rep.status == CheckStatus::kViolation) r.failure = "betweenness not preserved";
  else if (rep.status == CheckStatus::kInconclusive) r.failure = "unexpected inconclusive status";
  return r;
}

Json gen_order_inversions(InstanceGenerator& g) {
  const auto m = static_cast<std::size_t>(g.integer(2, 4));
  std::vector<Scalar> xs;
  for (std::size_t k = 0; k < m; ++k) xs.push_back(g.scalar(0, 10));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t cluster = xs.size();
  Scalar far = xs.back() + kDefaultWitnessMargin;
  for (long f = g.integer(1, 2); f > 0; --f) {
    far += g.scalar(1, 50);
    xs.push_back(far);
  }
  const PointSet x(xs);
  std::vector<Scalar> moved;
  for (const auto& v : xs) moved.push_back(v + g.scalar(-2, 2));
  auto [y, base] = perturbed(x, moved);
  // Random correspondence inside the cluster; far points keep their images.
  std::vector<IndexPair> pairs;
  std::vector<std::size_t> cluster_images;
  for (std::size_t i = 0; i < cluster; ++i) cluster_images.push_back(base[i].second);
  std::sort(cluster_images.begin(), cluster_images.end());
  cluster_images.erase(std::unique(cluster_images.begin(), cluster_images.end()), cluster_images.end());
  auto random_image = [&] { return cluster_images[static_cast<std::size_t>(g.integer(0, static_cast<long>(cluster_images.size()) - 1))]; };
  for (std::size_t i = 0; i < cluster; ++i) pairs.emplace_back(i, random_image());
  for (const auto j : cluster_images) pairs.emplace_back(static_cast<std::size_t>(g.integer(0, static_cast<long>(cluster) - 1)), j);
  for (std::size_t i = cluster; i < x.size(); ++i) pairs.push_back(base[i]);
  return Json{{"x", sp(x)}, {"y", sp(y)}, {"pairs", pairs_json(pairs)}};
}

CaseResult check_order_inversions(const Json& inst) {
  const PointSet x = points_at(inst, "x"), y = points_at(inst, "y");
  const InversionReport rep = order_violation_bound(correspondence_at(inst, x, y), x, y);
  CaseResult r;
  if (rep.status == CheckStatus::kViolation) r.failure = "inverted pair farther apart than 2 dis R";
  r.tag = rep.status == CheckStatus::kPass ? (rep.inversions == 0 ? "vacuous" : "pass") : to_string(rep.status);
  return r;
}

Json gen_continuity(InstanceGenerator& g) {
  Scalar l1 = g.time();
  Scalar l2 = g.time();
  return Json{{"window", sp(g.config().window)}, {"x", sp(g.net())}, {"lam1", io::scalar_to_json(l1)},
              {"lam2", io::scalar_to_json(l2)}};
}

CaseResult check_continuity(const Json& inst) {
  const Window w = window_at(inst);
  const PointSet x = points_at(inst, "x");
  const HomotopyParam l1(scalar_at(inst, "lam1")), l2(scalar_at(inst, "lam2"));
  CaseResult r;
  if (contract(x, HomotopyParam(Scalar(0)), w) != IntervalUnion(x)) r.failure = "Phi(X, 0) differs from X";
  else if (contract(x, HomotopyParam(Scalar(1)), w) != w.as_set()) r.failure = "Phi(X, 1) differs from W";
  const Certified c = continuity_in_lambda(x, l1, l2, w);
  if (!r.failure && !c.holds()) r.failure = describe("continuity certificate", c.measured, ">", c.bound);
  r.tag = c.measured == c.bound ? "equality" : "strict";
  return r;
}

Json gen_stability(InstanceGenerator& g) {
  const PointSet x = g.net();
  const PointSet xn = g.net();
  Scalar lam = g.time();
  return Json{{"window", sp(g.config().window)}, {"x", sp(x)}, {"xn", sp(xn)}, {"lam", io::scalar_to_json(lam)}};
}

CaseResult check_stability(const Json& inst) {
  const Certified c = stability_in_space(points_at(inst, "x"), points_at(inst, "xn"),
                                         HomotopyParam(scalar_at(inst, "lam")), window_at(inst));
  CaseResult r;
  if (!c.holds()) r.failure = describe("stability certificate", c.measured, ">", c.bound);
  r.tag = c.measured == c.bound ? "equality" : "strict";
  return r;
}

Json gen_constructions(InstanceGenerator& g) {
  const Scalar lam = g.scalar(Scalar(1, 4), Scalar(3, 4));
  const Scalar delta = lam / Scalar(20);
  const auto n = static_cast<std::size_t>(g.integer(1, 3));
  std::vector<Scalar> xs;
  Scalar at = g.scalar(0, 5);
  for (std::size_t k = 0; k < n; ++k) {
    xs.push_back(at);
    // Occasionally a pair closer than the perturbation, so the order flips.
    at += g.integer(0, 3) == 0 ? delta * g.scalar(Scalar(1, 2), 1) : g.scalar(3, 10);
  }
  const PointSet x(xs);
  std::vector<Scalar> moved;
  for (const auto& v : xs) moved.push_back(v + delta * g.scalar(-1, 1));
  const PointSet xn = PointSet::from_unsorted(moved);
  const Correspondence r = nearest_point_correspondence(x, xn);
  Scalar r1 = g.scalar(0, 2);
  Scalar r2 = g.scalar(0, 2);
  Scalar step = g.scalar(Scalar(1, 4), 1);
  return Json{{"x", sp(x)},
              {"xn", sp(xn)},
              {"pairs", pairs_json(r.pairs())},
              {"lam", io::scalar_to_json(lam)},
              {"r1", io::scalar_to_json(r1)},
              {"r2", io::scalar_to_json(r2)},
              {"step", io::scalar_to_json(step)}};
}

CaseResult check_constructions(const Json& inst) {
  const PointSet x = points_at(inst, "x"), xn = points_at(inst, "xn");
  const Correspondence corr = correspondence_at(inst, x, xn);
  const Scalar lam = scalar_at(inst, "lam"), r1 = scalar_at(inst, "r1"), r2 = scalar_at(inst, "r2");
  const Scalar step = scalar_at(inst, "step");
  CaseResult r;
  const Scalar dis = distortion(corr.relation(), x, xn).value;
  r.tag = Scalar(8) * dis < lam ? "pass" : "refused";
  for (const auto& [name, s] : {std::pair<const char*, Scalar>{"step", step}, {"half", step / Scalar(2)}}) {
    const ConstructionResult seg = segment_correspondence(x, r1, r2, s);
    if (!r.failure && !seg.within_rounding()) {
      r.failure = describe("segment correspondence", seg.certificate.value, ">", seg.bound + seg.rounding);
    }
    r.values.emplace_back(std::string("segment_slack_") + name, seg.slack);
    if (r.tag == "refused") continue;
    const ConstructionResult ext = extend_correspondence(corr, x, xn, lam, s);
    if (!r.failure && !ext.within_rounding()) {
      r.failure = describe("extended correspondence", ext.certificate.value, ">", ext.bound + ext.rounding);
    }
    r.values.emplace_back(std::string("extension_slack_") + name, ext.slack);
  }
  return r;
}

CaseResult check_lambda_bound(const Json& inst) {
  CaseResult r = check_continuity(inst);
  const PointSet x = points_at(inst, "x");
  const Window w = window_at(inst);
  const Scalar l1 = scalar_at(inst, "lam1"), l2 = scalar_at(inst, "lam2");
  const Scalar measured = hausdorff(contract(x, HomotopyParam(l1), w), contract(x, HomotopyParam(l2), w));
  r.evidence = abs(l1 - l2) < measured;
  r.tag = r.evidence ? "hit" : "no-hit";
  return r;
}

Property make(std::string name, std::size_t cases, bool theorem, std::function<Json(InstanceGenerator&)> gen,
              std::function<CaseResult(const Json&)> check) {
  return Property{std::move(name), cases, theorem, std::move(gen), std::move(check)};
}

bool is_point_space(const Json& j) { return j.is_object() && j.contains("kind") && j["kind"] == "points"; }

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      make("ultrametric-hausdorff", 10000, true, [](InstanceGenerator& g) { return gen_two_nets(g, std::nullopt); },
           check_ultrametric_hausdorff),
      make("ultrametric-gh", 1000, true, [](InstanceGenerator& g) { return gen_two_nets(g, 4); }, check_ultrametric_gh),
      make("bounded-cloud", 1000, true, gen_bounded_cloud, check_bounded_cloud),
      make("order-preservation", 1000, true, gen_order_preservation, check_order_preservation_case),
      make("order-inversions", 1000, true, gen_order_inversions, check_order_inversions),
      make("continuity", 10000, true, gen_continuity, check_continuity),
      make("stability", 10000, true, gen_stability, check_stability),
      make("constructions", 500, true, gen_constructions, check_constructions),
      make("lambda-bound-search", 1000, false, gen_continuity, check_lambda_bound),
  };
  return all;
}

const Property& property(std::string_view name) {
  for (const auto& p : properties()) {
    if (p.name == name) return p;
  }
  throw DomainError("unknown suite \"" + std::string(name) + "\"");
}

CaseResult evaluate(const Property& p, const Json& instance) {
  try {
    return p.check(instance);
  } catch (const std::exception& e) {
    CaseResult r;
    r.failure = std::string("exception: ") + e.what();
    r.tag = "error";
    return r;
  }
}

Json minimize(const Property& p, Json instance) {
  auto still_fails = [&](const Json& candidate) {
    try {
      return p.check(candidate).failure.has_value();
    } catch (const std::exception&) {
      return false;
    }
  };
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (auto& [key, value] : instance.items()) {
      if (!is_point_space(value)) continue;
      const std::size_t n = value["coordinates"].size();
      for (std::size_t k = 0; k < n && n > 1 && !shrunk; ++k) {
        Json candidate = instance;
        candidate[key]["coordinates"].erase(k);
        if (still_fails(candidate)) {
          instance = std::move(candidate);
          shrunk = true;
        }
      }
      if (shrunk) break;
    }
  }
  return instance;
}

SuiteReport run_property(const Property& p, const GeneratorConfig& cfg) {
  SuiteReport rep;
  rep.name = p.name;
  rep.seed = cfg.seed;
  rep.theorem_backed = p.theorem_backed;
  rep.cases = cfg.cases != 0 ? cfg.cases : p.default_cases;
  InstanceGenerator gen(cfg);
  for (std::size_t i = 0; i < rep.cases; ++i) {
    Json inst = p.generate(gen);
    CaseResult res = evaluate(p, inst);
    ++rep.outcomes[res.tag];
    for (auto& [key, v] : res.values) {
      auto it = rep.sums.try_emplace(key, Scalar(0)).first;
      it->second += v;
    }
    if (res.evidence && rep.evidence.size() < kMaxEvidence) rep.evidence.push_back(Json{{"case", i}, {"instance", inst}});
    if (res.failure) {
      Json small = minimize(p, inst);
      rep.failures.push_back({i, std::move(inst), std::move(small), *res.failure});
    }
  }
  return rep;
}

SuiteReport run_suite(std::string_view name, const GeneratorConfig& cfg) {
  if (name == "constructions") return verify_constructions(cfg);
  if (name == "lambda-bound-search") return lambda_bound_counterexample_search(cfg);
  return run_property(property(name), cfg);
}

SuiteReport verify_ultrametric_hausdorff(const GeneratorConfig& cfg) { return run_property(property("ultrametric-hausdorff"), cfg); }
SuiteReport verify_ultrametric_gh(const GeneratorConfig& cfg) { return run_property(property("ultrametric-gh"), cfg); }
SuiteReport verify_bounded_cloud(const GeneratorConfig& cfg) { return run_property(property("bounded-cloud"), cfg); }
SuiteReport verify_order_preservation(const GeneratorConfig& cfg) { return run_property(property("order-preservation"), cfg); }
SuiteReport verify_order_inversions(const GeneratorConfig& cfg) { return run_property(property("order-inversions"), cfg); }
SuiteReport verify_continuity(const GeneratorConfig& cfg) { return run_property(property("continuity"), cfg); }
SuiteReport verify_stability(const GeneratorConfig& cfg) { return run_property(property("stability"), cfg); }

SuiteReport verify_constructions(const GeneratorConfig& cfg) {
  SuiteReport rep = run_property(property("constructions"), cfg);
  for (const char* kind : {"segment", "extension"}) {
    const auto full = rep.sums.find(std::string(kind) + "_slack_step");
    const auto half = rep.sums.find(std::string(kind) + "_slack_half");
    if (full == rep.sums.end() || half == rep.sums.end() || full->second.sign() == 0) continue;
    const Scalar ratio = half->second / full->second;
    rep.derived[std::string("slack_ratio_") + kind] = io::scalar_to_json(ratio);
    rep.derived[std::string("slack_ratio_") + kind + "_approx"] = ratio.to_decimal();
  }
  return rep;
}

SuiteReport lambda_bound_counterexample_search(const GeneratorConfig& cfg) {
  SuiteReport rep = run_property(property("lambda-bound-search"), cfg);
  const auto it = rep.outcomes.find("hit");
  rep.derived["hits"] = it == rep.outcomes.end() ? 0 : it->second;
  rep.derived["certificate_failures"] = rep.failures.size();
  return rep;
}

Json report_to_json(const SuiteReport& r) {
  Json outcomes = Json::object();
  for (const auto& [k, v] : r.outcomes) outcomes[k] = v;
  Json sums = Json::object();
  for (const auto& [k, v] : r.sums) sums[k] = io::scalar_to_json(v);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"case", f.case_index}, {"detail", f.detail}, {"instance", f.instance}, {"minimized", f.minimized}});
  }
  return Json{
      {"suite", r.name},
      {"status", r.theorem_backed ? (r.failures.empty() ? "pass" : "fail") : "report"},
      {"theorem_backed", r.theorem_backed},
      {"exact", r.exact},
      {"seed", r.seed},
      {"cases", r.cases},
      {"failure_count", r.failures.size()},
      {"outcomes", std::move(outcomes)},
      {"sums", std::move(sums)},
      {"derived", r.derived},
      {"failures", std::move(failures)},
      {"evidence", r.evidence},
  };
}

bool ExperimentTable::lower_nondecreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].lower < rows[i - 1].lower) return false;
  }
  return true;
}

bool ExperimentTable::lower_strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].lower <= rows[i - 1].lower) return false;
  }
  return true;
}

namespace {

ExperimentRow row_for(std::size_t size, const GHResult& r) {
  const Scalar two(2);
  std::optional<Scalar> exact;
  if (r.exact) exact = *r.exact * two;
  return {size, r.lower * two, r.upper * two, std::move(exact), r.nodes_explored};
}

}  // namespace

ExperimentTable homothety_experiment(const Scalar& lam, std::span<const std::size_t> sizes, std::uint64_t budget) {
  if (lam.sign() <= 0) throw DomainError("homothety_experiment: lam must be positive");
  ExperimentTable t{"homothety", {}};
  for (const std::size_t n : sizes) {
    std::vector<Scalar> a, b;
    for (std::size_t i = 0; i <= n; ++i) {
      a.emplace_back(static_cast<long>(i));
      b.push_back(lam * Scalar(static_cast<long>(i)));
    }
    const auto x = FiniteMetricSpace::from_points(PointSet(a));
    const auto y = FiniteMetricSpace::from_points(PointSet(b));
    t.rows.push_back(row_for(n, gh_branch_bound(x, y, budget)));
  }
  return t;
}

ExperimentTable geometric_progression_experiment(std::size_t k, const Scalar& factor, std::uint64_t budget) {
  if (factor.sign() <= 0) throw DomainError("geometric_progression_experiment: factor must be positive");
  ExperimentTable t{"geometric-progression", {}};
  std::vector<Scalar> a, b;
  Scalar power(3);
  for (std::size_t j = 1; j <= k; ++j) {
    a.push_back(power);
    b.push_back(power * factor);
    power *= Scalar(3);
    const auto x = FiniteMetricSpace::from_points(PointSet(a));
    const auto y = FiniteMetricSpace::from_points(PointSet(b));
    t.rows.push_back(row_for(j, j * j <= kExhaustiveCellLimit ? gh_exact(x, y) : gh_branch_bound(x, y, budget)));
  }
  return t;
}

void write_experiment_csv(std::ostream& os, const ExperimentTable& t) {
  os << "n,lower_2dgh,upper_2dgh,exact_2dgh,nodes\n";
  for (const auto& r : t.rows) {
    os << r.size << ',' << r.lower << ',' << r.upper << ',' << (r.exact ? r.exact->to_string() : std::string()) << ','
       << r.nodes << '\n';
  }
}

}  // namespace ghnets::harness
