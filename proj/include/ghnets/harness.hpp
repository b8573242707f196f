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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghnets/gh_solver.hpp"
#include "ghnets/io.hpp"
#include "ghnets/line_sets.hpp"
#include "ghnets/metric_space.hpp"

namespace ghnets::harness {

using io::Json;

struct GeneratorConfig {
  std::uint64_t seed = 1;
  Window window{0, 100};
  std::size_t min_count = 1;
  std::size_t max_count = 6;
  /// Lower bound on the gap between generated points.
  Scalar min_separation{0};
  /// Coordinates are drawn with denominators in [1, max_denominator].
  long max_denominator = 64;
  /// Number of cases; 0 picks the suite default.
  std::size_t cases = 0;
};

/// Deterministic source of random instances: equal configs give equal
/// sequences.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const GeneratorConfig& cfg);

  const GeneratorConfig& config() const { return cfg_; }
  long integer(long lo, long hi);
  /// Rational in [lo, hi] with a random denominator up to the bound.
  Scalar scalar(const Scalar& lo, const Scalar& hi);
  /// Homotopy time in [0, 1).
  Scalar time();
  /// Point set inside the window with a size in the configured range (capped
  /// by `max_count` when given) and gaps >= min_separation.
  PointSet net(std::optional<std::size_t> max_count = std::nullopt);
  /// Shortest-path closure of random positive weights.
  FiniteMetricSpace metric(std::size_t n);

 private:
  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
};

/// What one case reports back to the suite runner.
struct CaseResult {
  /// Set when the checked statement fails.
  std::optional<std::string> failure;
  /// Counted per suite under "outcomes".
  std::string tag = "pass";
  /// Summed per suite under "sums".
  std::vector<std::pair<std::string, Scalar>> values;
  /// Noteworthy but non-failing cases, e.g. hits of a counterexample search.
  bool evidence = false;
};

/// A randomized statement. `check` must be a pure function of the instance
/// document, so a failure record replays on its own.
struct Property {
  std::string name;
  std::size_t default_cases;
  bool theorem_backed;
  std::function<Json(InstanceGenerator&)> generate;
  std::function<CaseResult(const Json&)> check;
};

struct FailureRecord {
  std::size_t case_index;
  Json instance;
  /// After greedy point removal; equals `instance` when nothing could go.
  Json minimized;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool theorem_backed = true;
  /// Every comparison is exact rational arithmetic.
  bool exact = true;
  std::vector<FailureRecord> failures;
  std::map<std::string, std::size_t> outcomes;
  std::map<std::string, Scalar> sums;
  /// Suite-specific summary values, in insertion order.
  Json derived = Json::object();
  /// Up to kMaxEvidence instances flagged by CaseResult::evidence.
  std::vector<Json> evidence;

  bool passed() const { return !theorem_backed || failures.empty(); }
};

inline constexpr std::size_t kMaxEvidence = 10;

Json report_to_json(const SuiteReport& r);

SuiteReport run_property(const Property& p, const GeneratorConfig& cfg);

/// Runs the check once; exceptions become failures.
CaseResult evaluate(const Property& p, const Json& instance);

/// Removes points one at a time from every "points" space in the instance
/// while the check keeps failing.
Json minimize(const Property& p, Json instance);

/// Built-in suites by name: ultrametric-hausdorff, ultrametric-gh,
/// bounded-cloud, order-preservation, order-inversions, continuity,
/// stability, constructions, lambda-bound-search.
const std::vector<Property>& properties();
const Property& property(std::string_view name);  // DomainError if unknown

SuiteReport run_suite(std::string_view name, const GeneratorConfig& cfg);

SuiteReport verify_ultrametric_hausdorff(const GeneratorConfig& cfg);
SuiteReport verify_ultrametric_gh(const GeneratorConfig& cfg);
SuiteReport verify_bounded_cloud(const GeneratorConfig& cfg);
SuiteReport verify_order_preservation(const GeneratorConfig& cfg);
SuiteReport verify_order_inversions(const GeneratorConfig& cfg);
SuiteReport verify_continuity(const GeneratorConfig& cfg);
SuiteReport verify_stability(const GeneratorConfig& cfg);
/// Adds "slack_ratio_segment", "slack_ratio_extension": summed slack at
/// step/2 over summed slack at step.
SuiteReport verify_constructions(const GeneratorConfig& cfg);
/// Not theorem-backed: hits of d_H(Phi(X, l1), Phi(X, l2)) > |l1 - l2| are
/// evidence, failures of the |f(l1) - f(l2)| certificate are still failures.
SuiteReport lambda_bound_counterexample_search(const GeneratorConfig& cfg);

/// Values on the 2 d_GH scale (the minimum distortion).
struct ExperimentRow {
  std::size_t size;
  Scalar lower;
  Scalar upper;
  std::optional<Scalar> exact;
  std::uint64_t nodes;
};

struct ExperimentTable {
  std::string name;
  std::vector<ExperimentRow> rows;

  bool lower_nondecreasing() const;
  bool lower_strictly_increasing() const;
};

/// {0, 1, ..., N} against {0, lam, ..., lam N} for each N. lam > 0.
ExperimentTable homothety_experiment(const Scalar& lam, std::span<const std::size_t> sizes,
                                     std::uint64_t budget = kDefaultNodeBudget);
/// {3, 9, ..., 3^j} against factor times that set for j = 1..k.
ExperimentTable geometric_progression_experiment(std::size_t k, const Scalar& factor,
                                                 std::uint64_t budget = kDefaultNodeBudget);

/// Columns: n, lower_2dgh, upper_2dgh, exact_2dgh, nodes.
void write_experiment_csv(std::ostream& os, const ExperimentTable& t);

}  // namespace ghnets::harness
