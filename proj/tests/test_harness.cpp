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

#include <gtest/gtest.h>

#include <sstream>

#include "ghnets/errors.hpp"
#include "ghnets/harness.hpp"
#include "test_support.hpp"

namespace ghnets {
namespace {

using harness::Json;
using testing::pts;
using testing::S;

Json two_nets(const Window& w, const PointSet& a, const PointSet& b) {
  return Json{{"window", io::space_to_json(w)}, {"a", io::space_to_json(a)}, {"b", io::space_to_json(b)}};
}

TEST(Generator, SameSeedSameInstances) {
  harness::GeneratorConfig cfg;
  cfg.seed = 77;
  harness::InstanceGenerator g1(cfg), g2(cfg);
  for (int i = 0; i < 200; ++i) {
    ASSERT_EQ(g1.net(), g2.net());
    ASSERT_EQ(g1.metric(3), g2.metric(3));
  }
}

TEST(Generator, RespectsWindowSeparationAndDenominators) {
  harness::GeneratorConfig cfg;
  cfg.seed = 5;
  cfg.window = Window(-3, 7);
  cfg.min_separation = S("3/2");
  cfg.max_denominator = 6;
  cfg.min_count = 2;
  cfg.max_count = 4;
  harness::InstanceGenerator g(cfg);
  for (int i = 0; i < 500; ++i) {
    const PointSet x = g.net();
    ASSERT_LE(x.size(), 4U);
    ASSERT_TRUE(cfg.window.contains(x));
    for (std::size_t k = 0; k < x.size(); ++k) {
      ASSERT_LE(x[k].denominator(), 6);
      if (k > 0) ASSERT_GE(x[k] - x[k - 1], cfg.min_separation);
    }
    const Scalar t = g.time();
    ASSERT_TRUE(t.sign() >= 0 && t < Scalar(1));
  }
}

TEST(UltrametricHausdorff, Examples) {
  const auto& p = harness::property("ultrametric-hausdorff");
  EXPECT_FALSE(p.check(two_nets(Window(0, 1), pts({0}), pts({1}))).failure);
  const auto eq = p.check(two_nets(Window(0, 10), pts({0, 10}), pts({0, 5, 10})));
  EXPECT_FALSE(eq.failure);
  EXPECT_EQ(eq.tag, "equality");
}

TEST(UltrametricGh, Examples) {
  const auto& p = harness::property("ultrametric-gh");
  EXPECT_FALSE(p.check(two_nets(Window(0, 10), pts({0, 10}), pts({0, 5, 10}))).failure);
  EXPECT_LE(*gh_exact(testing::line({0, 10}), testing::line({0, 5, 10})).exact, Scalar(5));
  EXPECT_FALSE(p.check(two_nets(Window(0, 10), pts({2, 3}), pts({2, 3}))).failure);
}

TEST(BoundedCloud, Examples) {
  const auto& p = harness::property("bounded-cloud");
  const auto r = p.check(Json{{"x", io::space_to_json(pts({0, 1}))}, {"y", io::space_to_json(pts({0, 3}))}});
  EXPECT_FALSE(r.failure);
  EXPECT_EQ(r.tag, "lower-attained");
  EXPECT_EQ(*gh_exact(testing::line({0, 1}), testing::line({0, 3})).exact, Scalar(1));
}

TEST(OrderPreservationSuite, GateDecisionsAreChecked) {
  const auto& p = harness::property("order-preservation");
  const Json in{{"x", io::space_to_json(pts({0, 100, 200}))},
                {"y", io::space_to_json(pts({0, 1, 100, 200}))},
                {"pairs", Json::array({Json::array({0, 0}), Json::array({0, 1}), Json::array({1, 2}), Json::array({2, 3})})}};
  const auto pass = p.check(in);
  EXPECT_FALSE(pass.failure);
  EXPECT_EQ(pass.tag, "pass");
  // dis R = 1 against t = 1.
  const Json out{{"x", io::space_to_json(pts({0, 1, 10}))},
                 {"y", io::space_to_json(pts({0, 1, 10}))},
                 {"pairs", Json::array({Json::array({0, 1}), Json::array({1, 0}), Json::array({2, 2})})}};
  const auto refused = p.check(out);
  EXPECT_FALSE(refused.failure);
  EXPECT_EQ(refused.tag, "refused");
}

TEST(LambdaBoundSearch, RecordsTheWideWindowHit) {
  const auto& p = harness::property("lambda-bound-search");
  const Json inst{{"window", io::space_to_json(Window(-100, 100))},
                  {"x", io::space_to_json(pts({0}))},
                  {"lam1", "0"},
                  {"lam2", "3/4"}};
  const auto hit = p.check(inst);
  EXPECT_TRUE(hit.evidence);
  EXPECT_FALSE(hit.failure);
  Json same = inst;
  same["lam1"] = "3/4";
  EXPECT_FALSE(p.check(same).evidence);

  harness::GeneratorConfig cfg;
  cfg.cases = 50;
  const auto rep = harness::lambda_bound_counterexample_search(cfg);
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.theorem_backed);
  EXPECT_EQ(rep.derived["certificate_failures"], 0);
  EXPECT_GT(rep.derived["hits"].get<std::size_t>(), 0U);
  EXPECT_EQ(rep.evidence.size(), std::min<std::size_t>(rep.derived["hits"].get<std::size_t>(), harness::kMaxEvidence));
}

// A false statement, to exercise failure recording, minimization and replay.
harness::Property false_claim() {
  return harness::Property{
      "hausdorff-below-min-cover", 300, true,
      [](harness::InstanceGenerator& g) {
        return two_nets(g.config().window, g.net(), g.net());
      },
      [](const Json& inst) {
        const Window w(io::scalar_from_json(inst["window"]["lo"], "lo"), io::scalar_from_json(inst["window"]["hi"], "hi"));
        const auto a = std::get<PointSet>(io::space_from_json(inst["a"]));
        const auto b = std::get<PointSet>(io::space_from_json(inst["b"]));
        harness::CaseResult r;
        if (min(covering_radius(a, w), covering_radius(b, w)) < hausdorff(a, b)) r.failure = "claim broken";
        return r;
      }};
}

TEST(SuiteRunner, FailuresAreMinimizedAndReplayable) {
  harness::GeneratorConfig cfg;
  cfg.seed = 9;
  const auto p = false_claim();
  const auto rep = harness::run_property(p, cfg);
  EXPECT_EQ(rep.cases, 300U);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_FALSE(rep.passed());
  for (const auto& f : rep.failures) {
    const Json replayed = io::parse_document(io::dump(f.minimized), "replay");
    ASSERT_TRUE(harness::evaluate(p, replayed).failure);
    ASSERT_TRUE(harness::evaluate(p, f.instance).failure);
    const auto before = f.instance["a"]["coordinates"].size() + f.instance["b"]["coordinates"].size();
    const auto after = f.minimized["a"]["coordinates"].size() + f.minimized["b"]["coordinates"].size();
    ASSERT_LE(after, before);
    // Greedy minimality: dropping any single remaining point repairs the case.
    for (const char* key : {"a", "b"}) {
      const std::size_t n = f.minimized[key]["coordinates"].size();
      for (std::size_t k = 0; k < n && n > 1; ++k) {
        Json smaller = f.minimized;
        smaller[key]["coordinates"].erase(k);
        ASSERT_FALSE(harness::evaluate(p, smaller).failure);
      }
    }
  }
  const Json doc = harness::report_to_json(rep);
  EXPECT_EQ(doc["status"], "fail");
  EXPECT_EQ(doc["failure_count"], rep.failures.size());
}

TEST(SuiteRunner, ReportsAreByteIdenticalUnderAFixedSeed) {
  harness::GeneratorConfig cfg;
  cfg.seed = 123;
  cfg.cases = 200;
  for (const auto& p : harness::properties()) {
    const std::string a = io::dump(harness::report_to_json(harness::run_suite(p.name, cfg)));
    const std::string b = io::dump(harness::report_to_json(harness::run_suite(p.name, cfg)));
    EXPECT_EQ(a, b) << p.name;
  }
  cfg.seed = 124;
  EXPECT_NE(io::dump(harness::report_to_json(harness::verify_constructions(cfg))),
            io::dump(harness::report_to_json(harness::run_suite("constructions", harness::GeneratorConfig{.cases = 200}))));
}

TEST(SuiteRunner, ReportLayout) {
  harness::GeneratorConfig cfg;
  cfg.cases = 20;
  const Json doc = harness::report_to_json(harness::verify_ultrametric_hausdorff(cfg));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "status", "theorem_backed", "exact", "seed", "cases", "failure_count",
                                            "outcomes", "sums", "derived", "failures", "evidence"}));
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_THROW(harness::run_suite("no-such-suite", cfg), DomainError);
}

TEST(TheoremSuites, SmallBudgetsPass) {
  harness::GeneratorConfig cfg;
  cfg.seed = 2024;
  cfg.cases = 150;
  for (const auto& p : harness::properties()) {
    const auto rep = harness::run_suite(p.name, cfg);
    EXPECT_TRUE(rep.passed()) << p.name << ": " << (rep.failures.empty() ? "" : rep.failures[0].detail);
    EXPECT_EQ(rep.failures.size(), 0U) << p.name;
  }
}

TEST(HomothetyExperiment, Examples) {
  const std::vector<std::size_t> one{1};
  const auto t = harness::homothety_experiment(2, one);
  ASSERT_EQ(t.rows.size(), 1U);
  EXPECT_EQ(*t.rows[0].exact, Scalar(1));
  const std::vector<std::size_t> several{1, 2, 3};
  for (const auto& row : harness::homothety_experiment(1, several).rows) EXPECT_EQ(*row.exact, Scalar(0));
  const std::vector<std::size_t> range{2, 3, 4, 5, 6, 7, 8};
  EXPECT_TRUE(harness::homothety_experiment(S("3/2"), range).lower_nondecreasing());
  EXPECT_THROW(harness::homothety_experiment(0, one), DomainError);
}

TEST(GeometricProgressionExperiment, Examples) {
  const auto t = harness::geometric_progression_experiment(4, 2);
  ASSERT_EQ(t.rows.size(), 4U);
  EXPECT_EQ(*t.rows[0].exact, Scalar(0));
  EXPECT_EQ(*t.rows[1].exact, Scalar(6));
  EXPECT_TRUE(t.lower_strictly_increasing());
  std::ostringstream os;
  harness::write_experiment_csv(os, harness::geometric_progression_experiment(2, 2));
  EXPECT_EQ(os.str(), "n,lower_2dgh,upper_2dgh,exact_2dgh,nodes\n1,0,0,0,2\n2,6,6,6,18\n");
}

}  // namespace
}  // namespace ghnets
