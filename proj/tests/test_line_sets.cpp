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

#include "ghnets/errors.hpp"
#include "ghnets/line_sets.hpp"
#include "test_support.hpp"

namespace ghnets {
namespace {

using testing::ivs;
using testing::pts;
using testing::S;

TEST(PointToSet, Examples) {
  EXPECT_EQ(point_to_set_distance(5, pts({0, 10})), Scalar(5));
  EXPECT_EQ(point_to_set_distance(3, ivs({{0, 2}, {7, 9}})), Scalar(1));
  EXPECT_EQ(point_to_set_distance(2, pts({2})), Scalar(0));
  EXPECT_EQ(point_to_set_distance(8, ivs({{0, 2}, {7, 9}})), Scalar(0));
  EXPECT_EQ(point_to_set_distance(-4, ivs({{0, 2}, {7, 9}})), Scalar(4));
  EXPECT_EQ(point_to_set_distance(12, ivs({{0, 2}, {7, 9}})), Scalar(3));
}

TEST(Hausdorff, Examples) {
  EXPECT_EQ(hausdorff(pts({0}), pts({0, 2})), Scalar(2));
  EXPECT_EQ(hausdorff(pts({0, 10}), pts({0, 5, 10})), Scalar(5));
  EXPECT_EQ(hausdorff(ivs({{-1, 1}}), ivs({{0, 1}})), Scalar(1));
  EXPECT_EQ(hausdorff(ivs({{0, 2}, {7, 9}}), ivs({{0, 2}, {7, 9}})), Scalar(0));
}

TEST(Hausdorff, GapMidpointOfTheOtherSetIsCritical) {
  // [0,10] against {0,10}: the farthest point is the midpoint 5.
  EXPECT_EQ(hausdorff(ivs({{0, 10}}), pts({0, 10})), Scalar(5));
  // Midpoint of the gap (2,7) is 9/2, inside [3,6].
  EXPECT_EQ(hausdorff(ivs({{3, 6}}), pts({2, 7})), Scalar(5, 2));
  EXPECT_EQ(hausdorff(ivs({{3, 6}}), ivs({{0, 2}, {7, 9}})), Scalar(3));
  // Midpoint outside the probing interval: endpoints decide.
  EXPECT_EQ(hausdorff(ivs({{3, 4}}), ivs({{0, 2}, {7, 9}})), Scalar(5));
}

TEST(Hausdorff, MatchesDefinitionOnPointSets) {
  testing::RationalSource gen(11);
  for (int i = 0; i < 500; ++i) {
    const PointSet a = gen.points(-10, 10, 6), b = gen.points(-10, 10, 6);
    Scalar ab(0), ba(0);
    for (const auto& p : a.points()) {
      Scalar d = abs(p - b[0]);
      for (const auto& q : b.points()) d = min(d, abs(p - q));
      ab = max(ab, d);
    }
    for (const auto& q : b.points()) {
      Scalar d = abs(q - a[0]);
      for (const auto& p : a.points()) d = min(d, abs(p - q));
      ba = max(ba, d);
    }
    EXPECT_EQ(hausdorff(a, b), max(ab, ba));
  }
}

TEST(Hausdorff, IsAMetricOnIntervalUnions) {
  testing::RationalSource gen(12);
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion a = gen.intervals(-20, 20, 4), b = gen.intervals(-20, 20, 4), c = gen.intervals(-20, 20, 4);
    EXPECT_EQ(hausdorff(a, a), Scalar(0));
    EXPECT_EQ(hausdorff(a, b), hausdorff(b, a));
    EXPECT_LE(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c));
    if (hausdorff(a, b) == Scalar(0)) EXPECT_EQ(a, b);
  }
}

TEST(Thicken, Examples) {
  EXPECT_EQ(thicken(pts({0, 3}), 1), ivs({{-1, 1}, {2, 4}}));
  EXPECT_EQ(thicken(pts({0, 2}), 1), ivs({{-1, 3}}));
  EXPECT_EQ(thicken(pts({0}), 0), IntervalUnion(pts({0})));
  EXPECT_THROW(thicken(pts({0}), -1), DomainError);
}

TEST(Thicken, MonotoneAndLipschitzInRadius) {
  testing::RationalSource gen(13);
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion a = gen.intervals(-20, 20, 5);
    Scalar r1 = gen.in(0, 6), r2 = gen.in(0, 6);
    if (r2 < r1) std::swap(r1, r2);
    const IntervalUnion t1 = thicken(a, r1), t2 = thicken(a, r2);
    EXPECT_TRUE(t2.contains(t1));
    EXPECT_LE(hausdorff(t1, t2), r2 - r1);
  }
}

TEST(IntervalUnion, CanonicalMergesTouchingIntervals) {
  const auto u = IntervalUnion::canonical({{S("5"), S("6")}, {S("0"), S("1")}, {S("1"), S("2")}, {S("3"), S("3")}});
  EXPECT_EQ(u, ivs({{0, 2}, {3, 3}, {5, 6}}));
  EXPECT_THROW(ivs({{0, 1}, {1, 2}}), DomainError);
  EXPECT_THROW(ivs({{1, 0}}), DomainError);
  EXPECT_THROW(IntervalUnion(std::vector<Interval>{}), DomainError);
  EXPECT_TRUE(u.contains(Scalar(3)));
  EXPECT_FALSE(u.contains(Scalar(4)));
  EXPECT_TRUE(u.contains(ivs({{S("1/2"), S("3/2")}, {5, 6}})));
  EXPECT_FALSE(u.contains(ivs({{1, 3}})));
}

TEST(PointSet, Invariants) {
  EXPECT_THROW(PointSet(std::vector<Scalar>{}), DomainError);
  EXPECT_THROW(pts({1, 1}), DomainError);
  EXPECT_THROW(pts({2, 1}), DomainError);
  EXPECT_EQ(PointSet::from_unsorted({3, 1, 3, 2}), pts({1, 2, 3}));
  EXPECT_EQ(PointSet::grid(0, 1, S("1/4")), pts({0, S("1/4"), S("1/2"), S("3/4"), 1}));
}

TEST(Window, Invariants) {
  EXPECT_THROW(Window(1, 1), DomainError);
  EXPECT_THROW(Window(2, 1), DomainError);
  const Window w(0, 10);
  EXPECT_TRUE(w.contains(pts({0, 10})));
  EXPECT_FALSE(w.contains(pts({0, 11})));
}

TEST(CoveringRadius, Examples) {
  const Window w(0, 10);
  EXPECT_EQ(covering_radius(PointSet::grid(0, 10, 1), w), Scalar(1, 2));
  EXPECT_EQ(covering_radius(pts({0}), w), Scalar(10));
  EXPECT_EQ(covering_radius(pts({0, 4, 10}), w), Scalar(3));
  EXPECT_THROW(covering_radius(pts({-1, 4}), w), DomainError);
}

TEST(CoveringRadius, EqualsHausdorffToTheWindow) {
  testing::RationalSource gen(14);
  const Window w(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const PointSet a = gen.points(-10, 10, 7);
    EXPECT_EQ(covering_radius(a, w), hausdorff(a, w.as_set()));
  }
}

TEST(CoveringRadius, UltrametricInequality) {
  testing::RationalSource gen(15);
  const Window w(0, 20);
  for (int i = 0; i < 2000; ++i) {
    const PointSet a = gen.points(0, 20, 6), b = gen.points(0, 20, 6);
    EXPECT_LE(hausdorff(a, b), max(covering_radius(a, w), covering_radius(b, w)));
  }
}

TEST(IsEpsNet, Examples) {
  const Window w(0, 10);
  EXPECT_TRUE(is_eps_net(PointSet::grid(0, 10, 1), w, S("1/2")));
  EXPECT_FALSE(is_eps_net(PointSet::grid(0, 10, 1), w, S("1/3")));
  EXPECT_TRUE(is_eps_net(pts({0, 4, 10}), w, 3));
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation(pts({0, 3, 100})), Scalar(3));
  EXPECT_EQ(separation(pts({0, 1})), Scalar(1));
  EXPECT_EQ(separation(PointSet::grid(0, 5, S("5/7"))), Scalar(5, 7));
  EXPECT_THROW(separation(pts({0})), DomainError);
}

TEST(Sample, Examples) {
  EXPECT_EQ(sample(ivs({{0, 1}}), S("1/2")), pts({0, S("1/2"), 1}));
  EXPECT_EQ(sample(ivs({{0, 1}, {3, 3}}), 1), pts({0, 1, 3}));
  EXPECT_EQ(sample(ivs({{0, 1}}), S("2/3")), pts({0, S("2/3"), 1}));
  EXPECT_THROW(sample(ivs({{0, 1}}), 0), DomainError);
}

TEST(Sample, WithinHalfStepInHausdorffDistance) {
  testing::RationalSource gen(16);
  for (int i = 0; i < 500; ++i) {
    const IntervalUnion s = gen.intervals(-10, 10, 4);
    const Scalar step = gen.in(0, 2, 6) + Scalar(1, 7);
    EXPECT_LE(hausdorff(sample(s, step), s), step / Scalar(2));
  }
}

TEST(Clip, IntersectsWithWindow) {
  EXPECT_EQ(clip(ivs({{-3, -1}, {0, 2}, {5, 12}}), Window(-2, 10)), ivs({{-2, -1}, {0, 2}, {5, 10}}));
  EXPECT_THROW(clip(ivs({{-3, -1}}), Window(0, 1)), DomainError);
}

TEST(NearestIndex, TiesGoLeft) {
  const PointSet s = pts({0, 2, 4});
  EXPECT_EQ(nearest_index(s, 1), 0U);
  EXPECT_EQ(nearest_index(s, S("3/2")), 1U);
  EXPECT_EQ(nearest_index(s, -5), 0U);
  EXPECT_EQ(nearest_index(s, 9), 2U);
}

}  // namespace
}  // namespace ghnets
