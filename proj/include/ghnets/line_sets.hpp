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

#include <span>
#include <vector>

#include "ghnets/scalar.hpp"

namespace ghnets {

/// Nonempty, strictly increasing finite subset of the line.
class PointSet {
 public:
  /// Validates the invariant; throws DomainError if empty or not strictly
  /// increasing.
  explicit PointSet(std::vector<Scalar> points);
  /// Sorts and removes duplicates first.
  static PointSet from_unsorted(std::vector<Scalar> points);
  /// {lo, lo+step, ...} up to and including the last value <= hi.
  static PointSet grid(const Scalar& lo, const Scalar& hi, const Scalar& step);

  std::span<const Scalar> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Scalar& operator[](std::size_t i) const { return points_[i]; }
  const Scalar& front() const { return points_.front(); }
  const Scalar& back() const { return points_.back(); }

  PointSet shifted(const Scalar& by) const;
  PointSet scaled(const Scalar& by) const;  // by > 0

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Scalar> points_;
};

struct Interval {
  Scalar lo;
  Scalar hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Finite union of closed intervals in canonical form: every interval has
 * lo <= hi and consecutive intervals are separated by a strictly positive
 * gap. Degenerate intervals are isolated points, so a PointSet converts
 * losslessly.
 */
class IntervalUnion {
 public:
  IntervalUnion(const PointSet& points);  // NOLINT(google-explicit-constructor)
  /// Validates canonical form; throws DomainError otherwise.
  explicit IntervalUnion(std::vector<Interval> intervals);
  /// Sorts and merges overlapping or touching intervals.
  static IntervalUnion canonical(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const Scalar& lo() const { return intervals_.front().lo; }
  const Scalar& hi() const { return intervals_.back().hi; }

  bool contains(const Scalar& p) const;
  /// Set inclusion `other ⊆ *this`.
  bool contains(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Finite segment [lo, hi] standing in for the ambient line.
class Window {
 public:
  Window(Scalar lo, Scalar hi);  // throws DomainError unless lo < hi

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  bool contains(const Scalar& p) const { return lo_ <= p && p <= hi_; }
  bool contains(const PointSet& s) const { return lo_ <= s.front() && s.back() <= hi_; }
  IntervalUnion as_set() const { return IntervalUnion({Interval{lo_, hi_}}); }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Scalar lo_;
  Scalar hi_;
};

Scalar point_to_set_distance(const Scalar& p, const IntervalUnion& s);

/// Exact Hausdorff distance. The directed sup over a continuum is attained
/// at interval endpoints of the first argument or at gap midpoints of the
/// second, so the computation is a finite sweep.
Scalar hausdorff(const IntervalUnion& a, const IntervalUnion& b);

/// Closed r-neighbourhood, merged into canonical form. r < 0 is a DomainError.
IntervalUnion thicken(const IntervalUnion& a, const Scalar& r);

/// Intersection with the window; DomainError if the result would be empty.
IntervalUnion clip(const IntervalUnion& a, const Window& w);

/// d_H(A, [lo, hi]) for A inside the window: boundary gaps count in full,
/// interior gaps by half.
Scalar covering_radius(const PointSet& a, const Window& w);
bool is_eps_net(const PointSet& a, const Window& w, const Scalar& eps);

/// Smallest gap between consecutive points; needs at least two points.
Scalar separation(const PointSet& a);

/// Each interval as the progression a, a+step, ... with its right endpoint
/// always included. Within step/2 of the input in Hausdorff distance.
PointSet sample(const IntervalUnion& s, const Scalar& step);

/// Index of the point of `s` nearest to p; ties go to the smaller index.
std::size_t nearest_index(const PointSet& s, const Scalar& p);

}  // namespace ghnets
