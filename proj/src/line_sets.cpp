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

#include "ghnets/line_sets.hpp"

#include <algorithm>

#include "ghnets/errors.hpp"

namespace ghnets {

PointSet::PointSet(std::vector<Scalar> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("PointSet: empty");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) throw DomainError("PointSet: not strictly increasing");
  }
}

PointSet PointSet::from_unsorted(std::vector<Scalar> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return PointSet(std::move(points));
}

PointSet PointSet::grid(const Scalar& lo, const Scalar& hi, const Scalar& step) {
  if (step.sign() <= 0) throw DomainError("grid: step must be positive");
  if (hi < lo) throw DomainError("grid: hi < lo");
  std::vector<Scalar> pts;
  for (Scalar x = lo; x <= hi; x += step) pts.push_back(x);
  return PointSet(std::move(pts));
}

PointSet PointSet::shifted(const Scalar& by) const {
  std::vector<Scalar> out(points_);
  for (auto& p : out) p += by;
  return PointSet(std::move(out));
}

PointSet PointSet::scaled(const Scalar& by) const {
  if (by.sign() <= 0) throw DomainError("PointSet::scaled: factor must be positive");
  std::vector<Scalar> out(points_);
  for (auto& p : out) p *= by;
  return PointSet(std::move(out));
}

IntervalUnion::IntervalUnion(const PointSet& points) {
  intervals_.reserve(points.size());
  for (const auto& p : points.points()) intervals_.push_back({p, p});
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw DomainError("IntervalUnion: empty");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].hi < intervals_[i].lo) throw DomainError("IntervalUnion: interval with hi < lo");
    if (i > 0 && !(intervals_[i - 1].hi < intervals_[i].lo)) {
      throw DomainError("IntervalUnion: intervals overlap, touch, or are unsorted");
    }
  }
}

IntervalUnion IntervalUnion::canonical(std::vector<Interval> intervals) {
  if (intervals.empty()) throw DomainError("IntervalUnion: empty");
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) throw DomainError("IntervalUnion: interval with hi < lo");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  merged.reserve(intervals.size());
  for (auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (merged.back().hi < iv.hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return IntervalUnion(std::move(merged));
}

bool IntervalUnion::contains(const Scalar& p) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), p,
                             [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return p <= it->hi;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  // Each interval of `other` is connected, so it must sit inside a single
  // interval of *this.
  for (const auto& iv : other.intervals_) {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), iv.lo,
                               [](const Scalar& v, const Interval& c) { return v < c.lo; });
    if (it == intervals_.begin()) return false;
    --it;
    if (!(iv.hi <= it->hi)) return false;
  }
  return true;
}

Window::Window(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw DomainError("Window: requires lo < hi");
}

Scalar point_to_set_distance(const Scalar& p, const IntervalUnion& s) {
  const auto ivs = s.intervals();
  // First interval whose lo exceeds p; the candidate on each side is enough.
  auto it = std::upper_bound(ivs.begin(), ivs.end(), p,
                             [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
  Scalar best;
  bool have = false;
  if (it != ivs.end()) {
    best = it->lo - p;
    have = true;
  }
  if (it != ivs.begin()) {
    const Interval& left = *(it - 1);
    Scalar d = p <= left.hi ? Scalar(0) : p - left.hi;
    if (!have || d < best) best = std::move(d);
  }
  return best;
}

namespace {

Scalar directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  const auto bivs = b.intervals();
  std::vector<Scalar> gap_mid;
  gap_mid.reserve(bivs.size());
  for (std::size_t i = 0; i + 1 < bivs.size(); ++i) {
    gap_mid.push_back((bivs[i].hi + bivs[i + 1].lo) / Scalar(2));
  }

  Scalar sup(0);
  for (const auto& iv : a.intervals()) {
    sup = max(sup, point_to_set_distance(iv.lo, b));
    sup = max(sup, point_to_set_distance(iv.hi, b));
    auto first = std::lower_bound(gap_mid.begin(), gap_mid.end(), iv.lo);
    for (auto it = first; it != gap_mid.end() && *it <= iv.hi; ++it) {
      const std::size_t g = static_cast<std::size_t>(it - gap_mid.begin());
      sup = max(sup, (bivs[g + 1].lo - bivs[g].hi) / Scalar(2));
    }
  }
  return sup;
}

}  // namespace

Scalar hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  return max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

IntervalUnion thicken(const IntervalUnion& a, const Scalar& r) {
  if (r.sign() < 0) throw DomainError("thicken: negative radius");
  std::vector<Interval> out;
  out.reserve(a.size());
  for (const auto& iv : a.intervals()) {
    Interval grown{iv.lo - r, iv.hi + r};
    if (!out.empty() && grown.lo <= out.back().hi) {
      out.back().hi = std::move(grown.hi);
    } else {
      out.push_back(std::move(grown));
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion clip(const IntervalUnion& a, const Window& w) {
  std::vector<Interval> out;
  for (const auto& iv : a.intervals()) {
    if (iv.hi < w.lo() || w.hi() < iv.lo) continue;
    out.push_back({max(iv.lo, w.lo()), min(iv.hi, w.hi())});
  }
  if (out.empty()) throw DomainError("clip: set does not meet the window");
  return IntervalUnion(std::move(out));
}

Scalar covering_radius(const PointSet& a, const Window& w) {
  if (!w.contains(a)) throw DomainError("covering_radius: point outside window");
  Scalar r = max(a.front() - w.lo(), w.hi() - a.back());
  for (std::size_t i = 1; i < a.size(); ++i) {
    r = max(r, (a[i] - a[i - 1]) / Scalar(2));
  }
  return r;
}

bool is_eps_net(const PointSet& a, const Window& w, const Scalar& eps) {
  return covering_radius(a, w) <= eps;
}

Scalar separation(const PointSet& a) {
  if (a.size() < 2) throw DomainError("separation: needs at least two points");
  Scalar t = a[1] - a[0];
  for (std::size_t i = 2; i < a.size(); ++i) t = min(t, a[i] - a[i - 1]);
  return t;
}

PointSet sample(const IntervalUnion& s, const Scalar& step) {
  if (step.sign() <= 0) throw DomainError("sample: step must be positive");
  std::vector<Scalar> pts;
  for (const auto& iv : s.intervals()) {
    for (Scalar x = iv.lo; x < iv.hi; x += step) pts.push_back(x);
    pts.push_back(iv.hi);
  }
  return PointSet(std::move(pts));
}

std::size_t nearest_index(const PointSet& s, const Scalar& p) {
  const auto pts = s.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end()) return pts.size() - 1;
  const auto i = static_cast<std::size_t>(it - pts.begin());
  if (i == 0) return 0;
  return (p - pts[i - 1]) <= (pts[i] - p) ? i - 1 : i;
}

}  // namespace ghnets
