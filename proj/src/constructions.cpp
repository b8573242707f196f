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

#include "ghnets/constructions.hpp"

#include <algorithm>

#include "ghnets/errors.hpp"
#include "ghnets/homotopy.hpp"

namespace ghnets {

namespace {

/// Index range of the points of `s` inside [lo, hi].
std::pair<std::size_t, std::size_t> points_within(const PointSet& s, const Scalar& lo, const Scalar& hi) {
  const auto pts = s.points();
  const auto first = std::lower_bound(pts.begin(), pts.end(), lo);
  const auto last = std::upper_bound(pts.begin(), pts.end(), hi);
  return {static_cast<std::size_t>(first - pts.begin()), static_cast<std::size_t>(last - pts.begin())};
}

std::size_t index_of(const PointSet& s, const Scalar& v) {
  const auto pts = s.points();
  return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
}

PointSet with_points(const PointSet& sampled, const PointSet& extra) {
  std::vector<Scalar> all(sampled.points().begin(), sampled.points().end());
  all.insert(all.end(), extra.points().begin(), extra.points().end());
  return PointSet::from_unsorted(std::move(all));
}

/// Accumulates pairs and the largest rounding residual.
struct PairSink {
  std::vector<IndexPair> pairs;
  Scalar residual{0};

  void add(std::size_t i, std::size_t j, const Scalar& miss) {
    pairs.emplace_back(i, j);
    residual = max(residual, miss);
  }
};

/// Largest gap between neighbouring points of `s` that lie in the same
/// interval of `u`.
Scalar mesh(const IntervalUnion& u, const PointSet& s) {
  Scalar widest(0);
  std::size_t iv = 0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    while (u[iv].hi < s[k]) ++iv;
    if (s[k + 1] <= u[iv].hi) widest = max(widest, s[k + 1] - s[k]);
  }
  return widest;
}

ConstructionResult finish(PointSet source, PointSet target, PairSink sink, Scalar bound, const Scalar& slack) {
  Correspondence corr(Relation(std::move(sink.pairs)), source.size(), target.size());
  DistortionCertificate cert = distortion(corr.relation(), source, target);
  return ConstructionResult{std::move(source), std::move(target), std::move(corr), std::move(cert), std::move(bound),
                            slack, Scalar(2) * sink.residual};
}

}  // namespace

ConstructionResult segment_correspondence(const PointSet& x, const Scalar& r1, const Scalar& r2, const Scalar& step) {
  if (step.sign() <= 0) throw DomainError("segment_correspondence: step must be positive");
  if (r1.sign() < 0 || r2.sign() < 0) throw DomainError("segment_correspondence: negative radius");

  const IntervalUnion src_set = thicken(x, r1), dst_set = thicken(x, r2);
  PointSet src = sample(src_set, step);
  PointSet dst = sample(dst_set, step);
  PairSink sink;
  for (const auto& c : x.points()) {
    // Natural map of [c - r1, c + r1] onto [c - r2, c + r2] and its inverse;
    // a radius of zero collapses the segment onto its centre.
    const auto [s0, s1] = points_within(src, c - r1, c + r1);
    for (std::size_t i = s0; i < s1; ++i) {
      const Scalar image = r1.sign() > 0 ? c + (src[i] - c) * r2 / r1 : c;
      const std::size_t j = nearest_index(dst, image);
      sink.add(i, j, abs(dst[j] - image));
    }
    const auto [t0, t1] = points_within(dst, c - r2, c + r2);
    for (std::size_t j = t0; j < t1; ++j) {
      const Scalar pre = r2.sign() > 0 ? c + (dst[j] - c) * r1 / r2 : c;
      const std::size_t i = nearest_index(src, pre);
      sink.add(i, j, abs(src[i] - pre));
    }
  }
  const Scalar slack = max(mesh(src_set, src), mesh(dst_set, dst));
  return finish(std::move(src), std::move(dst), std::move(sink), Scalar(2) * abs(r1 - r2), slack);
}

ConstructionResult extend_correspondence(const Correspondence& r, const PointSet& x, const PointSet& xn,
                                         const Scalar& lam, const Scalar& step) {
  if (!(lam.sign() > 0 && lam < Scalar(1))) throw DomainError("extend_correspondence: lam must lie in (0, 1)");
  if (step.sign() <= 0) throw DomainError("extend_correspondence: step must be positive");
  if (r.x_size() != x.size() || r.y_size() != xn.size()) {
    throw DomainError("extend_correspondence: correspondence sizes do not match the point sets");
  }
  const Scalar dis = distortion(r.relation(), x, xn).value;
  if (!(Scalar(8) * dis < lam)) {
    throw PreconditionUnmet("extend_correspondence: requires dis R < lam/8, got dis R = " + dis.to_string() +
                            " with lam = " + lam.to_string());
  }
  const Scalar radius = *f_map(lam);

  const IntervalUnion src_set = thicken(x, radius), dst_set = thicken(xn, radius);
  PointSet src = with_points(sample(src_set, step), x);
  PointSet dst = with_points(sample(dst_set, step), xn);
  PairSink sink;
  for (const auto& [i, j] : r.pairs()) sink.add(index_of(src, x[i]), index_of(dst, xn[j]), Scalar(0));

  // Shift rule: a in B(x) goes to x' + a - x, with x the nearest centre.
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::size_t centre = nearest_index(x, src[i]);
    if (x[centre] == src[i]) continue;
    const Scalar target = xn[r.canonical_image(centre)] + src[i] - x[centre];
    const std::size_t j = nearest_index(dst, target);
    sink.add(i, j, abs(dst[j] - target));
  }
  for (std::size_t j = 0; j < dst.size(); ++j) {
    const std::size_t centre = nearest_index(xn, dst[j]);
    if (xn[centre] == dst[j]) continue;
    const Scalar target = x[r.canonical_preimage(centre)] + dst[j] - xn[centre];
    const std::size_t i = nearest_index(src, target);
    sink.add(i, j, abs(src[i] - target));
  }
  const Scalar slack = max(mesh(src_set, src), mesh(dst_set, dst));
  return finish(std::move(src), std::move(dst), std::move(sink), Scalar(5) * dis, slack);
}

}  // namespace ghnets
