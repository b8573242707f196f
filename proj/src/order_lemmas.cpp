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

#include "ghnets/order_lemmas.hpp"

#include "ghnets/errors.hpp"

namespace ghnets {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kViolation: return "violation";
    case CheckStatus::kRefused: return "refused";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void require_sizes(const Correspondence& r, const PointSet& x, const PointSet& y) {
  if (r.x_size() != x.size() || r.y_size() != y.size()) {
    throw DomainError("correspondence sizes do not match the point sets");
  }
}

bool strictly_between(std::size_t v, std::size_t a, std::size_t b) {
  return (a < v && v < b) || (b < v && v < a);
}

}  // namespace

OrderPreservationReport check_order_preservation(const Correspondence& r, const PointSet& x, const PointSet& y) {
  require_sizes(r, x, y);
  OrderPreservationReport rep;
  rep.distortion = distortion(r.relation(), x, y).value;
  if (x.size() < 2) return rep;
  rep.separation = separation(x);
  if (!(Scalar(2) * rep.distortion < *rep.separation)) {
    rep.status = CheckStatus::kRefused;
    return rep;
  }

  std::vector<std::size_t> img(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) img[i] = r.canonical_image(i);
  // Y is sorted too, so comparing image indices compares coordinates.
  for (std::size_t q = 0; q < x.size(); ++q) {
    for (std::size_t p = q + 1; p < x.size(); ++p) {
      for (std::size_t s = p + 1; s < x.size(); ++s) {
        if (!strictly_between(img[p], img[q], img[s])) {
          rep.status = CheckStatus::kViolation;
          rep.violation = std::array<std::size_t, 3>{p, q, s};
          return rep;
        }
      }
    }
  }
  return rep;
}

InversionReport check_inversions(const Correspondence& r, const PointSet& x, const PointSet& y, const Scalar& bound) {
  require_sizes(r, x, y);
  InversionReport rep;
  rep.distortion = distortion(r.relation(), x, y).value;
  rep.bound = bound;
  for (const auto& [a, ap] : r.pairs()) {
    for (const auto& [b, bp] : r.pairs()) {
      if (!(a < b && bp < ap)) continue;
      ++rep.inversions;
      if (bound < x[b] - x[a] && !rep.violation) {
        rep.status = CheckStatus::kViolation;
        rep.violation = std::array<IndexPair, 2>{IndexPair{a, ap}, IndexPair{b, bp}};
      }
    }
  }
  return rep;
}

InversionReport order_violation_bound(const Correspondence& r, const PointSet& x, const PointSet& y,
                                      const Scalar& margin) {
  require_sizes(r, x, y);
  InversionReport rep;
  rep.distortion = distortion(r.relation(), x, y).value;
  rep.bound = Scalar(2) * rep.distortion;
  const Scalar reach = max(margin, rep.bound);
  bool unwitnessed = false;
  for (const auto& [a, ap] : r.pairs()) {
    for (const auto& [b, bp] : r.pairs()) {
      if (!(a < b && bp < ap)) continue;
      ++rep.inversions;
      bool witnessed = false;
      for (std::size_t p = b + 1; p < x.size() && !witnessed; ++p) {
        witnessed = x[b] + reach < x[p] && ap <= r.canonical_image(p);
      }
      if (!witnessed) {
        unwitnessed = true;
      } else if (rep.bound < x[b] - x[a] && !rep.violation) {
        rep.violation = std::array<IndexPair, 2>{IndexPair{a, ap}, IndexPair{b, bp}};
      }
    }
  }
  if (rep.violation) {
    rep.status = CheckStatus::kViolation;
  } else if (unwitnessed) {
    rep.status = CheckStatus::kInconclusive;
  }
  return rep;
}

}  // namespace ghnets
