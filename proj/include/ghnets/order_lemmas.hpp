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

#include <array>
#include <optional>

#include "ghnets/correspondence.hpp"
#include "ghnets/line_sets.hpp"

namespace ghnets {

// Checkers for how a low-distortion correspondence between subsets of the
// line can reorder points. Indices refer to positions in the sorted PointSets,
// so index order is coordinate order.

enum class CheckStatus {
  kPass,
  kViolation,
  /// Hypotheses unmet; a failure would not indicate a bug.
  kRefused,
  /// No usable witness point for some inverted pair.
  kInconclusive,
};

const char* to_string(CheckStatus s);

struct OrderPreservationReport {
  CheckStatus status = CheckStatus::kPass;
  Scalar distortion;
  /// Minimum gap of X; absent when |X| < 2 (every t works).
  std::optional<Scalar> separation;
  /// (p, q, r) with p between q and r but p' not between q' and r'.
  std::optional<std::array<std::size_t, 3>> violation;
};

/**
 * With p' the smallest image of p, checks that whenever p lies between q and
 * r, p' lies strictly between q' and r'. Refuses unless X is t-separated with
 * t > 2 dis R.
 */
OrderPreservationReport check_order_preservation(const Correspondence& r, const PointSet& x, const PointSet& y);

struct InversionReport {
  CheckStatus status = CheckStatus::kPass;
  Scalar distortion;
  Scalar bound;
  std::size_t inversions = 0;
  /// ((a, a'), (b, b')) with a < b, a' > b' and b - a > bound.
  std::optional<std::array<IndexPair, 2>> violation;
};

/// Flags every inverted pair of pairs whose X-gap exceeds `bound`. No
/// witness logic; order_violation_bound is the guarded entry point.
InversionReport check_inversions(const Correspondence& r, const PointSet& x, const PointSet& y, const Scalar& bound);

inline const Scalar kDefaultWitnessMargin{100};

/**
 * For every (a, a'), (b, b') in R with a < b and a' > b', checks
 * b - a <= 2 dis R. Each inverted pair needs a witness p in X with
 * p > b + max(margin, 2 dis R) whose smallest image sits at or right of a';
 * without one the result is inconclusive rather than a failure.
 */
InversionReport order_violation_bound(const Correspondence& r, const PointSet& x, const PointSet& y,
                                      const Scalar& margin = kDefaultWitnessMargin);

}  // namespace ghnets
