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
#include <optional>

#include "ghnets/correspondence.hpp"
#include "ghnets/metric_space.hpp"

namespace ghnets {

/// Default refusal threshold for exhaustive enumeration: |X|*|Y| cells.
inline constexpr std::size_t kExhaustiveCellLimit = 25;
inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000;

/**
 * Gromov-Hausdorff bounds for a pair of finite spaces.
 *
 * All three numbers are on the d_GH scale (half a distortion). `incumbent`
 * is the best correspondence seen and always has distortion 2 * upper;
 * `optimal` is set exactly when the search closed the gap.
 */
struct GHResult {
  Scalar lower;
  Scalar upper;
  std::optional<Scalar> exact;
  std::optional<Correspondence> optimal;
  Correspondence incumbent;
  std::uint64_t nodes_explored = 0;
  /// Set once the search restricted itself to monotone assignments.
  bool order_reduction = false;
};

/// Exact d_GH by exhaustive enumeration of relations inside X x Y. Refuses
/// with ThresholdExceeded when |X|*|Y| > cell_limit.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  std::size_t cell_limit = kExhaustiveCellLimit);

/**
 * Depth-first branch and bound over correspondences of the form
 * graph(f) plus one partner for every Y-point f misses.
 *
 * X-points are assigned in decreasing eccentricity, candidate images in
 * increasing partial distortion (smallest index on ties). Nodes are pruned
 * against the incumbent using the partial distortion plus a one-step
 * look-ahead for every unassigned point. When both spaces carry line
 * coordinates and the incumbent distortion c satisfies sep(X) > 2c, images
 * are restricted to strictly monotone maps. Running out of budget returns
 * certified bounds without an exact value.
 */
GHResult gh_branch_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                         std::uint64_t budget = kDefaultNodeBudget);

/// d_GH(X, one point) = diam(X) / 2.
Scalar gh_to_point(const FiniteMetricSpace& x);

/// (1/2)|diam X - diam Y| and (1/2)max(diam X, diam Y).
Scalar gh_diameter_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y);
Scalar gh_diameter_upper_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace ghnets
