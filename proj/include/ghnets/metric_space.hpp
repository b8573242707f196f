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

#include <optional>
#include <vector>

#include "ghnets/line_sets.hpp"
#include "ghnets/scalar.hpp"

namespace ghnets {

/**
 * Finite metric space as a dense symmetric distance matrix.
 *
 * Construction validates the metric axioms exactly: zero diagonal, symmetry,
 * strictly positive off-diagonal entries and every triangle inequality.
 * Spaces built from a PointSet remember their coordinates; those coordinates
 * are what the order lemmas and the order-restricted search look at.
 */
class FiniteMetricSpace {
 public:
  /// Row-major n x n matrix. Throws DomainError on any axiom violation.
  FiniteMetricSpace(std::size_t n, std::vector<Scalar> dist);
  static FiniteMetricSpace from_points(const PointSet& coords);
  /// The one-point space.
  static FiniteMetricSpace singleton();

  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  const std::optional<PointSet>& line_coords() const { return coords_; }
  bool is_line_embedded() const { return coords_.has_value(); }

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  FiniteMetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<Scalar> dist_;
  std::optional<PointSet> coords_;
};

/// Largest distance; 0 for the one-point space.
Scalar diam(const FiniteMetricSpace& x);

/// Multiplies every distance by lam. lam = 0 collapses to the one-point
/// space; lam < 0 is a DomainError.
FiniteMetricSpace scale_space(const FiniteMetricSpace& x, const Scalar& lam);

}  // namespace ghnets
