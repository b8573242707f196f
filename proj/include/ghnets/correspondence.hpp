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

#include <cstddef>
#include <utility>
#include <vector>

#include "ghnets/line_sets.hpp"
#include "ghnets/metric_space.hpp"
#include "ghnets/scalar.hpp"

namespace ghnets {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Nonempty set of index pairs (i into X, j into Y), kept sorted and unique.
class Relation {
 public:
  explicit Relation(std::vector<IndexPair> pairs);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(const IndexPair& p) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<IndexPair> pairs_;
};

/// A relation whose projections onto both factors are surjective.
class Correspondence {
 public:
  /// Throws DomainError if an index is out of range or a point of either
  /// side is left unmatched.
  Correspondence(Relation r, std::size_t x_size, std::size_t y_size);

  const Relation& relation() const { return r_; }
  const std::vector<IndexPair>& pairs() const { return r_.pairs(); }
  std::size_t x_size() const { return nx_; }
  std::size_t y_size() const { return ny_; }

  /// Smallest j with (i, j) in the correspondence.
  std::size_t canonical_image(std::size_t i) const;
  /// Smallest i with (i, j) in the correspondence.
  std::size_t canonical_preimage(std::size_t j) const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  Relation r_;
  std::size_t nx_;
  std::size_t ny_;
};

/// True when every i < nx and every j < ny occurs in some pair.
bool is_correspondence(const Relation& r, std::size_t nx, std::size_t ny);

/// Exact distortion with a pair of pairs attaining it. For |R| = 1 (or an
/// isometry) the witness is the first pair taken twice.
struct DistortionCertificate {
  Scalar value;
  IndexPair first;
  IndexPair second;
};

/// O(|R|^2) sweep; DomainError if an index is out of range for X or Y.
DistortionCertificate distortion(const Relation& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y);
/// Same for subsets of the line, without materializing distance matrices.
DistortionCertificate distortion(const Relation& r, const PointSet& x, const PointSet& y);

/// Re-checks a certificate from scratch: the witness attains `value` and no
/// pair of pairs exceeds it.
bool certificate_holds(const DistortionCertificate& c, const Relation& r, const FiniteMetricSpace& x,
                       const FiniteMetricSpace& y);

/// Pairs every point of each set with its nearest point in the other. Its
/// distortion is at most 2 d_H(A, B), which makes it the standard witness
/// for d_GH(A, B) <= d_H(A, B) on the line.
Correspondence nearest_point_correspondence(const PointSet& a, const PointSet& b);

}  // namespace ghnets
