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

#include "ghnets/metric_space.hpp"

#include "ghnets/errors.hpp"

namespace ghnets {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<Scalar> dist) : n_(n), dist_(std::move(dist)) {
  if (n_ == 0) throw DomainError("FiniteMetricSpace: empty space");
  if (dist_.size() != n_ * n_) throw DomainError("FiniteMetricSpace: matrix is not n x n");
  const auto& d = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    if (d(i, i).sign() != 0) throw DomainError("FiniteMetricSpace: nonzero diagonal");
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (d(i, j) != d(j, i)) throw DomainError("FiniteMetricSpace: matrix not symmetric");
      if (d(i, j).sign() <= 0) throw DomainError("FiniteMetricSpace: off-diagonal entry not positive");
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (d(i, k) > d(i, j) + d(j, k)) throw DomainError("FiniteMetricSpace: triangle inequality fails");
      }
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::from_points(const PointSet& coords) {
  FiniteMetricSpace s;
  s.n_ = coords.size();
  s.dist_.resize(s.n_ * s.n_);
  for (std::size_t i = 0; i < s.n_; ++i) {
    for (std::size_t j = 0; j < s.n_; ++j) s.dist_[i * s.n_ + j] = abs(coords[i] - coords[j]);
  }
  s.coords_ = coords;
  return s;
}

FiniteMetricSpace FiniteMetricSpace::singleton() { return from_points(PointSet({Scalar(0)})); }

Scalar diam(const FiniteMetricSpace& x) {
  Scalar d(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) d = max(d, x(i, j));
  }
  return d;
}

FiniteMetricSpace scale_space(const FiniteMetricSpace& x, const Scalar& lam) {
  if (lam.sign() < 0) throw DomainError("scale_space: negative factor");
  if (lam.sign() == 0) return FiniteMetricSpace::singleton();
  if (x.line_coords()) return FiniteMetricSpace::from_points(x.line_coords()->scaled(lam));
  std::vector<Scalar> d;
  d.reserve(x.size() * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) d.push_back(x(i, j) * lam);
  }
  return FiniteMetricSpace(x.size(), std::move(d));
}

}  // namespace ghnets
