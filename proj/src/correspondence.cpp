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

#include "ghnets/correspondence.hpp"

#include <algorithm>

#include "ghnets/errors.hpp"

namespace ghnets {

Relation::Relation(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw DomainError("Relation: empty");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::contains(const IndexPair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

bool is_correspondence(const Relation& r, std::size_t nx, std::size_t ny) {
  std::vector<char> hit_x(nx, 0), hit_y(ny, 0);
  for (const auto& [i, j] : r.pairs()) {
    if (i >= nx || j >= ny) return false;
    hit_x[i] = 1;
    hit_y[j] = 1;
  }
  return std::all_of(hit_x.begin(), hit_x.end(), [](char c) { return c != 0; }) &&
         std::all_of(hit_y.begin(), hit_y.end(), [](char c) { return c != 0; });
}

Correspondence::Correspondence(Relation r, std::size_t x_size, std::size_t y_size)
    : r_(std::move(r)), nx_(x_size), ny_(y_size) {
  for (const auto& [i, j] : r_.pairs()) {
    if (i >= nx_ || j >= ny_) throw DomainError("Correspondence: index out of range");
  }
  if (!is_correspondence(r_, nx_, ny_)) throw DomainError("Correspondence: projection not surjective");
}

std::size_t Correspondence::canonical_image(std::size_t i) const {
  // Pairs are sorted lexicographically, so the first hit has the smallest j.
  auto it = std::lower_bound(pairs().begin(), pairs().end(), IndexPair{i, 0});
  if (it == pairs().end() || it->first != i) throw DomainError("canonical_image: index out of range");
  return it->second;
}

std::size_t Correspondence::canonical_preimage(std::size_t j) const {
  for (const auto& [i, jj] : pairs()) {
    if (jj == j) return i;  // sorted by i first
  }
  throw DomainError("canonical_preimage: index out of range");
}

namespace {

template <typename DistX, typename DistY>
DistortionCertificate sweep(const Relation& r, DistX&& dx, DistY&& dy) {
  const auto& p = r.pairs();
  DistortionCertificate c{Scalar(0), p.front(), p.front()};
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      Scalar v = abs(dx(p[a].first, p[b].first) - dy(p[a].second, p[b].second));
      if (c.value < v) {
        c.value = std::move(v);
        c.first = p[a];
        c.second = p[b];
      }
    }
  }
  return c;
}

void check_indices(const Relation& r, std::size_t nx, std::size_t ny) {
  for (const auto& [i, j] : r.pairs()) {
    if (i >= nx || j >= ny) throw DomainError("distortion: index out of range");
  }
}

}  // namespace

DistortionCertificate distortion(const Relation& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  check_indices(r, x.size(), y.size());
  return sweep(
      r, [&](std::size_t i, std::size_t k) -> const Scalar& { return x(i, k); },
      [&](std::size_t j, std::size_t l) -> const Scalar& { return y(j, l); });
}

DistortionCertificate distortion(const Relation& r, const PointSet& x, const PointSet& y) {
  check_indices(r, x.size(), y.size());
  return sweep(
      r, [&](std::size_t i, std::size_t k) { return abs(x[i] - x[k]); },
      [&](std::size_t j, std::size_t l) { return abs(y[j] - y[l]); });
}

bool certificate_holds(const DistortionCertificate& c, const Relation& r, const FiniteMetricSpace& x,
                       const FiniteMetricSpace& y) {
  if (!r.contains(c.first) || !r.contains(c.second)) return false;
  check_indices(r, x.size(), y.size());
  if (abs(x(c.first.first, c.second.first) - y(c.first.second, c.second.second)) != c.value) return false;
  for (const auto& p : r.pairs()) {
    for (const auto& q : r.pairs()) {
      if (c.value < abs(x(p.first, q.first) - y(p.second, q.second))) return false;
    }
  }
  return true;
}

Correspondence nearest_point_correspondence(const PointSet& a, const PointSet& b) {
  std::vector<IndexPair> pairs;
  pairs.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(i, nearest_index(b, a[i]));
  for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(nearest_index(a, b[j]), j);
  return Correspondence(Relation(std::move(pairs)), a.size(), b.size());
}

}  // namespace ghnets
