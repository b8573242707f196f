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

#include "ghnets/gh_solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ghnets/errors.hpp"

namespace ghnets {

namespace {

/// Every |d_X(i,k) - d_Y(j,l)| replaced by its rank among all such values, so
/// the search compares integers and only converts back at the end.
class ConflictTable {
 public:
  ConflictTable(const FiniteMetricSpace& x, const FiniteMetricSpace& y) : n_(x.size()), m_(y.size()) {
    std::vector<Scalar> dxv = distinct(x), dyv = distinct(y);
    dx_ = index_matrix(x, dxv);
    dy_ = index_matrix(y, dyv);
    ky_ = dyv.size();
    std::vector<Scalar> diffs;
    diffs.reserve(dxv.size() * dyv.size());
    for (const auto& a : dxv) {
      for (const auto& b : dyv) diffs.push_back(abs(a - b));
    }
    values_ = diffs;
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    rank_.reserve(diffs.size());
    for (const auto& d : diffs) rank_.push_back(rank_of(d));
  }

  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return rank_[dx_[i * n_ + k] * ky_ + dy_[j * m_ + l]];
  }
  const Scalar& value(std::uint32_t r) const { return values_[r]; }
  std::uint32_t top() const { return static_cast<std::uint32_t>(values_.size() - 1); }
  std::uint32_t rank_of(const Scalar& v) const {
    return static_cast<std::uint32_t>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
  }

 private:
  static std::vector<Scalar> distinct(const FiniteMetricSpace& s) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i; j < s.size(); ++j) v.push_back(s(i, j));
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
  static std::vector<std::size_t> index_matrix(const FiniteMetricSpace& s, const std::vector<Scalar>& vals) {
    std::vector<std::size_t> idx(s.size() * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        idx[i * s.size() + j] =
            static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), s(i, j)) - vals.begin());
      }
    }
    return idx;
  }

  std::size_t n_, m_, ky_ = 0;
  std::vector<std::size_t> dx_, dy_;
  std::vector<Scalar> values_;
  std::vector<std::uint32_t> rank_;
};

Correspondence full_correspondence(std::size_t n, std::size_t m) {
  std::vector<IndexPair> all;
  all.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) all.emplace_back(i, j);
  }
  return Correspondence(Relation(std::move(all)), n, m);
}

/// Drops pairs front to back while the projections stay surjective.
std::vector<IndexPair> prune_to_minimal(std::vector<IndexPair> pairs, std::size_t n, std::size_t m) {
  for (std::size_t k = 0; k < pairs.size();) {
    std::vector<IndexPair> without(pairs);
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
    if (!without.empty() && is_correspondence(Relation(without), n, m)) {
      pairs = std::move(without);
    } else {
      ++k;
    }
  }
  return pairs;
}

std::vector<std::size_t> by_decreasing_eccentricity(const FiniteMetricSpace& s) {
  std::vector<Scalar> ecc(s.size(), Scalar(0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) ecc[i] = max(ecc[i], s(i, j));
  }
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ecc[b] < ecc[a]; });
  return order;
}

class BranchAndBound {
 public:
  BranchAndBound(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t budget)
      : x_(x),
        y_(y),
        t_(x, y),
        n_(x.size()),
        m_(y.size()),
        x_order_(by_decreasing_eccentricity(x)),
        y_order_(by_decreasing_eccentricity(y)),
        f_(n_, kUnassigned),
        y_cover_(m_, 0),
        budget_(budget) {
    root_lb_ = t_.rank_of(abs(diam(x) - diam(y)));
    inc_ = t_.top();
    inc_pairs_ = full_correspondence(n_, m_).pairs();
    if (x.is_line_embedded() && y.is_line_embedded()) {
      seed_line_correspondences();
      if (n_ >= 2) {
        order_possible_ = true;
        sep_ = separation(*x.line_coords());
      }
    }
    update_reduction();
  }

  GHResult run() {
    if (inc_ > root_lb_) dfs(0);
    GHResult r{Scalar(0), t_.value(inc_) / Scalar(2), std::nullopt, std::nullopt,
               Correspondence(Relation(inc_pairs_), n_, m_), nodes_, order_used_};
    if (!aborted_) {
      r.lower = r.upper;
      r.exact = r.upper;
      r.optimal = r.incumbent;
    } else {
      const std::uint32_t lb = std::max(root_lb_, std::min(inc_, frontier_min_));
      r.lower = t_.value(lb) / Scalar(2);
    }
    return r;
  }

 private:
  static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

  void seed_line_correspondences() {
    const PointSet& a = *x_.line_coords();
    const PointSet& b = *y_.line_coords();
    // As given, and with the Y hull translated onto the X hull's midpoint.
    const Scalar shift = (a.front() + a.back() - b.front() - b.back()) / Scalar(2);
    for (const PointSet& bb : {b, b.shifted(shift)}) {
      Correspondence c = nearest_point_correspondence(a, bb);
      const std::uint32_t r = t_.rank_of(distortion(c.relation(), a, bb).value);
      if (r < inc_) {
        inc_ = r;
        inc_pairs_ = c.pairs();
      }
    }
  }

  void update_reduction() {
    order_active_ = order_possible_ && Scalar(2) * t_.value(inc_) < sep_;
    if (order_active_) order_used_ = true;
  }

  std::uint32_t cost_with(std::size_t i, std::size_t j) const {
    std::uint32_t c = cur_dis_;
    for (const auto& [k, l] : cur_) c = std::max(c, t_(i, j, k, l));
    return c;
  }

  /// Partial distortion plus, for every point still unmatched, the cheapest
  /// way to match it given the pairs already fixed.
  std::uint32_t bound(std::size_t depth) const {
    std::uint32_t lb = cur_dis_;
    for (std::size_t d = depth; d < n_; ++d) {
      const std::size_t i = x_order_[d];
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (std::size_t j = 0; j < m_ && best > lb; ++j) best = std::min(best, cost_with(i, j));
      lb = std::max(lb, best);
      if (lb >= inc_) return lb;
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (y_cover_[j] != 0) continue;
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (std::size_t i = 0; i < n_ && best > lb; ++i) best = std::min(best, cost_with(i, j));
      lb = std::max(lb, best);
      if (lb >= inc_) return lb;
    }
    return lb;
  }

  /// Every assigned image, plus (i, j), forms a strictly monotone map.
  bool monotone_with(std::size_t i, std::size_t j) const {
    if (!order_active_) return true;
    int dir = 0;
    auto consistent = [&](std::size_t a, std::size_t fa, std::size_t b, std::size_t fb) {
      if (fa == fb) return false;
      const int d = ((a < b) == (fa < fb)) ? 1 : -1;
      if (dir == 0) dir = d;
      return dir == d;
    };
    for (std::size_t a = 0; a < n_; ++a) {
      if (f_[a] == kUnassigned) continue;
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (f_[b] != kUnassigned && !consistent(a, f_[a], b, f_[b])) return false;
      }
      if (!consistent(a, f_[a], i, j)) return false;
    }
    return true;
  }

  struct Candidate {
    std::uint32_t cost;
    std::size_t index;
  };

  void dfs(std::size_t depth) {
    if (nodes_ >= budget_) {
      aborted_ = true;
      frontier_min_ = std::min(frontier_min_, cur_dis_);
      return;
    }
    ++nodes_;
    if (bound(depth) >= inc_) return;

    const bool x_phase = depth < n_;
    std::size_t fixed = 0;
    if (x_phase) {
      fixed = x_order_[depth];
    } else {
      auto it = std::find_if(y_order_.begin(), y_order_.end(), [&](std::size_t j) { return y_cover_[j] == 0; });
      if (it == y_order_.end()) {
        if (cur_dis_ < inc_) {
          inc_ = cur_dis_;
          inc_pairs_ = cur_;
          update_reduction();
          if (inc_ <= root_lb_) done_ = true;
        }
        return;
      }
      fixed = *it;
    }

    std::vector<Candidate> cands;
    const std::size_t width = x_phase ? m_ : n_;
    for (std::size_t k = 0; k < width; ++k) {
      const std::size_t i = x_phase ? fixed : k;
      const std::size_t j = x_phase ? k : fixed;
      if (x_phase && !monotone_with(i, j)) continue;
      const std::uint32_t c = cost_with(i, j);
      if (c < inc_) cands.push_back({c, k});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.cost != b.cost ? a.cost < b.cost : a.index < b.index; });

    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (done_) return;
      if (aborted_) {
        frontier_min_ = std::min(frontier_min_, cands[c].cost);
        continue;
      }
      if (cands[c].cost >= inc_) continue;
      if (x_phase && !monotone_with(fixed, cands[c].index)) continue;
      const std::size_t i = x_phase ? fixed : cands[c].index;
      const std::size_t j = x_phase ? cands[c].index : fixed;
      const std::uint32_t saved = cur_dis_;
      cur_.emplace_back(i, j);
      cur_dis_ = cands[c].cost;
      ++y_cover_[j];
      if (x_phase) f_[i] = j;
      dfs(depth + 1);
      if (x_phase) f_[i] = kUnassigned;
      --y_cover_[j];
      cur_dis_ = saved;
      cur_.pop_back();
    }
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  ConflictTable t_;
  std::size_t n_, m_;
  std::vector<std::size_t> x_order_, y_order_;
  std::vector<IndexPair> cur_;
  std::uint32_t cur_dis_ = 0;
  std::vector<std::size_t> f_;
  std::vector<int> y_cover_;

  std::uint32_t inc_ = 0;
  std::vector<IndexPair> inc_pairs_;
  std::uint32_t root_lb_ = 0;

  bool order_possible_ = false;
  bool order_active_ = false;
  bool order_used_ = false;
  Scalar sep_;

  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  bool aborted_ = false;
  bool done_ = false;
  std::uint32_t frontier_min_ = std::numeric_limits<std::uint32_t>::max();
};

}  // namespace

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::size_t cell_limit) {
  const std::size_t n = x.size(), m = y.size(), cells = n * m;
  if (cells > cell_limit || cells > 64) {
    throw ThresholdExceeded("gh_exact: " + std::to_string(n) + "x" + std::to_string(m) +
                            " cells exceed the exhaustive limit of " + std::to_string(std::min<std::size_t>(cell_limit, 64)) +
                            "; use branch-and-bound");
  }
  const ConflictTable t(x, y);
  std::vector<std::uint64_t> row_mask(n, 0), col_mask(m, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    row_mask[c / m] |= std::uint64_t{1} << c;
    col_mask[c % m] |= std::uint64_t{1} << c;
  }

  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> compat(cells);
  std::uint64_t found = 0;

  // Enumerates pairwise-compatible cell sets in include-first order, pruning
  // a branch as soon as a finished row or column is left empty.
  auto search = [&](auto&& self, std::size_t c, std::uint64_t chosen) -> bool {
    ++nodes;
    if (c == cells) {
      found = chosen;
      return true;
    }
    const std::size_t i = c / m, j = c % m;
    if ((chosen & ~compat[c]) == 0 && self(self, c + 1, chosen | (std::uint64_t{1} << c))) return true;
    if (j == m - 1 && (chosen & row_mask[i]) == 0) return false;
    if (i == n - 1 && (chosen & col_mask[j]) == 0) return false;
    return self(self, c + 1, chosen);
  };
  auto feasible = [&](std::uint32_t thr) {
    for (std::size_t c = 0; c < cells; ++c) {
      compat[c] = 0;
      for (std::size_t d = 0; d < cells; ++d) {
        if (t(c / m, c % m, d / m, d % m) <= thr) compat[c] |= std::uint64_t{1} << d;
      }
    }
    return search(search, 0, 0);
  };

  // The full product is feasible at the top rank; bisect for the least
  // feasible threshold.
  std::uint32_t lo = 0, hi = t.top();
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  feasible(lo);

  std::vector<IndexPair> pairs;
  for (std::size_t c = 0; c < cells; ++c) {
    if ((found >> c) & 1U) pairs.emplace_back(c / m, c % m);
  }
  Correspondence best(Relation(prune_to_minimal(std::move(pairs), n, m)), n, m);
  const Scalar half = t.value(lo) / Scalar(2);
  return GHResult{half, half, half, best, best, nodes, false};
}

GHResult gh_branch_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t budget) {
  return BranchAndBound(x, y, budget).run();
}

Scalar gh_to_point(const FiniteMetricSpace& x) { return diam(x) / Scalar(2); }

Scalar gh_diameter_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return abs(diam(x) - diam(y)) / Scalar(2);
}

Scalar gh_diameter_upper_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return max(diam(x), diam(y)) / Scalar(2);
}

}  // namespace ghnets
