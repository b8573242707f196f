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

#include "ghnets/homotopy.hpp"

#include <ostream>

#include "ghnets/correspondence.hpp"
#include "ghnets/errors.hpp"

namespace ghnets {

HomotopyParam::HomotopyParam(Scalar lam) : lam_(std::move(lam)) {
  if (lam_.sign() < 0 || Scalar(1) < lam_) throw DomainError("homotopy time must lie in [0, 1]");
}

std::optional<Scalar> f_map(const Scalar& lam) {
  if (lam.sign() < 0 || Scalar(1) < lam) throw DomainError("f_map: argument outside [0, 1]");
  if (lam == Scalar(1)) return std::nullopt;
  return lam / (Scalar(1) - lam);
}

IntervalUnion contract(const PointSet& x, const HomotopyParam& lam, const Window& w) {
  if (!w.contains(x)) throw DomainError("contract: net not inside the window");
  if (lam.is_terminal()) return w.as_set();
  return clip(thicken(x, *f_map(lam.value())), w);
}

namespace {

const Scalar& finite_time(const HomotopyParam& lam) {
  if (lam.is_terminal()) throw DomainError("expected a homotopy time below 1");
  return lam.value();
}

}  // namespace

Certified continuity_in_lambda(const PointSet& x, const HomotopyParam& lam1, const HomotopyParam& lam2,
                               const Window& w) {
  const Scalar f1 = *f_map(finite_time(lam1));
  const Scalar f2 = *f_map(finite_time(lam2));
  return {hausdorff(contract(x, lam1, w), contract(x, lam2, w)), abs(f1 - f2)};
}

Certified stability_in_space(const PointSet& x, const PointSet& xn, const HomotopyParam& lam, const Window& w) {
  finite_time(lam);
  return {hausdorff(contract(xn, lam, w), contract(x, lam, w)), hausdorff(xn, x)};
}

Scalar saturation_radius(const PointSet& x, const Window& w) { return covering_radius(x, w); }

HomotopyTrace trace(const PointSet& x, const Window& w, std::span<const HomotopyParam> grid) {
  if (grid.empty()) throw DomainError("trace: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i].value() < grid[i - 1].value()) throw DomainError("trace: grid not ascending");
  }
  const IntervalUnion window = w.as_set();
  const Scalar saturation = saturation_radius(x, w);
  HomotopyTrace t;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    IntervalUnion space = contract(x, grid[i], w);
    Scalar to_window = hausdorff(space, window);
    Scalar step(0), bound(0);
    if (i > 0) {
      step = hausdorff(space, t.rows.back().space);
      const auto prev = f_map(grid[i - 1].value());
      const auto cur = f_map(grid[i].value());
      if (!prev) {
        bound = Scalar(0);
      } else if (!cur) {
        bound = max(Scalar(0), saturation - *prev);
      } else {
        bound = abs(*cur - *prev);
      }
    }
    t.rows.push_back({grid[i].value(), std::move(space), std::move(to_window), std::move(step), std::move(bound)});
  }
  return t;
}

void write_trace_csv(std::ostream& os, const HomotopyTrace& t) {
  os << "lam,f_lam,num_intervals,d_H_to_window,step_d_H,certified_bound,lam_approx,d_H_to_window_approx\n";
  for (const auto& r : t.rows) {
    const auto f = f_map(r.lam);
    os << r.lam << ',' << (f ? f->to_string() : std::string("inf")) << ',' << r.space.size() << ','
       << r.d_h_to_window << ',' << r.step_d_h << ',' << r.certified_bound << ',' << r.lam.to_decimal() << ','
       << r.d_h_to_window.to_decimal() << '\n';
  }
}

Scalar gh_window_upper_bound(const IntervalUnion& s, const Window& w, const Scalar& step) {
  const PointSet a = sample(s, step);
  const PointSet b = sample(w.as_set(), step);
  const Correspondence c = nearest_point_correspondence(a, b);
  return distortion(c.relation(), a, b).value / Scalar(2);
}

}  // namespace ghnets
