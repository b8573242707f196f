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

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ghnets/line_sets.hpp"

namespace ghnets {

/// Homotopy time in [0, 1]; 1 is the terminal time where every net becomes
/// the whole window.
class HomotopyParam {
 public:
  explicit HomotopyParam(Scalar lam);  // DomainError outside [0, 1]

  const Scalar& value() const { return lam_; }
  bool is_terminal() const { return lam_ == Scalar(1); }

 private:
  Scalar lam_;
};

/// lam / (1 - lam); nullopt stands for +infinity at lam = 1. DomainError
/// outside [0, 1].
std::optional<Scalar> f_map(const Scalar& lam);

/// The contraction: the closed f(lam)-neighbourhood of X clipped to W, and W
/// itself at lam = 1.
IntervalUnion contract(const PointSet& x, const HomotopyParam& lam, const Window& w);

/// A measured Hausdorff distance next to the bound it must respect.
struct Certified {
  Scalar measured;
  Scalar bound;
  bool holds() const { return measured <= bound; }
};

/// (d_H(Phi(X, lam1), Phi(X, lam2)), |f(lam1) - f(lam2)|). Both times < 1.
Certified continuity_in_lambda(const PointSet& x, const HomotopyParam& lam1, const HomotopyParam& lam2,
                               const Window& w);

/// (d_H(Phi(Xn, lam), Phi(X, lam)), d_H(Xn, X)). lam < 1.
Certified stability_in_space(const PointSet& x, const PointSet& xn, const HomotopyParam& lam, const Window& w);

/// Least r with thicken(X, r) covering W.
Scalar saturation_radius(const PointSet& x, const Window& w);

struct TraceRow {
  Scalar lam;
  IntervalUnion space;
  Scalar d_h_to_window;
  /// Hausdorff distance to the previous row's space (0 on the first row).
  Scalar step_d_h;
  Scalar certified_bound;
};

struct HomotopyTrace {
  std::vector<TraceRow> rows;
};

/// One row per grid time. The grid must be ascending within [0, 1]. The
/// step bound is |f(lam) - f(prev)|, or max(0, saturation - f(prev)) when
/// stepping to lam = 1.
HomotopyTrace trace(const PointSet& x, const Window& w, std::span<const HomotopyParam> grid);

/// Columns: lam, f_lam, num_intervals, d_H_to_window, step_d_H,
/// certified_bound, then decimal approximations of lam and d_H_to_window.
void write_trace_csv(std::ostream& os, const HomotopyTrace& t);

/// Upper bound on d_GH(S, W) from the nearest-point correspondence between
/// sample(S, step) and sample(W, step): half its distortion.
Scalar gh_window_upper_bound(const IntervalUnion& s, const Window& w, const Scalar& step);

}  // namespace ghnets
