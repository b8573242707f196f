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

#include "ghnets/correspondence.hpp"
#include "ghnets/line_sets.hpp"

namespace ghnets {

/**
 * A correspondence between two sampled thickenings together with the
 * guarantee it was built to meet.
 *
 * Every pair is a continuum pair with one end rounded to the nearest sample
 * point. A rounded end lands inside the same interval of the thickening, so
 * it moves by at most half the sample mesh (the widest gap between
 * neighbouring samples of one interval) and the distortion by at most the
 * mesh. `slack` is that mesh, kept apart from `bound`: value <= bound + slack
 * is the checked statement and slack shrinks linearly with the step.
 * `rounding` is twice the largest residual actually incurred, <= slack.
 */
struct ConstructionResult {
  PointSet source;
  PointSet target;
  Correspondence correspondence;
  DistortionCertificate certificate;
  Scalar bound;
  Scalar slack;
  Scalar rounding;

  bool within_bound() const { return certificate.value <= bound + slack; }
  /// The sharper statement with the realized residuals in place of the mesh.
  bool within_rounding() const { return certificate.value <= bound + rounding; }
};

/**
 * Union over x in X of the affine correspondences between the segments
 * [x - r1, x + r1] and [x - r2, x + r2], realized on
 * sample(thicken(X, r1), step) and sample(thicken(X, r2), step).
 * bound = 2|r1 - r2|. DomainError for a negative radius or step <= 0.
 */
ConstructionResult segment_correspondence(const PointSet& x, const Scalar& r1, const Scalar& r2, const Scalar& step);

/**
 * Extends a correspondence R between X and Xn to the sampled thickenings of
 * radius lam / (1 - lam): a point a near x that is not already in X is paired
 * with x' + a - x for the smallest x' in R(x), and symmetrically on the Xn
 * side. bound = 5 dis R.
 *
 * Throws PreconditionUnmet unless dis R < lam / 8, DomainError unless
 * 0 < lam < 1 and step > 0.
 */
ConstructionResult extend_correspondence(const Correspondence& r, const PointSet& x, const PointSet& xn,
                                         const Scalar& lam, const Scalar& step);

}  // namespace ghnets
