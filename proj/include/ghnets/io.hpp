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

// JSON documents for spaces, distance matrices and distortion certificates.
//
// Every coordinate and distance is an exact rational string ("3", "-1/4",
// "0.125"); integer JSON numbers are accepted on input, floats are not.
// Printing is canonical, so print(parse(print(x))) == print(x) byte for byte.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "ghnets/correspondence.hpp"
#include "ghnets/gh_solver.hpp"
#include "ghnets/line_sets.hpp"
#include "ghnets/metric_space.hpp"

namespace ghnets::io {

using Json = nlohmann::ordered_json;

/// {lo, lo + step, ...} up to hi, kept symbolic so it prints back as a grid.
struct Grid {
  Scalar lo;
  Scalar hi;
  Scalar step;
  PointSet points() const { return PointSet::grid(lo, hi, step); }
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// A distance matrix without line coordinates.
struct Matrix {
  FiniteMetricSpace space;
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Space = std::variant<PointSet, IntervalUnion, Window, Grid, Matrix>;

const char* kind_name(const Space& s);

/// Documents by kind:
///   {"kind": "points",    "coordinates": [c, ...]}
///   {"kind": "intervals", "intervals": [[lo, hi], ...]}
///   {"kind": "window",    "lo": lo, "hi": hi}
///   {"kind": "grid",      "lo": lo, "hi": hi, "step": step}
///   {"kind": "matrix",    "distances": [[d, ...], ...]}
/// ParseError::where() is a JSON path prefixed by `source`.
Space space_from_json(const Json& j, const std::string& source = "$");
Json space_to_json(const Space& s);

Space parse_space(std::string_view text, const std::string& source = "$");
std::string print_space(const Space& s);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where);

/// Parses a whole document; syntax errors report the byte offset.
Json parse_document(std::string_view text, const std::string& source);
/// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);

/// Subsets of the line as an IntervalUnion; DomainError for a matrix.
IntervalUnion as_interval_union(const Space& s);
/// Finite spaces; DomainError for a continuum (intervals or window).
FiniteMetricSpace as_metric_space(const Space& s);

/**
 * Self-contained record of a d_GH computation: both spaces, the bounds, the
 * incumbent correspondence and the pair of pairs attaining its distortion.
 * Keys: x, y, status, lower, upper, exact, distortion, witness, pairs,
 * nodes_explored.
 */
Json certificate_to_json(const Space& x, const Space& y, const GHResult& r);

/// Independent re-check of a certificate in O(|R|^2): the pairs form a
/// correspondence, the witness attains the stated distortion, no pair of
/// pairs exceeds it, upper = distortion / 2 and lower <= upper. Returns an
/// empty string on success, otherwise the first problem found.
std::string recheck_certificate(const Json& cert);

}  // namespace ghnets::io
