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

#include "ghnets/io.hpp"

#include <algorithm>

#include "ghnets/errors.hpp"

namespace ghnets::io {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) throw ParseError(where + "." + key, "expected an array");
  return a;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::vector<Scalar> scalar_list(const Json& a, const std::string& where) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scalar_from_json(a[i], at(where, i)));
  return out;
}

Json scalar_list_json(std::span<const Scalar> v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer index");
  return j.get<std::size_t>();
}

IndexPair pair_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where, "expected an index pair [i, j]");
  return {index_from_json(j[0], where + "[0]"), index_from_json(j[1], where + "[1]")};
}

Json pair_to_json(const IndexPair& p) { return Json::array({p.first, p.second}); }

}  // namespace

const char* kind_name(const Space& s) {
  return std::visit(Overload{[](const PointSet&) { return "points"; }, [](const IntervalUnion&) { return "intervals"; },
                             [](const Window&) { return "window"; }, [](const Grid&) { return "grid"; },
                             [](const Matrix&) { return "matrix"; }},
                    s);
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) throw ParseError(where, "expected a rational string such as \"3/4\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

Space space_from_json(const Json& j, const std::string& source) {
  const Json& kind_json = field(j, "kind", source);
  if (!kind_json.is_string()) throw ParseError(source + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  std::string where = source;
  try {
    if (kind == "points") {
      where = source + ".coordinates";
      return PointSet(scalar_list(array_field(j, "coordinates", source), where));
    }
    if (kind == "intervals") {
      where = source + ".intervals";
      const Json& a = array_field(j, "intervals", source);
      std::vector<Interval> v;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_array() || a[i].size() != 2) throw ParseError(at(where, i), "expected [lo, hi]");
        v.push_back({scalar_from_json(a[i][0], at(where, i) + "[0]"), scalar_from_json(a[i][1], at(where, i) + "[1]")});
      }
      if (v.empty()) throw ParseError(where, "expected at least one interval");
      return IntervalUnion(std::move(v));
    }
    if (kind == "window") {
      return Window(scalar_from_json(field(j, "lo", source), source + ".lo"),
                    scalar_from_json(field(j, "hi", source), source + ".hi"));
    }
    if (kind == "grid") {
      Grid g{scalar_from_json(field(j, "lo", source), source + ".lo"),
             scalar_from_json(field(j, "hi", source), source + ".hi"),
             scalar_from_json(field(j, "step", source), source + ".step")};
      g.points();
      return g;
    }
    if (kind == "matrix") {
      where = source + ".distances";
      const Json& rows = array_field(j, "distances", source);
      const std::size_t n = rows.size();
      std::vector<Scalar> d;
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
          throw ParseError(at(where, i), "expected a row of " + std::to_string(n) + " entries");
        }
        const auto row = scalar_list(rows[i], at(where, i));
        d.insert(d.end(), row.begin(), row.end());
      }
      return Matrix{FiniteMetricSpace(n, std::move(d))};
    }
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
  throw ParseError(source + ".kind", "unknown kind \"" + kind + "\" (expected points, intervals, window, grid or matrix)");
}

Json space_to_json(const Space& s) {
  return std::visit(
      Overload{
          [](const PointSet& p) { return Json{{"kind", "points"}, {"coordinates", scalar_list_json(p.points())}}; },
          [](const IntervalUnion& u) {
            Json a = Json::array();
            for (const auto& iv : u.intervals()) a.push_back(Json::array({scalar_to_json(iv.lo), scalar_to_json(iv.hi)}));
            return Json{{"kind", "intervals"}, {"intervals", std::move(a)}};
          },
          [](const Window& w) { return Json{{"kind", "window"}, {"lo", scalar_to_json(w.lo())}, {"hi", scalar_to_json(w.hi())}}; },
          [](const Grid& g) {
            return Json{{"kind", "grid"},
                        {"lo", scalar_to_json(g.lo)},
                        {"hi", scalar_to_json(g.hi)},
                        {"step", scalar_to_json(g.step)}};
          },
          [](const Matrix& m) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.space.size(); ++i) {
              Json row = Json::array();
              for (std::size_t k = 0; k < m.space.size(); ++k) row.push_back(scalar_to_json(m.space(i, k)));
              rows.push_back(std::move(row));
            }
            return Json{{"kind", "matrix"}, {"distances", std::move(rows)}};
          },
      },
      s);
}

Json parse_document(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte), "malformed JSON");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Space parse_space(std::string_view text, const std::string& source) {
  return space_from_json(parse_document(text, source), source);
}

std::string print_space(const Space& s) { return dump(space_to_json(s)); }

IntervalUnion as_interval_union(const Space& s) {
  return std::visit(Overload{[](const PointSet& p) { return IntervalUnion(p); },
                             [](const IntervalUnion& u) { return u; }, [](const Window& w) { return w.as_set(); },
                             [](const Grid& g) { return IntervalUnion(g.points()); },
                             [](const Matrix&) -> IntervalUnion {
                               throw DomainError("a distance matrix is not a subset of the line");
                             }},
                    s);
}

FiniteMetricSpace as_metric_space(const Space& s) {
  return std::visit(Overload{[](const PointSet& p) { return FiniteMetricSpace::from_points(p); },
                             [](const Grid& g) { return FiniteMetricSpace::from_points(g.points()); },
                             [](const Matrix& m) { return m.space; },
                             [](const auto&) -> FiniteMetricSpace {
                               throw DomainError("intervals and windows are not finite spaces; sample them first");
                             }},
                    s);
}

Json certificate_to_json(const Space& x, const Space& y, const GHResult& r) {
  const FiniteMetricSpace mx = as_metric_space(x), my = as_metric_space(y);
  const DistortionCertificate cert = distortion(r.incumbent.relation(), mx, my);
  Json pairs = Json::array();
  for (const auto& p : r.incumbent.pairs()) pairs.push_back(pair_to_json(p));
  return Json{
      {"x", space_to_json(x)},
      {"y", space_to_json(y)},
      {"status", r.exact ? "exact" : "bounds-only"},
      {"lower", scalar_to_json(r.lower)},
      {"upper", scalar_to_json(r.upper)},
      {"exact", r.exact ? Json(scalar_to_json(*r.exact)) : Json(nullptr)},
      {"distortion", scalar_to_json(cert.value)},
      {"witness", Json::array({pair_to_json(cert.first), pair_to_json(cert.second)})},
      {"pairs", std::move(pairs)},
      {"nodes_explored", r.nodes_explored},
  };
}

std::string recheck_certificate(const Json& cert) {
  try {
    const FiniteMetricSpace x = as_metric_space(space_from_json(field(cert, "x", "$"), "$.x"));
    const FiniteMetricSpace y = as_metric_space(space_from_json(field(cert, "y", "$"), "$.y"));
    const Json& pj = array_field(cert, "pairs", "$");
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < pj.size(); ++i) pairs.push_back(pair_from_json(pj[i], at("$.pairs", i)));
    if (pairs.empty()) return "empty relation";
    for (const auto& [i, j] : pairs) {
      if (i >= x.size() || j >= y.size()) return "pair index out of range";
    }
    std::vector<bool> row(x.size()), col(y.size());
    for (const auto& [i, j] : pairs) row[i] = col[j] = true;
    if (std::find(row.begin(), row.end(), false) != row.end()) return "some point of x is unmatched";
    if (std::find(col.begin(), col.end(), false) != col.end()) return "some point of y is unmatched";

    const Scalar value = scalar_from_json(field(cert, "distortion", "$"), "$.distortion");
    const Json& w = field(cert, "witness", "$");
    if (!w.is_array() || w.size() != 2) return "witness must hold two pairs";
    const IndexPair a = pair_from_json(w[0], "$.witness[0]"), b = pair_from_json(w[1], "$.witness[1]");
    if (std::find(pairs.begin(), pairs.end(), a) == pairs.end() ||
        std::find(pairs.begin(), pairs.end(), b) == pairs.end()) {
      return "witness pairs are not in the relation";
    }
    if (abs(x(a.first, b.first) - y(a.second, b.second)) != value) return "witness does not attain the distortion";
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        if (value < abs(x(p.first, q.first) - y(p.second, q.second))) return "a pair of pairs exceeds the distortion";
      }
    }
    const Scalar upper = scalar_from_json(field(cert, "upper", "$"), "$.upper");
    const Scalar lower = scalar_from_json(field(cert, "lower", "$"), "$.lower");
    if (upper * Scalar(2) != value) return "upper is not half the distortion";
    if (upper < lower) return "lower exceeds upper";
    const Json& exact = field(cert, "exact", "$");
    if (!exact.is_null() && (scalar_from_json(exact, "$.exact") != upper || lower != upper)) {
      return "exact value disagrees with the bounds";
    }
  } catch (const ParseError& e) {
    return e.what();
  } catch (const DomainError& e) {
    return e.what();
  }
  return {};
}

}  // namespace ghnets::io
