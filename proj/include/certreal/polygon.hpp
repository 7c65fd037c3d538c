// Copyright 2026 The certreal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CERTREAL_POLYGON_HPP_
#define CERTREAL_POLYGON_HPP_

#include <utility>
#include <vector>

#include "certreal/rational.hpp"

namespace certreal {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear function on [0,1] with rational breakpoints.
// Breakpoint x-coordinates are strictly increasing, the first is 0 and the
// last is 1. Construction merges consecutive collinear breakpoints, so two
// polygons are equal as functions exactly when their breakpoint lists match.
class Polygon {
 public:
  explicit Polygon(std::vector<Breakpoint> breakpoints);

  static Polygon constant(const Rational& y);
  static Polygon identity();  // f(x) = x
  static Polygon tent();      // peak 1 at x = 1/2, zero at both ends

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  // Exact linear interpolation. Throws DomainError outside [0,1].
  Rational eval(const Rational& x) const;

  // max over segments of |dy/dx|; 0 for constant polygons.
  Rational max_slope() const;

  // True when the function is a single constant value.
  bool is_constant() const { return points_.size() == 2 && points_[0].y == points_[1].y; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.points_ == b.points_; }

 private:
  std::vector<Breakpoint> points_;
};

// A precision index m with the guarantee |x - y| <= 2^{-m} implies
// |pg(x) - pg(y)| < 2^{-s}; strictly increasing in s. Computed as
// s + max(0, ceil(log2(max_slope))) + 1, which leaves a factor-2 margin.
std::size_t modulus_index(const Polygon& pg, std::size_t s);

// max{|a(x) - b(x)| : x in [0,1]}, exactly. The difference is piecewise
// linear, so the maximum is attained on the union of the breakpoint grids.
Rational sup_distance(const Polygon& a, const Polygon& b);

// The pointwise maximum as a polygon; breakpoints are the union grid plus the
// exact crossing points of overlapping segments.
Polygon pointwise_max(const Polygon& a, const Polygon& b);

Polygon poly_add(const Polygon& a, const Polygon& b);
Polygon poly_sub(const Polygon& a, const Polygon& b);
Polygon poly_scale(const Polygon& pg, const Rational& factor);
Polygon poly_shift(const Polygon& pg, const Rational& offset);  // pg + constant

// (argmax, value); linear pieces attain maxima at their endpoints, ties break
// to the leftmost breakpoint.
std::pair<Rational, Rational> max_value(const Polygon& pg);
std::pair<Rational, Rational> min_value(const Polygon& pg);

}  // namespace certreal

#endif  // CERTREAL_POLYGON_HPP_
