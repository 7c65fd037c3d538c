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

#include "certreal/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "certreal/errors.hpp"

namespace certreal {

namespace {

// True when p1 lies on the segment p0 -> p2: (y1-y0)(x2-x1) == (y2-y1)(x1-x0).
bool collinear(const Breakpoint& p0, const Breakpoint& p1, const Breakpoint& p2) {
  return (p1.y - p0.y) * (p2.x - p1.x) == (p2.y - p1.y) * (p1.x - p0.x);
}

std::vector<Breakpoint> normalize(std::vector<Breakpoint> pts) {
  if (pts.size() < 2) {
    throw DomainError("polygon needs at least two breakpoints");
  }
  if (!(pts.front().x == Rational(0)) || !(pts.back().x == Rational(1))) {
    throw DomainError("polygon must span exactly [0,1]");
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i].x < pts[i + 1].x)) {
      throw DomainError("polygon breakpoints must have strictly increasing x");
    }
  }
  std::vector<Breakpoint> merged;
  merged.reserve(pts.size());
  for (auto& p : pts) {
    while (merged.size() >= 2 && collinear(merged[merged.size() - 2], merged.back(), p)) {
      merged.pop_back();
    }
    merged.push_back(std::move(p));
  }
  return merged;
}

// Union of the two x-grids, sorted, deduplicated.
std::vector<Rational> union_grid(const Polygon& a, const Polygon& b) {
  std::vector<Rational> xs;
  xs.reserve(a.breakpoints().size() + b.breakpoints().size());
  std::size_t i = 0, j = 0;
  const auto& pa = a.breakpoints();
  const auto& pb = b.breakpoints();
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && pa[i].x < pb[j].x)) {
      xs.push_back(pa[i++].x);
    } else if (i == pa.size() || pb[j].x < pa[i].x) {
      xs.push_back(pb[j++].x);
    } else {
      xs.push_back(pa[i].x);
      ++i;
      ++j;
    }
  }
  return xs;
}

Polygon combine_on_grid(const Polygon& a, const Polygon& b,
                        Rational (*op)(const Rational&, const Rational&)) {
  std::vector<Breakpoint> pts;
  for (const Rational& x : union_grid(a, b)) {
    pts.push_back({x, op(a.eval(x), b.eval(x))});
  }
  return Polygon(std::move(pts));
}

}  // namespace

Polygon::Polygon(std::vector<Breakpoint> breakpoints) : points_(normalize(std::move(breakpoints))) {}

Polygon Polygon::constant(const Rational& y) {
  return Polygon({{Rational(0), y}, {Rational(1), y}});
}

Polygon Polygon::identity() {
  return Polygon({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

Polygon Polygon::tent() {
  return Polygon({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)}, {Rational(1), Rational(0)}});
}

Rational Polygon::eval(const Rational& x) const {
  if (x.sign() < 0 || x > Rational(1)) {
    throw DomainError("polygon argument " + x.str() + " outside [0,1]");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  if (it == points_.end()) --it;  // x == 1 lands past the final breakpoint
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  if (x == lo.x) return lo.y;
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Rational Polygon::max_slope() const {
  Rational best(0);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const Rational slope =
        abs((points_[i + 1].y - points_[i].y) / (points_[i + 1].x - points_[i].x));
    best = max(best, slope);
  }
  return best;
}

std::size_t modulus_index(const Polygon& pg, std::size_t s) {
  const Rational slope = pg.max_slope();
  long bits = 0;
  if (!slope.is_zero()) {
    bits = std::max(0L, ceil_log2(slope));
  }
  return s + static_cast<std::size_t>(bits) + 1;
}

Rational sup_distance(const Polygon& a, const Polygon& b) {
  Rational best(0);
  for (const Rational& x : union_grid(a, b)) {
    best = max(best, abs(a.eval(x) - b.eval(x)));
  }
  return best;
}

Polygon pointwise_max(const Polygon& a, const Polygon& b) {
  const std::vector<Rational> grid = union_grid(a, b);
  std::vector<Breakpoint> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Rational& x = grid[i];
    const Rational da = a.eval(x);
    const Rational db = b.eval(x);
    if (i > 0) {
      // A strict sign change of a-b inside the cell adds a crossing point;
      // collinear overlaps contribute nothing.
      const Rational& px = grid[i - 1];
      const Rational d0 = a.eval(px) - b.eval(px);
      const Rational d1 = da - db;
      if (d0.sign() * d1.sign() < 0) {
        const Rational cross = px + (x - px) * d0 / (d0 - d1);
        pts.push_back({cross, a.eval(cross)});
      }
    }
    pts.push_back({x, max(da, db)});
  }
  return Polygon(std::move(pts));
}

Polygon poly_add(const Polygon& a, const Polygon& b) {
  return combine_on_grid(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Polygon poly_sub(const Polygon& a, const Polygon& b) {
  return combine_on_grid(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Polygon poly_scale(const Polygon& pg, const Rational& factor) {
  std::vector<Breakpoint> pts = pg.breakpoints();
  for (auto& p : pts) p.y *= factor;
  return Polygon(std::move(pts));
}

Polygon poly_shift(const Polygon& pg, const Rational& offset) {
  std::vector<Breakpoint> pts = pg.breakpoints();
  for (auto& p : pts) p.y += offset;
  return Polygon(std::move(pts));
}

std::pair<Rational, Rational> max_value(const Polygon& pg) {
  const auto& pts = pg.breakpoints();
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].y > pts[best].y) best = i;
  }
  return {pts[best].x, pts[best].y};
}

std::pair<Rational, Rational> min_value(const Polygon& pg) {
  const auto& pts = pg.breakpoints();
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].y < pts[best].y) best = i;
  }
  return {pts[best].x, pts[best].y};
}

}  // namespace certreal
