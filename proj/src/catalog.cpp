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

#include "certreal/catalog.hpp"

namespace certreal {

IndexedSequence geometric_sequence(const Rational& ratio, const Rational& scale) {
  return IndexedSequence([ratio, scale](std::size_t s) {
    Rational term = scale;
    for (std::size_t i = 0; i < s; ++i) term *= ratio;
    return term;
  });
}

IndexedSequence alternating_sequence(const Rational& amplitude) {
  return IndexedSequence(
      [amplitude](std::size_t s) { return s % 2 == 0 ? amplitude : -amplitude; });
}

PolygonSequence scaled_identity_sequence(const Rational& limit_slope) {
  return PolygonSequence(
      [limit_slope](std::size_t n) {
        const Rational factor =
            limit_slope * (Rational(1) - Rational::pow2(-static_cast<long>(n)));
        return poly_scale(Polygon::identity(), factor);
      },
      PolygonMode::Increasing);
}

PolygonSequence tent_growth_sequence() {
  return PolygonSequence(
      [](std::size_t n) {
        return poly_scale(Polygon::tent(), Rational(1) - Rational::pow2(-static_cast<long>(n)));
      },
      PolygonMode::Increasing);
}

PolygonSequence rising_plateau_sequence(const Rational& limit) {
  return PolygonSequence(
      [limit](std::size_t s) {
        return Polygon::constant(limit * (Rational(1) - Rational::pow2(-static_cast<long>(s))));
      },
      PolygonMode::UniformWeaklyEffective, limit);
}

Adversary constant_adversary(std::size_t index, Polygon pg, std::string name) {
  return Adversary{std::move(name), index,
                   [pg = std::move(pg)](const StageView& view) {
                     return std::vector<Polygon>(view.stage + 1, pg);
                   }};
}

Adversary follower_adversary(std::size_t index, std::size_t delay, std::string name) {
  return Adversary{std::move(name), index, [delay](const StageView& view) {
                     std::vector<Polygon> out;
                     if (view.stage + 1 > delay) {
                       const std::size_t count = view.stage + 1 - delay;
                       out.assign(view.f_history.begin(), view.f_history.begin() + count);
                     }
                     return out;
                   }};
}

namespace {

Adversary flip_flop_adversary(std::size_t index, Rational height, std::string name) {
  const Polygon low = Polygon::constant(Rational(0));
  const Polygon high = Polygon::constant(height);
  return Adversary{std::move(name), index, [low, high](const StageView& view) {
                     std::vector<Polygon> out;
                     out.reserve(view.stage + 1);
                     for (std::size_t i = 0; i <= view.stage; ++i) {
                       out.push_back(i % 2 == 0 ? low : high);
                     }
                     return out;
                   }};
}

}  // namespace

Adversary oscillator_adversary(std::size_t index, Rational amplitude, std::string name) {
  return flip_flop_adversary(index, std::move(amplitude), std::move(name));
}

Adversary budget_burner_adversary(std::size_t index, std::string name) {
  return flip_flop_adversary(index, Rational(2), std::move(name));
}

Adversary literal_adversary(std::size_t index, std::vector<Polygon> polygons, std::string name) {
  return Adversary{std::move(name), index,
                   [polygons = std::move(polygons)](const StageView& view) {
                     const std::size_t count = std::min(view.stage + 1, polygons.size());
                     return std::vector<Polygon>(polygons.begin(), polygons.begin() + count);
                   }};
}

std::vector<Adversary> default_adversary_catalog() {
  std::vector<Adversary> out;
  out.push_back(constant_adversary(1));
  out.push_back(follower_adversary(2));
  out.push_back(oscillator_adversary(3));
  out.push_back(budget_burner_adversary(4));
  return out;
}

}  // namespace certreal
