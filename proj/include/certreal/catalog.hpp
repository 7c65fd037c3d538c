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

#ifndef CERTREAL_CATALOG_HPP_
#define CERTREAL_CATALOG_HPP_

#include <string>
#include <vector>

#include "certreal/diagonalizer.hpp"
#include "certreal/polygon_sequence.hpp"

namespace certreal {

// Builtin generators, so sequences and adversaries stay finitely describable
// in spec files and tests.

// scale * ratio^s
IndexedSequence geometric_sequence(const Rational& ratio, const Rational& scale);
// (-1)^s * amplitude
IndexedSequence alternating_sequence(const Rational& amplitude);

// gen(n) = (1 - 2^{-n}) * limit_slope * x, increasing to limit_slope * x.
PolygonSequence scaled_identity_sequence(const Rational& limit_slope = Rational(1));
// gen(n) = (1 - 2^{-n}) * tent, increasing to the unit tent.
PolygonSequence tent_growth_sequence();
// Constant-function stages rising to the given limit: gen(s) is the constant
// polygon at height limit * (1 - 2^{-s}); consecutive sup distances are
// limit * 2^{-(s+1)} exactly and sum to the limit.
PolygonSequence rising_plateau_sequence(const Rational& limit);

// Emits the same polygon at every stage.
Adversary constant_adversary(std::size_t index, Polygon pg = Polygon::constant(Rational(0)),
                             std::string name = "constant");
// Copies the construction's f with the given delay in stages.
Adversary follower_adversary(std::size_t index, std::size_t delay = 1,
                             std::string name = "follower");
// Alternates between the zero polygon and the given height each emission.
Adversary oscillator_adversary(std::size_t index, Rational amplitude = Rational(1),
                               std::string name = "oscillator");
// An oscillator violent enough to exhaust its unit variation budget at once.
Adversary budget_burner_adversary(std::size_t index, std::string name = "budget-burner");
// Emits the listed polygons one per stage, then goes quiet.
Adversary literal_adversary(std::size_t index, std::vector<Polygon> polygons, std::string name);

// The four-adversary catalog the diagonalization run exercises, at indices
// 1 through 4.
std::vector<Adversary> default_adversary_catalog();

}  // namespace certreal

#endif  // CERTREAL_CATALOG_HPP_
