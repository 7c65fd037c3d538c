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

#ifndef CERTREAL_TESTS_HELPERS_HPP_
#define CERTREAL_TESTS_HELPERS_HPP_

#include <random>
#include <set>
#include <vector>

#include "certreal/polygon.hpp"
#include "certreal/sequence.hpp"

namespace certreal::testing {

inline Rational random_rational(std::mt19937_64& rng, long long max_num = 9,
                                long long max_den = 9) {
  std::uniform_int_distribution<long long> num(-max_num, max_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// A rational drawn from [0,1].
inline Rational random_unit_rational(std::mt19937_64& rng, long long max_den = 64) {
  std::uniform_int_distribution<long long> den(1, max_den);
  const long long d = den(rng);
  std::uniform_int_distribution<long long> num(0, d);
  return Rational(num(rng), d);
}

inline Polygon random_polygon(std::mt19937_64& rng, std::size_t max_interior = 4,
                              long long max_num = 8) {
  std::uniform_int_distribution<std::size_t> count(0, max_interior);
  std::set<Rational> xs;
  const std::size_t interior = count(rng);
  while (xs.size() < interior) {
    const Rational x = random_unit_rational(rng, 16);
    if (!x.is_zero() && x < Rational(1)) xs.insert(x);
  }
  std::vector<Breakpoint> pts;
  std::uniform_int_distribution<long long> ynum(-max_num, max_num);
  std::uniform_int_distribution<long long> yden(1, 8);
  const auto random_y = [&] { return Rational(ynum(rng), yden(rng)); };
  pts.push_back({Rational(0), random_y()});
  for (const Rational& x : xs) pts.push_back({x, random_y()});
  pts.push_back({Rational(1), random_y()});
  return Polygon(std::move(pts));
}

inline std::vector<Rational> random_sequence_values(std::mt19937_64& rng, std::size_t length,
                                                    long long max_num = 9,
                                                    long long max_den = 9) {
  std::vector<Rational> values;
  values.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    values.push_back(random_rational(rng, max_num, max_den));
  }
  return values;
}

}  // namespace certreal::testing

#endif  // CERTREAL_TESTS_HELPERS_HPP_
