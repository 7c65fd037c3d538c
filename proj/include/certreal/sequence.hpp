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

#ifndef CERTREAL_SEQUENCE_HPP_
#define CERTREAL_SEQUENCE_HPP_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "certreal/rational.hpp"

namespace certreal {

// Total deterministic map from natural index to Rational. Copies share one
// memo, so two prefix calls of different depths are always consistent. The
// generator must be pure; memo access is synchronized, and generators run
// outside the lock (recomputation is idempotent).
class IndexedSequence {
 public:
  using Generator = std::function<Rational(std::size_t)>;

  explicit IndexedSequence(Generator generator);

  static IndexedSequence constant(Rational value);
  // The listed values, with the last one repeated past the end so the map
  // stays total. Requires a non-empty list.
  static IndexedSequence from_values(std::vector<Rational> values);

  Rational at(std::size_t index) const;
  // [at(0), ..., at(count - 1)].
  std::vector<Rational> prefix(std::size_t count) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// A rational sequence standing for a real x, with the contract
// |x - at(s)| <= 2^{-s} for all s. The promise is carried only when the
// represented real is exactly known; for externally supplied names the
// contract is assumed, not checked.
struct Name {
  IndexedSequence approximations;
  std::optional<Rational> promise;
};

// The name of a rational r whose every term is r itself.
Name constant_name(const Rational& r);

// A name of r that oscillates around it: term s is r + (-1)^s * 2^{-(s+1)}.
// Terms may leave [0,1] near the endpoints, which the contract permits.
Name wobble_name(const Rational& r);

// Checks the name contract on a prefix when the promise is present.
// Returns the first violating index, or nullopt if the prefix passes
// (or no promise is attached).
std::optional<std::size_t> audit_name(const Name& name, std::size_t depth);

}  // namespace certreal

#endif  // CERTREAL_SEQUENCE_HPP_
