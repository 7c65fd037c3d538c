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

#include "certreal/sequence.hpp"

#include <map>
#include <utility>

namespace certreal {

struct IndexedSequence::State {
  Generator generator;
  std::map<std::size_t, Rational> memo;
  mutable std::mutex mutex;
};

IndexedSequence::IndexedSequence(Generator generator) : state_(std::make_shared<State>()) {
  state_->generator = std::move(generator);
}

IndexedSequence IndexedSequence::constant(Rational value) {
  return IndexedSequence([value = std::move(value)](std::size_t) { return value; });
}

IndexedSequence IndexedSequence::from_values(std::vector<Rational> values) {
  if (values.empty()) {
    throw std::invalid_argument("from_values requires at least one value");
  }
  return IndexedSequence([values = std::move(values)](std::size_t i) {
    return values[i < values.size() ? i : values.size() - 1];
  });
}

Rational IndexedSequence::at(std::size_t index) const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(index);
    if (it != state_->memo.end()) return it->second;
  }
  Rational value = state_->generator(index);
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->memo.emplace(index, std::move(value)).first->second;
}

std::vector<Rational> IndexedSequence::prefix(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
  return out;
}

Name constant_name(const Rational& r) {
  return Name{IndexedSequence::constant(r), r};
}

Name wobble_name(const Rational& r) {
  IndexedSequence seq([r](std::size_t s) {
    const Rational step = Rational::pow2(-static_cast<long>(s) - 1);
    return s % 2 == 0 ? r + step : r - step;
  });
  return Name{std::move(seq), r};
}

std::optional<std::size_t> audit_name(const Name& name, std::size_t depth) {
  if (!name.promise.has_value()) return std::nullopt;
  for (std::size_t s = 0; s < depth; ++s) {
    if (abs(*name.promise - name.approximations.at(s)) > Rational::pow2(-static_cast<long>(s))) {
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace certreal
