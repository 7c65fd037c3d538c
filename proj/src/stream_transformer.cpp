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

#include "certreal/stream_transformer.hpp"

#include <stdexcept>
#include <utility>

namespace certreal {

StreamTransformer::StreamTransformer(Step step, Usage usage)
    : step_(std::move(step)), usage_(std::move(usage)) {}

std::vector<Rational> StreamTransformer::step(std::span<const Rational> input_prefix,
                                              std::size_t max_outputs) const {
  return step_(input_prefix, max_outputs);
}

std::size_t StreamTransformer::usage(std::size_t outputs) const { return usage_(outputs); }

std::vector<Rational> StreamTransformer::run(const IndexedSequence& input,
                                             std::size_t outputs) const {
  const std::vector<Rational> prefix = input.prefix(usage_(outputs));
  std::vector<Rational> result = step_(std::span<const Rational>(prefix), outputs);
  if (result.size() < outputs) {
    throw std::logic_error("transformer produced fewer outputs than its usage map promises");
  }
  result.resize(outputs);
  return result;
}

std::vector<Rational> StreamTransformer::run(const Name& input, std::size_t outputs) const {
  return run(input.approximations, outputs);
}

}  // namespace certreal
