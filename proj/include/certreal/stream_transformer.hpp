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

#ifndef CERTREAL_STREAM_TRANSFORMER_HPP_
#define CERTREAL_STREAM_TRANSFORMER_HPP_

#include <functional>
#include <span>
#include <vector>

#include "certreal/sequence.hpp"

namespace certreal {

// Finite-use monotone map from input prefixes to output prefixes, the
// machine model of the conversions: extending the input prefix only extends
// the output prefix, and producing n outputs reads at most usage(n) inputs.
// The usage map is explicit because the compactness constructions need "how
// many inputs were consumed" as data.
class StreamTransformer {
 public:
  // step(prefix, max_outputs): all outputs certified by the prefix, capped at
  // max_outputs. A machine whose outputs ignore the input entirely would
  // otherwise emit forever; the cap keeps output prefixes finite.
  using Step = std::function<std::vector<Rational>(std::span<const Rational>, std::size_t)>;
  // Inputs consumed to emit the given number of outputs; non-decreasing.
  using Usage = std::function<std::size_t(std::size_t)>;

  StreamTransformer(Step step, Usage usage);

  std::vector<Rational> step(std::span<const Rational> input_prefix,
                             std::size_t max_outputs) const;
  std::size_t usage(std::size_t outputs) const;

  // Feeds the first usage(outputs) terms of the name and returns exactly
  // `outputs` outputs; throws if the machine under-delivers.
  std::vector<Rational> run(const IndexedSequence& input, std::size_t outputs) const;
  std::vector<Rational> run(const Name& input, std::size_t outputs) const;

 private:
  Step step_;
  Usage usage_;
};

}  // namespace certreal

#endif  // CERTREAL_STREAM_TRANSFORMER_HPP_
