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

#ifndef CERTREAL_ERRORS_HPP_
#define CERTREAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace certreal {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the function's domain (e.g. evaluating a polygon off [0,1]).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed input file or text.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// tail_drop could not witness the requested budget within the audited window.
class BudgetNotReached : public Error {
 public:
  explicit BudgetNotReached(const std::string& what) : Error(what) {}
};

// A prefix audit of a declared convergence budget failed.
class BudgetViolation : public Error {
 public:
  explicit BudgetViolation(const std::string& what) : Error(what) {}
};

// A caller-supplied magnitude bound failed on a requested prefix.
class BoundViolation : public Error {
 public:
  explicit BoundViolation(const std::string& what) : Error(what) {}
};

// Dyadic probing exhausted the grid limit before the recorded intervals
// covered [0,1].
class CoverNotFound : public Error {
 public:
  CoverNotFound(const std::string& what, std::size_t stage, std::size_t grid_limit)
      : Error(what), stage(stage), grid_limit(grid_limit) {}
  std::size_t stage;
  std::size_t grid_limit;
};

}  // namespace certreal

#endif  // CERTREAL_ERRORS_HPP_
