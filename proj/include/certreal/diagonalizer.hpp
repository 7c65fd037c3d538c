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

#ifndef CERTREAL_DIAGONALIZER_HPP_
#define CERTREAL_DIAGONALIZER_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "certreal/polygon.hpp"
#include "certreal/polygon_sequence.hpp"

namespace certreal {

// What an adversary can see when asked for its emissions so far.
struct StageView {
  std::size_t stage;
  const std::vector<Polygon>& f_history;  // f_0 .. f_stage
};

// A polygon-sequence emitter the construction plays against. Witness point is
// x_e = 2^{-e}. The emitted prefix must extend from stage to stage.
struct Adversary {
  std::string name;
  std::size_t index;  // the e of the witness 2^{-e}
  std::function<std::vector<Polygon>(const StageView&)> emit;
};

struct AdversaryStatus {
  std::string name;
  std::size_t index = 0;
  Rational witness;
  std::size_t emitted = 0;
  std::size_t bump_count = 0;
  Rational spent_variation;  // at the witness, over the emitted prefix
  bool has_last_value = false;
  Rational last_value;  // last emitted polygon at the witness
  Rational separation;  // |f(x_e) - last_value| at the end of the run
};

enum class Verdict { Defeated, BudgetExceeded, Undetermined };

const char* verdict_name(Verdict v);

// State of the stage construction building f = g - h against the adversaries.
// g and h are value maps over the fixed anchor set {0} + witnesses + {1},
// interpolated linearly in between; both only ever move upward.
class Construction {
 public:
  explicit Construction(std::vector<Adversary> adversaries);

  // One stage transition: examine every adversary with index <= stage + 1
  // that emitted something new; within budget and within 2^{-e} of f at the
  // witness, raise g (or h) there by 2^{-e}, then extend the largest-index
  // raise leftward across [0, x_e].
  void run_stage();

  std::size_t stage() const { return stage_; }
  const Polygon& g() const { return g_trace_.back(); }
  const Polygon& h() const { return h_trace_.back(); }
  const Polygon& f() const { return f_trace_.back(); }
  const std::vector<Polygon>& g_trace() const { return g_trace_; }
  const std::vector<Polygon>& h_trace() const { return h_trace_; }
  const std::vector<Polygon>& f_trace() const { return f_trace_; }
  const std::vector<AdversaryStatus>& statuses() const { return statuses_; }

 private:
  Rational value_at(const std::vector<Rational>& values, const Rational& x) const;
  Polygon to_polygon(const std::vector<Rational>& values) const;
  void refresh_traces();

  std::vector<Adversary> adversaries_;
  std::vector<AdversaryStatus> statuses_;
  std::vector<std::vector<Polygon>> seen_prefixes_;
  std::vector<Rational> anchors_;
  std::vector<Rational> g_values_;
  std::vector<Rational> h_values_;
  std::vector<Polygon> g_trace_;
  std::vector<Polygon> h_trace_;
  std::vector<Polygon> f_trace_;
  std::size_t stage_ = 0;
};

struct RunReport {
  std::size_t stages = 0;
  std::vector<AdversaryStatus> adversaries;
  std::vector<Verdict> verdicts;
  std::vector<Polygon> g_trace;
  std::vector<Polygon> h_trace;
  std::vector<Polygon> f_trace;
};

// Runs the construction for the given number of stages and reports, with the
// final separation |f(x_e) - pg^e_last(x_e)| filled in per adversary.
RunReport run_diagonalization(std::vector<Adversary> adversaries, std::size_t stages);

// Requirement check from the report alone:
//   defeated        spent variation <= 1 and separation > 2^{-(e+1)}
//   budget-exceeded spent variation > 1 (the requirement holds vacuously)
//   undetermined    nothing emitted yet, or still within 2^{-e} at the horizon
Verdict verdict_for(const AdversaryStatus& status);
std::vector<Verdict> verify_report(const RunReport& report);

}  // namespace certreal

#endif  // CERTREAL_DIAGONALIZER_HPP_
