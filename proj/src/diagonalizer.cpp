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

#include "certreal/diagonalizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace certreal {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Defeated: return "defeated";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Construction::Construction(std::vector<Adversary> adversaries)
    : adversaries_(std::move(adversaries)) {
  std::set<std::size_t> indices;
  std::set<Rational> anchor_set{Rational(0), Rational(1)};
  for (const Adversary& a : adversaries_) {
    if (!indices.insert(a.index).second) {
      throw std::invalid_argument("duplicate adversary index " + std::to_string(a.index));
    }
    AdversaryStatus status;
    status.name = a.name;
    status.index = a.index;
    status.witness = Rational::pow2(-static_cast<long>(a.index));
    anchor_set.insert(status.witness);
    statuses_.push_back(std::move(status));
  }
  anchors_.assign(anchor_set.begin(), anchor_set.end());
  g_values_.assign(anchors_.size(), Rational(0));
  h_values_.assign(anchors_.size(), Rational(0));
  seen_prefixes_.resize(adversaries_.size());
  refresh_traces();
}

Rational Construction::value_at(const std::vector<Rational>& values, const Rational& x) const {
  auto it = std::lower_bound(anchors_.begin(), anchors_.end(), x);
  if (it == anchors_.end() || !(*it == x)) {
    throw std::logic_error("witness is not an anchor");
  }
  return values[static_cast<std::size_t>(it - anchors_.begin())];
}

Polygon Construction::to_polygon(const std::vector<Rational>& values) const {
  std::vector<Breakpoint> pts;
  pts.reserve(anchors_.size());
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    pts.push_back({anchors_[i], values[i]});
  }
  return Polygon(std::move(pts));
}

void Construction::refresh_traces() {
  std::vector<Rational> f_values;
  f_values.reserve(anchors_.size());
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    f_values.push_back(g_values_[i] - h_values_[i]);
  }
  g_trace_.push_back(to_polygon(g_values_));
  h_trace_.push_back(to_polygon(h_values_));
  f_trace_.push_back(to_polygon(f_values));
}

void Construction::run_stage() {
  const StageView view{stage_, f_trace_};
  struct Bump {
    std::size_t anchor;
    std::size_t index;
    Rational amount;
    bool on_g;
  };
  std::vector<Bump> bumps;

  for (std::size_t a = 0; a < adversaries_.size(); ++a) {
    const Adversary& adv = adversaries_[a];
    AdversaryStatus& status = statuses_[a];
    if (adv.index > stage_ + 1) continue;

    std::vector<Polygon> prefix = adv.emit(view);
    std::vector<Polygon>& seen = seen_prefixes_[a];
    if (prefix.size() < seen.size()) {
      throw std::logic_error("adversary \"" + adv.name + "\" shrank its emitted prefix");
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!(prefix[i] == seen[i])) {
        throw std::logic_error("adversary \"" + adv.name + "\" rewrote an emitted polygon");
      }
    }
    if (prefix.size() == seen.size()) continue;  // nothing new this stage

    for (std::size_t i = seen.empty() ? 1 : seen.size(); i < prefix.size(); ++i) {
      status.spent_variation +=
          abs(prefix[i].eval(status.witness) - prefix[i - 1].eval(status.witness));
    }
    status.emitted = prefix.size();
    status.last_value = prefix.back().eval(status.witness);
    status.has_last_value = true;
    seen = std::move(prefix);

    if (status.spent_variation > Rational(1)) continue;
    const Rational eps = Rational::pow2(-static_cast<long>(adv.index));
    const Rational f_here = value_at(g_values_, status.witness) - value_at(h_values_, status.witness);
    if (abs(f_here - status.last_value) > eps) continue;

    auto anchor_it = std::lower_bound(anchors_.begin(), anchors_.end(), status.witness);
    const auto anchor = static_cast<std::size_t>(anchor_it - anchors_.begin());
    // Within reach: push f away from the adversary. f <= pg + 2^{-e} raises g
    // (and f with it); the opposite strict case would lower f by raising h.
    const bool on_g = f_here <= status.last_value + eps;
    bumps.push_back({anchor, adv.index, eps, on_g});
    ++status.bump_count;
  }

  for (const Bump& bump : bumps) {
    (bump.on_g ? g_values_ : h_values_)[bump.anchor] += bump.amount;
  }
  // Leftward extension for the largest bumped index (the smallest witness):
  // its new value is copied across [0, x_e].
  for (const bool on_g : {true, false}) {
    const Bump* largest = nullptr;
    for (const Bump& bump : bumps) {
      if (bump.on_g == on_g && (!largest || bump.index > largest->index)) largest = &bump;
    }
    if (!largest) continue;
    std::vector<Rational>& values = on_g ? g_values_ : h_values_;
    for (std::size_t i = 0; i < largest->anchor; ++i) {
      values[i] = values[largest->anchor];
    }
  }

  ++stage_;
  refresh_traces();
}

RunReport run_diagonalization(std::vector<Adversary> adversaries, std::size_t stages) {
  if (stages < 1) throw std::invalid_argument("need at least one stage");
  Construction construction(std::move(adversaries));
  for (std::size_t s = 0; s < stages; ++s) construction.run_stage();

  RunReport report;
  report.stages = stages;
  report.g_trace = construction.g_trace();
  report.h_trace = construction.h_trace();
  report.f_trace = construction.f_trace();
  for (AdversaryStatus status : construction.statuses()) {
    if (status.has_last_value) {
      status.separation = abs(construction.f().eval(status.witness) - status.last_value);
    }
    report.adversaries.push_back(std::move(status));
  }
  report.verdicts = verify_report(report);
  return report;
}

Verdict verdict_for(const AdversaryStatus& status) {
  if (status.emitted == 0) return Verdict::Undetermined;
  if (status.spent_variation > Rational(1)) return Verdict::BudgetExceeded;
  const Rational threshold = Rational::pow2(-static_cast<long>(status.index) - 1);
  if (status.separation > threshold) return Verdict::Defeated;
  return Verdict::Undetermined;
}

std::vector<Verdict> verify_report(const RunReport& report) {
  std::vector<Verdict> verdicts;
  verdicts.reserve(report.adversaries.size());
  for (const AdversaryStatus& status : report.adversaries) {
    verdicts.push_back(verdict_for(status));
  }
  return verdicts;
}

}  // namespace certreal
