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

#include "certreal/polygon_sequence.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "certreal/errors.hpp"

namespace certreal {

const char* polygon_mode_name(PolygonMode mode) {
  switch (mode) {
    case PolygonMode::Increasing: return "increasing";
    case PolygonMode::Decreasing: return "decreasing";
    case PolygonMode::UniformlyEffective: return "uniformly_effective";
    case PolygonMode::UniformWeaklyEffective: return "uniform_weakly_effective";
    case PolygonMode::Pointwise: return "pointwise";
  }
  return "?";
}

struct PolygonSequence::State {
  Generator generator;
  PolygonMode mode;
  std::optional<Rational> budget;
  std::map<std::size_t, Polygon> memo;
  mutable std::mutex mutex;
};

PolygonSequence::PolygonSequence(Generator generator, PolygonMode mode,
                                 std::optional<Rational> budget)
    : state_(std::make_shared<State>()) {
  if (mode == PolygonMode::UniformWeaklyEffective) {
    if (!budget || budget->sign() < 0) {
      throw std::invalid_argument("uniform weakly effective mode needs a non-negative budget");
    }
  } else if (budget) {
    throw std::invalid_argument("budget is only meaningful for uniform weakly effective mode");
  }
  state_->generator = std::move(generator);
  state_->mode = mode;
  state_->budget = std::move(budget);
}

PolygonSequence PolygonSequence::constant(Polygon pg, PolygonMode mode,
                                          std::optional<Rational> budget) {
  return PolygonSequence([pg = std::move(pg)](std::size_t) { return pg; }, mode,
                         std::move(budget));
}

PolygonSequence PolygonSequence::from_list(std::vector<Polygon> polygons, PolygonMode mode,
                                           std::optional<Rational> budget) {
  if (polygons.empty()) {
    throw std::invalid_argument("from_list requires at least one polygon");
  }
  return PolygonSequence(
      [polygons = std::move(polygons)](std::size_t s) {
        return polygons[s < polygons.size() ? s : polygons.size() - 1];
      },
      mode, std::move(budget));
}

Polygon PolygonSequence::at(std::size_t stage) const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(stage);
    if (it != state_->memo.end()) return it->second;
  }
  Polygon pg = state_->generator(stage);
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->memo.emplace(stage, std::move(pg)).first->second;
}

PolygonMode PolygonSequence::mode() const { return state_->mode; }

const std::optional<Rational>& PolygonSequence::budget() const { return state_->budget; }

namespace {

AuditReport audit_monotone_stages(const PolygonSequence& ps, std::size_t depth, bool increasing) {
  for (std::size_t s = 0; s + 1 < depth; ++s) {
    const Polygon diff = increasing ? poly_sub(ps.at(s + 1), ps.at(s))
                                    : poly_sub(ps.at(s), ps.at(s + 1));
    const auto [at_x, low] = min_value(diff);
    if (low.sign() < 0) {
      std::ostringstream msg;
      msg << "stage " << s + 1 << " drops by " << -low << " at x = " << at_x;
      return AuditReport{false, s + 1, msg.str()};
    }
  }
  return {};
}

}  // namespace

AuditReport audit_increasing(const PolygonSequence& ps, std::size_t depth) {
  return audit_monotone_stages(ps, depth, true);
}

AuditReport audit_decreasing(const PolygonSequence& ps, std::size_t depth) {
  return audit_monotone_stages(ps, depth, false);
}

Rational polyseq_variation_prefix(const PolygonSequence& ps, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("variation depth must be at least 1");
  Rational total(0);
  for (std::size_t s = 0; s + 1 < depth; ++s) {
    total += sup_distance(ps.at(s + 1), ps.at(s));
  }
  return total;
}

AuditReport audit_uniform_budget(const PolygonSequence& ps, const Rational& budget,
                                 std::size_t depth) {
  Rational running(0);
  for (std::size_t s = 0; s + 1 < depth; ++s) {
    running += sup_distance(ps.at(s + 1), ps.at(s));
    if (running > budget) {
      std::ostringstream msg;
      msg << "sup-distance variation " << running << " exceeds budget " << budget
          << " by stage " << s + 1;
      return AuditReport{false, s + 1, msg.str()};
    }
  }
  return {};
}

AuditReport audit_uniform_budget(const PolygonSequence& ps, std::size_t depth) {
  if (!ps.budget()) {
    throw std::invalid_argument("sequence carries no budget to audit");
  }
  return audit_uniform_budget(ps, *ps.budget(), depth);
}

AuditReport audit_uniformly_effective(const PolygonSequence& ps, std::size_t depth) {
  for (std::size_t n = 0; n < depth; ++n) {
    for (std::size_t m = n + 1; m < depth; ++m) {
      const Rational allowed =
          Rational::pow2(-static_cast<long>(n)) + Rational::pow2(-static_cast<long>(m));
      const Rational d = sup_distance(ps.at(n), ps.at(m));
      if (d > allowed) {
        std::ostringstream msg;
        msg << "d(pg_" << n << ", pg_" << m << ") = " << d << " > 2^-" << n << " + 2^-" << m;
        return AuditReport{false, m, msg.str()};
      }
    }
  }
  return {};
}

PolygonSequence polyseq_tail_drop(const PolygonSequence& ps, const Rational& target_budget,
                                  std::size_t audit_depth) {
  if (target_budget.sign() <= 0) {
    throw std::invalid_argument("tail_drop target budget must be positive");
  }
  for (std::size_t k = 0; k <= audit_depth; ++k) {
    Rational tail_variation(0);
    for (std::size_t s = 0; s + 1 < audit_depth; ++s) {
      tail_variation += sup_distance(ps.at(k + s + 1), ps.at(k + s));
    }
    if (tail_variation < target_budget) {
      return PolygonSequence([ps, k](std::size_t s) { return ps.at(s + k); },
                             PolygonMode::UniformWeaklyEffective, target_budget);
    }
  }
  std::ostringstream msg;
  msg << "budget " << target_budget << " not witnessed by any drop up to " << audit_depth;
  throw BudgetNotReached(msg.str());
}

PolygonSequence polyseq_negate(const PolygonSequence& ps) {
  PolygonMode mode = ps.mode();
  if (mode == PolygonMode::Increasing) {
    mode = PolygonMode::Decreasing;
  } else if (mode == PolygonMode::Decreasing) {
    mode = PolygonMode::Increasing;
  }
  return PolygonSequence([ps](std::size_t s) { return poly_scale(ps.at(s), Rational(-1)); },
                         mode, ps.budget());
}

}  // namespace certreal
