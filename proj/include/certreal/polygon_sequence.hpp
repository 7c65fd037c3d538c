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

#ifndef CERTREAL_POLYGON_SEQUENCE_HPP_
#define CERTREAL_POLYGON_SEQUENCE_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "certreal/certificates.hpp"
#include "certreal/polygon.hpp"

namespace certreal {

// How a polygon sequence claims to approach its limit function.
enum class PolygonMode {
  Increasing,              // gen(n)(x) <= gen(n+1)(x) everywhere
  Decreasing,              // gen(n+1)(x) <= gen(n)(x) everywhere
  UniformlyEffective,      // sup_distance(gen(n), limit) <= 2^{-n}
  UniformWeaklyEffective,  // sum of consecutive sup distances <= budget
  Pointwise,               // pointwise convergence, no uniform claim
};

const char* polygon_mode_name(PolygonMode mode);

// Total deterministic map from stage index to Polygon, tagged with a
// convergence mode. Stages are memoized and shared between copies.
class PolygonSequence {
 public:
  using Generator = std::function<Polygon(std::size_t)>;

  PolygonSequence(Generator generator, PolygonMode mode,
                  std::optional<Rational> budget = std::nullopt);

  static PolygonSequence constant(Polygon pg, PolygonMode mode,
                                  std::optional<Rational> budget = std::nullopt);
  // The listed polygons with the last repeated past the end. Non-empty.
  static PolygonSequence from_list(std::vector<Polygon> polygons, PolygonMode mode,
                                   std::optional<Rational> budget = std::nullopt);

  Polygon at(std::size_t stage) const;
  PolygonMode mode() const;
  // Set exactly for UniformWeaklyEffective sequences.
  const std::optional<Rational>& budget() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Checks gen(n+1) - gen(n) >= 0 (resp. <=) on the union grid for all
// consecutive stages below depth.
AuditReport audit_increasing(const PolygonSequence& ps, std::size_t depth);
AuditReport audit_decreasing(const PolygonSequence& ps, std::size_t depth);

// Sum_{s=0}^{depth-2} sup_distance(gen(s+1), gen(s)), exactly.
Rational polyseq_variation_prefix(const PolygonSequence& ps, std::size_t depth);

// Audits the sum of consecutive sup distances against the given budget
// (or the sequence's own budget).
AuditReport audit_uniform_budget(const PolygonSequence& ps, const Rational& budget,
                                 std::size_t depth);
AuditReport audit_uniform_budget(const PolygonSequence& ps, std::size_t depth);

// Pairwise audit for UniformlyEffective claims:
// sup_distance(gen(n), gen(m)) <= 2^{-n} + 2^{-m} for all n < m < depth.
AuditReport audit_uniformly_effective(const PolygonSequence& ps, std::size_t depth);

// Drops the least number of initial stages so the audited sup-distance
// variation over an audit_depth window falls below target_budget; the result
// carries UniformWeaklyEffective(target_budget). Throws BudgetNotReached.
PolygonSequence polyseq_tail_drop(const PolygonSequence& ps, const Rational& target_budget,
                                  std::size_t audit_depth);

// gen(s) mapped through poly_scale(-1); Increasing and Decreasing modes swap.
PolygonSequence polyseq_negate(const PolygonSequence& ps);

}  // namespace certreal

#endif  // CERTREAL_POLYGON_SEQUENCE_HPP_
