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

#ifndef CERTREAL_CERTIFICATES_HPP_
#define CERTREAL_CERTIFICATES_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "certreal/sequence.hpp"

namespace certreal {

// Convergence certificates are claims about how a sequence approaches its
// limit. Prefix audits can falsify a claim; they can never prove one, since
// every class beyond per-step effectivity is a statement about the tail.

// |x_s - x_{s+1}| <= 2^{-s} for all s.
struct Effective {};
// x_s <= x_{s+1} for all s.
struct Increasing {};
// x_{s+1} <= x_s for all s.
struct Decreasing {};
// Total variation sum |x_{s+1} - x_s| bounded by the budget.
struct WeaklyEffective {
  Rational budget;  // >= 0
};
// At most bound(n) non-overlapping index pairs (i,j) with |x_i - x_j| >= 2^{-n},
// for every n. The bound must be total and non-decreasing.
struct HBounded {
  std::function<std::size_t(std::size_t)> bound;
};
// No claim at all.
struct Plain {};

using ConvergenceCertificate =
    std::variant<Effective, Increasing, Decreasing, WeaklyEffective, HBounded, Plain>;

ConvergenceCertificate make_weakly_effective(Rational budget);  // validates >= 0

struct CertifiedSequence {
  IndexedSequence seq;
  ConvergenceCertificate cert;
};

struct AuditReport {
  bool pass = true;
  std::optional<std::size_t> violation_index;
  std::string witness;
};

// Checks the certificate's condition on prefix(seq, depth). Requires depth >= 1.
AuditReport audit(const CertifiedSequence& cs, std::size_t depth);

// Sum_{s=0}^{depth-2} |seq(s+1) - seq(s)|, exactly. Requires depth >= 1.
Rational variation_prefix(const IndexedSequence& seq, std::size_t depth);

// output(s) = max{seq(t) : t <= s}; non-decreasing, idempotent, dominates
// the input pointwise.
IndexedSequence monotone_envelope(const IndexedSequence& seq);

// The rising/falling decomposition of a sequence u:
//   y(s) = u(0) + sum_{i<=s} (u(i+1) dotminus u(i))
//   z(s) = sum_{i<=s} (u(i) dotminus u(i+1))
// Both non-decreasing, and y(s) - z(s) = u(s+1) exactly for all s. When u
// has a weakly effective budget c, y is bounded by u(0) + c and z by c.
std::pair<IndexedSequence, IndexedSequence> variation_split(const IndexedSequence& seq);

// Maximum number of pairwise non-overlapping index pairs (i,j), i < j < depth,
// with |seq(i) - seq(j)| >= 2^{-n}. Greedy left-to-right scan; equals the
// maximum over all pairings. Requires depth >= 2.
std::size_t divergence_count(const IndexedSequence& seq, std::size_t n, std::size_t depth);
std::size_t divergence_count(std::span<const Rational> values, std::size_t n);

// Drops the least number k of initial terms (searched up to audit_depth) so
// that the variation of the remaining sequence, audited over an audit_depth
// window, falls below target_budget. Returns the shifted sequence certified
// WeaklyEffective(target_budget). Throws BudgetNotReached when no such k
// exists within the window. Requires a WeaklyEffective input certificate and
// target_budget > 0.
CertifiedSequence tail_drop(const CertifiedSequence& cs, const Rational& target_budget,
                            std::size_t audit_depth);

// Pointwise sum with the certificate computed by the closure algebra:
//   Increasing + Increasing -> Increasing (dual for Decreasing)
//   Increasing + Effective  -> Increasing, after the slack transform
//                              a(s) + b(s) - 2^{-s+1} (dual for Decreasing)
//   Effective + Effective    -> WeaklyEffective(4)
//   Effective + WeaklyEffective(c)       -> WeaklyEffective(c + 4)
//   WeaklyEffective(c1) + WeaklyEffective(c2) -> WeaklyEffective(c1 + c2)
//   everything else           -> Plain
// The slack transform changes the terms but not the limit; the raw sum of an
// increasing and an effective sequence need not be monotone.
CertifiedSequence certified_add(const CertifiedSequence& a, const CertifiedSequence& b);

// Pointwise product of two weakly effective sequences with caller-supplied
// magnitude bounds |a(s)| <= bound_a, |b(s)| <= bound_b. The result carries
// WeaklyEffective(bound_b * c_a + bound_a * c_b). Evaluating the result
// audits the bounds and throws BoundViolation if a term breaks them.
CertifiedSequence certified_mul(const CertifiedSequence& a, const CertifiedSequence& b,
                                const Rational& bound_a, const Rational& bound_b);

// Negates every term; Increasing and Decreasing certificates swap, the rest
// carry over unchanged.
CertifiedSequence certified_negate(const CertifiedSequence& cs);

}  // namespace certreal

#endif  // CERTREAL_CERTIFICATES_HPP_
