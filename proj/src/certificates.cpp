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

#include "certreal/certificates.hpp"

#include <algorithm>
#include <sstream>

#include "certreal/errors.hpp"

namespace certreal {

namespace {

AuditReport fail_at(std::size_t index, std::string witness) {
  return AuditReport{false, index, std::move(witness)};
}

AuditReport audit_effective(const std::vector<Rational>& xs) {
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rational step = abs(xs[s] - xs[s + 1]);
    if (step > Rational::pow2(-static_cast<long>(s))) {
      std::ostringstream msg;
      msg << "|x_" << s << " - x_" << s + 1 << "| = " << step << " > 2^-" << s;
      return fail_at(s, msg.str());
    }
  }
  return {};
}

AuditReport audit_monotone(const std::vector<Rational>& xs, bool increasing) {
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const bool ok = increasing ? xs[s] <= xs[s + 1] : xs[s + 1] <= xs[s];
    if (!ok) {
      std::ostringstream msg;
      msg << "x_" << s << " = " << xs[s] << (increasing ? " > " : " < ") << "x_" << s + 1
          << " = " << xs[s + 1];
      return fail_at(s + 1, msg.str());
    }
  }
  return {};
}

AuditReport audit_weakly_effective(const std::vector<Rational>& xs, const Rational& budget) {
  Rational running(0);
  std::optional<std::size_t> first_violation;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    running += abs(xs[s + 1] - xs[s]);
    if (!first_violation && running > budget) first_violation = s + 1;
  }
  if (first_violation) {
    std::ostringstream msg;
    msg << "prefix variation " << running << " exceeds budget " << budget;
    return fail_at(*first_violation, msg.str());
  }
  return {};
}

AuditReport audit_h_bounded(const std::vector<Rational>& xs,
                            const std::function<std::size_t(std::size_t)>& bound) {
  // Counts saturate once 2^{-n} drops below the smallest positive pairwise
  // gap, so auditing up to that n covers every n.
  Rational min_gap(0);
  bool has_gap = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Rational gap = abs(xs[i] - xs[j]);
      if (gap.is_zero()) continue;
      if (!has_gap || gap < min_gap) {
        min_gap = gap;
        has_gap = true;
      }
    }
  }
  std::size_t n_max = 0;
  if (has_gap) {
    // smallest n with 2^{-n} <= min_gap
    const long k = ceil_log2(min_gap);
    n_max = k >= 0 ? 0 : static_cast<std::size_t>(-k);
  }
  // Past n_max the counts stay put while h may only grow, so monotonicity of
  // h plus the checks below cover every n. The bound map is validated to the
  // larger of n_max and the audit depth.
  std::size_t prev_bound = bound(0);
  for (std::size_t n = 1; n <= std::max(n_max, xs.size()); ++n) {
    const std::size_t allowed = bound(n);
    if (allowed < prev_bound) {
      throw std::invalid_argument("h-bounded certificate with a decreasing bound");
    }
    prev_bound = allowed;
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t count = divergence_count(std::span<const Rational>(xs), n);
    if (count > bound(n)) {
      std::ostringstream msg;
      msg << count << " non-overlapping pairs at level n = " << n << " exceed h(n) = " << bound(n);
      return fail_at(n, msg.str());
    }
  }
  return {};
}

}  // namespace

ConvergenceCertificate make_weakly_effective(Rational budget) {
  if (budget.sign() < 0) {
    throw std::invalid_argument("weakly effective budget must be non-negative");
  }
  return WeaklyEffective{std::move(budget)};
}

AuditReport audit(const CertifiedSequence& cs, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("audit depth must be at least 1");
  const std::vector<Rational> xs = cs.seq.prefix(depth);
  return std::visit(
      [&](const auto& cert) -> AuditReport {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, Effective>) {
          return audit_effective(xs);
        } else if constexpr (std::is_same_v<T, Increasing>) {
          return audit_monotone(xs, true);
        } else if constexpr (std::is_same_v<T, Decreasing>) {
          return audit_monotone(xs, false);
        } else if constexpr (std::is_same_v<T, WeaklyEffective>) {
          return audit_weakly_effective(xs, cert.budget);
        } else if constexpr (std::is_same_v<T, HBounded>) {
          return audit_h_bounded(xs, cert.bound);
        } else {
          return {};
        }
      },
      cs.cert);
}

Rational variation_prefix(const IndexedSequence& seq, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("variation depth must be at least 1");
  Rational total(0);
  for (std::size_t s = 0; s + 1 < depth; ++s) {
    total += abs(seq.at(s + 1) - seq.at(s));
  }
  return total;
}

IndexedSequence monotone_envelope(const IndexedSequence& seq) {
  return IndexedSequence([seq](std::size_t s) {
    Rational best = seq.at(0);
    for (std::size_t t = 1; t <= s; ++t) best = max(best, seq.at(t));
    return best;
  });
}

std::pair<IndexedSequence, IndexedSequence> variation_split(const IndexedSequence& seq) {
  IndexedSequence rising([seq](std::size_t s) {
    Rational y = seq.at(0);
    for (std::size_t i = 0; i <= s; ++i) y += dotminus(seq.at(i + 1), seq.at(i));
    return y;
  });
  IndexedSequence falling([seq](std::size_t s) {
    Rational z(0);
    for (std::size_t i = 0; i <= s; ++i) z += dotminus(seq.at(i), seq.at(i + 1));
    return z;
  });
  return {std::move(rising), std::move(falling)};
}

std::size_t divergence_count(std::span<const Rational> values, std::size_t n) {
  // Earliest-closing greedy: a pair closes as soon as the window since the
  // last close spans 2^{-n}; the next window starts past the closing index.
  const Rational threshold = Rational::pow2(-static_cast<long>(n));
  std::size_t count = 0;
  bool window_open = false;
  Rational lo, hi;
  for (const Rational& x : values) {
    if (!window_open) {
      lo = hi = x;
      window_open = true;
      continue;
    }
    lo = min(lo, x);
    hi = max(hi, x);
    if (hi - lo >= threshold) {
      ++count;
      window_open = false;
    }
  }
  return count;
}

std::size_t divergence_count(const IndexedSequence& seq, std::size_t n, std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("divergence_count depth must be at least 2");
  const std::vector<Rational> xs = seq.prefix(depth);
  return divergence_count(std::span<const Rational>(xs), n);
}

CertifiedSequence tail_drop(const CertifiedSequence& cs, const Rational& target_budget,
                            std::size_t audit_depth) {
  if (!std::holds_alternative<WeaklyEffective>(cs.cert)) {
    throw std::invalid_argument("tail_drop requires a weakly effective certificate");
  }
  if (target_budget.sign() <= 0) {
    throw std::invalid_argument("tail_drop target budget must be positive");
  }
  for (std::size_t k = 0; k <= audit_depth; ++k) {
    Rational tail_variation(0);
    for (std::size_t s = 0; s + 1 < audit_depth; ++s) {
      tail_variation += abs(cs.seq.at(k + s + 1) - cs.seq.at(k + s));
    }
    if (tail_variation < target_budget) {
      IndexedSequence shifted = cs.seq;
      if (k > 0) {
        shifted = IndexedSequence([seq = cs.seq, k](std::size_t s) { return seq.at(s + k); });
      }
      return CertifiedSequence{std::move(shifted), WeaklyEffective{target_budget}};
    }
  }
  std::ostringstream msg;
  msg << "budget " << target_budget << " not witnessed by any drop up to " << audit_depth;
  throw BudgetNotReached(msg.str());
}

namespace {

IndexedSequence pointwise(const IndexedSequence& a, const IndexedSequence& b,
                          Rational (*op)(const Rational&, const Rational&)) {
  return IndexedSequence([a, b, op](std::size_t s) { return op(a.at(s), b.at(s)); });
}

Rational add_op(const Rational& x, const Rational& y) { return x + y; }

// a increasing, b effective: a(s) + b(s) - 2^{-s+1} is increasing because the
// effective terms move by at most 2^{-s} while the slack shrinks by 2^{-s}.
IndexedSequence slacked_sum(const IndexedSequence& inc, const IndexedSequence& eff, int sign) {
  return IndexedSequence([inc, eff, sign](std::size_t s) {
    const Rational slack = Rational::pow2(1 - static_cast<long>(s));
    return inc.at(s) + eff.at(s) + (sign < 0 ? -slack : slack);
  });
}

}  // namespace

CertifiedSequence certified_add(const CertifiedSequence& a, const CertifiedSequence& b) {
  const ConvergenceCertificate& ca = a.cert;
  const ConvergenceCertificate& cb = b.cert;

  const auto plain_sum = [&] {
    return CertifiedSequence{pointwise(a.seq, b.seq, add_op), Plain{}};
  };

  if (std::holds_alternative<Plain>(ca) || std::holds_alternative<Plain>(cb)) {
    return plain_sum();
  }
  if (std::holds_alternative<Increasing>(ca) && std::holds_alternative<Increasing>(cb)) {
    return {pointwise(a.seq, b.seq, add_op), Increasing{}};
  }
  if (std::holds_alternative<Decreasing>(ca) && std::holds_alternative<Decreasing>(cb)) {
    return {pointwise(a.seq, b.seq, add_op), Decreasing{}};
  }
  const auto* wa = std::get_if<WeaklyEffective>(&ca);
  const auto* wb = std::get_if<WeaklyEffective>(&cb);
  if (wa && wb) {
    return {pointwise(a.seq, b.seq, add_op), WeaklyEffective{wa->budget + wb->budget}};
  }
  const bool ea = std::holds_alternative<Effective>(ca);
  const bool eb = std::holds_alternative<Effective>(cb);
  if (ea && eb) {
    // Per-step jumps at most 2 * 2^{-s}; total at most 4.
    return {pointwise(a.seq, b.seq, add_op), WeaklyEffective{Rational(4)}};
  }
  if ((ea && wb) || (wa && eb)) {
    const Rational budget = (wa ? wa->budget : wb->budget) + Rational(4);
    return {pointwise(a.seq, b.seq, add_op), WeaklyEffective{budget}};
  }
  if (ea || eb) {
    const CertifiedSequence& other = ea ? b : a;
    const IndexedSequence& eff = ea ? a.seq : b.seq;
    if (std::holds_alternative<Increasing>(other.cert)) {
      return {slacked_sum(other.seq, eff, -1), Increasing{}};
    }
    if (std::holds_alternative<Decreasing>(other.cert)) {
      return {slacked_sum(other.seq, eff, +1), Decreasing{}};
    }
  }
  return plain_sum();
}

CertifiedSequence certified_mul(const CertifiedSequence& a, const CertifiedSequence& b,
                                const Rational& bound_a, const Rational& bound_b) {
  const auto* wa = std::get_if<WeaklyEffective>(&a.cert);
  const auto* wb = std::get_if<WeaklyEffective>(&b.cert);
  if (!wa || !wb) {
    throw std::invalid_argument("certified_mul requires weakly effective certificates");
  }
  const Rational budget = bound_b * wa->budget + bound_a * wb->budget;
  IndexedSequence product([sa = a.seq, sb = b.seq, bound_a, bound_b](std::size_t s) {
    const Rational x = sa.at(s);
    const Rational y = sb.at(s);
    if (abs(x) > bound_a || abs(y) > bound_b) {
      std::ostringstream msg;
      msg << "term " << s << " breaks the declared magnitude bound";
      throw BoundViolation(msg.str());
    }
    return x * y;
  });
  return {std::move(product), WeaklyEffective{budget}};
}

CertifiedSequence certified_negate(const CertifiedSequence& cs) {
  IndexedSequence negated([seq = cs.seq](std::size_t s) { return -seq.at(s); });
  ConvergenceCertificate cert = cs.cert;
  if (std::holds_alternative<Increasing>(cert)) {
    cert = Decreasing{};
  } else if (std::holds_alternative<Decreasing>(cert)) {
    cert = Increasing{};
  }
  return {std::move(negated), std::move(cert)};
}

}  // namespace certreal
