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

#include "certreal/conversions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "certreal/errors.hpp"

namespace certreal {

namespace {

std::size_t lsc_usage(const PolygonSequence& ps, std::size_t outputs) {
  std::size_t last = 0;
  for (std::size_t t = 0; t < outputs; ++t) {
    last = std::max(last, modulus_index(ps.at(t), t));
  }
  return outputs == 0 ? 0 : last + 1;
}

}  // namespace

StreamTransformer lsc_to_machine(const PolygonSequence& ps) {
  if (ps.mode() != PolygonMode::Increasing) {
    throw std::invalid_argument("lsc_to_machine needs an increasing polygon sequence");
  }
  auto step = [ps](std::span<const Rational> prefix, std::size_t cap) {
    std::vector<Rational> out;
    Rational envelope;
    for (std::size_t t = 0; t < cap; ++t) {
      const std::size_t idx = modulus_index(ps.at(t), t);
      if (idx >= prefix.size()) break;
      const Rational u = clamp01(prefix[idx]);
      const Rational y = ps.at(t).eval(u) - Rational::pow2(-static_cast<long>(t));
      envelope = t == 0 ? y : max(envelope, y);
      out.push_back(envelope);
    }
    return out;
  };
  auto usage = [ps](std::size_t outputs) { return lsc_usage(ps, outputs); };
  return StreamTransformer(std::move(step), std::move(usage));
}

StreamTransformer usc_to_machine(const PolygonSequence& ps) {
  if (ps.mode() != PolygonMode::Decreasing) {
    throw std::invalid_argument("usc_to_machine needs a decreasing polygon sequence");
  }
  const StreamTransformer inner = lsc_to_machine(polyseq_negate(ps));
  auto step = [inner](std::span<const Rational> prefix, std::size_t cap) {
    std::vector<Rational> out = inner.step(prefix, cap);
    for (Rational& y : out) y = -y;
    return out;
  };
  auto usage = [inner](std::size_t outputs) { return inner.usage(outputs); };
  return StreamTransformer(std::move(step), std::move(usage));
}

namespace {

struct ProbeInterval {
  Rational lo;
  Rational hi;
  Rational value;
};

// Greedy max-reach selection of a chain of open intervals covering [0,1]:
// starting from 0, repeatedly take the farthest-reaching interval that opens
// strictly before the frontier. Consecutive chain members overlap, and the
// chain order is the left-to-right order of the overlaps.
std::optional<std::vector<ProbeInterval>> cover_chain(std::vector<ProbeInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const ProbeInterval& a, const ProbeInterval& b) { return a.lo < b.lo; });
  std::vector<ProbeInterval> chain;
  Rational frontier(0);
  std::size_t scanned = 0;
  std::optional<std::size_t> best;
  while (true) {
    while (scanned < intervals.size() && intervals[scanned].lo < frontier) {
      if (!best || intervals[scanned].hi > intervals[*best].hi) best = scanned;
      ++scanned;
    }
    if (!best || intervals[*best].hi <= frontier) return std::nullopt;
    chain.push_back(intervals[*best]);
    frontier = intervals[*best].hi;
    if (frontier > Rational(1)) return chain;
  }
}

// Plateaus at the certified values, joined by linear ramps placed inside the
// interval overlaps. Inside an overlap both neighbors' values are certified,
// so any value between them inherits the certificate.
Polygon polygon_from_chain(const std::vector<ProbeInterval>& chain) {
  const std::size_t t = chain.size();
  if (t == 1) return Polygon::constant(chain[0].value);

  std::vector<Rational> cuts(t + 1);  // plateau boundaries
  cuts[0] = Rational(0);
  cuts[t] = Rational(1);
  for (std::size_t j = 1; j < t; ++j) {
    cuts[j] = (chain[j].lo + chain[j - 1].hi) / Rational(2);
  }
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), chain[0].value});
  for (std::size_t j = 1; j < t; ++j) {
    const Rational overlap = chain[j - 1].hi - chain[j].lo;
    const Rational room = min(cuts[j] - cuts[j - 1], min(cuts[j + 1] - cuts[j], overlap));
    const Rational half_width = room / Rational(4);
    pts.push_back({cuts[j] - half_width, chain[j - 1].value});
    pts.push_back({cuts[j] + half_width, chain[j].value});
  }
  pts.push_back({Rational(1), chain[t - 1].value});
  return Polygon(std::move(pts));
}

// Probes constant names of dyadic rationals level by level until the
// certified intervals cover [0,1]. Every probe's interval has radius
// 2^{-usage}, so coverage arrives at the dyadic level matching the machine's
// usage for stage+1 outputs.
std::vector<ProbeInterval> probe_cover(const StreamTransformer& m, std::size_t stage,
                                       std::size_t grid_limit) {
  const std::size_t used = m.usage(stage + 1);
  const Rational radius = Rational::pow2(-static_cast<long>(used));
  std::vector<ProbeInterval> intervals;

  const auto probe = [&](const Rational& r) {
    const std::vector<Rational> prefix(used, r);
    const std::vector<Rational> outs = m.step(std::span<const Rational>(prefix), stage + 1);
    if (outs.size() <= stage) {
      throw std::logic_error("machine read past its declared usage");
    }
    intervals.push_back({r - radius, r + radius, outs[stage]});
  };

  for (std::size_t level = 0; level <= grid_limit; ++level) {
    if (level == 0) {
      probe(Rational(0));
      probe(Rational(1));
    } else {
      const BigInt den = BigInt(1) << static_cast<unsigned>(level);
      for (BigInt num = 1; num < den; num += 2) {
        probe(Rational(num, den));
      }
    }
    if (auto chain = cover_chain(intervals)) {
      return *std::move(chain);
    }
  }
  std::ostringstream msg;
  msg << "no cover of [0,1] by stage-" << stage << " probe intervals of radius 2^-" << used
      << " within dyadic level " << grid_limit;
  throw CoverNotFound(msg.str(), stage, grid_limit);
}

}  // namespace

Polygon machine_to_lsc(const StreamTransformer& m, std::size_t stage, std::size_t grid_limit) {
  Polygon out = polygon_from_chain(probe_cover(m, 0, grid_limit));
  for (std::size_t t = 1; t <= stage; ++t) {
    out = pointwise_max(out, polygon_from_chain(probe_cover(m, t, grid_limit)));
  }
  return out;
}

PolygonSequence recover_lsc_sequence(const StreamTransformer& m, std::size_t grid_limit) {
  return PolygonSequence(
      [m, grid_limit](std::size_t s) { return machine_to_lsc(m, s, grid_limit); },
      PolygonMode::Increasing);
}

StreamTransformer wc_from_difference(const PolygonSequence& g, const PolygonSequence& h) {
  const StreamTransformer mg = lsc_to_machine(g);
  const StreamTransformer mh = lsc_to_machine(h);
  auto step = [mg, mh](std::span<const Rational> prefix, std::size_t cap) {
    const std::vector<Rational> ys = mg.step(prefix, cap);
    const std::vector<Rational> zs = mh.step(prefix, cap);
    const std::size_t n = std::min(ys.size(), zs.size());
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) out.push_back(ys[s] - zs[s]);
    return out;
  };
  auto usage = [mg, mh](std::size_t outputs) {
    return std::max(mg.usage(outputs), mh.usage(outputs));
  };
  return StreamTransformer(std::move(step), std::move(usage));
}

std::pair<StreamTransformer, StreamTransformer> wc_machine_to_difference(
    const StreamTransformer& m) {
  // Output s of either part needs the source stream through index s+1.
  const auto make = [&m](bool rising) {
    auto step = [m, rising](std::span<const Rational> prefix, std::size_t cap) {
      const std::vector<Rational> u =
          m.step(prefix, cap == std::numeric_limits<std::size_t>::max() ? cap : cap + 1);
      std::vector<Rational> out;
      if (u.size() < 2) return out;
      const std::size_t n = std::min(u.size() - 1, cap);
      out.reserve(n);
      Rational acc = rising ? u[0] : Rational(0);
      for (std::size_t s = 0; s < n; ++s) {
        acc += rising ? dotminus(u[s + 1], u[s]) : dotminus(u[s], u[s + 1]);
        out.push_back(acc);
      }
      return out;
    };
    auto usage = [m](std::size_t outputs) { return m.usage(outputs + 1); };
    return StreamTransformer(std::move(step), std::move(usage));
  };
  return {make(true), make(false)};
}

namespace {

// Uniform modulus of Eq.-style precision s+3, made monotone in both
// arguments by a running maximum over the stages seen so far.
std::size_t uniform_modulus(const PolygonSequence& ps, std::size_t s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i <= s; ++i) {
    best = std::max(best, modulus_index(ps.at(i), s + 3));
  }
  return best;
}

bool stage_reads_input(const PolygonSequence& ps, std::size_t s) {
  return !ps.at(s).is_constant();
}

}  // namespace

StreamTransformer uwc_polyseq_to_machine(const PolygonSequence& ps,
                                         std::size_t budget_audit_depth) {
  if (ps.mode() != PolygonMode::UniformWeaklyEffective) {
    throw std::invalid_argument("uwc_polyseq_to_machine needs a uniform weakly effective sequence");
  }
  const Rational half(1, 2);
  if (*ps.budget() > half) {
    throw BudgetViolation("declared budget exceeds 1/2; drop initial stages first");
  }
  const AuditReport report = audit_uniform_budget(ps, half, budget_audit_depth);
  if (!report.pass) {
    throw BudgetViolation("budget 1/2 audit failed: " + report.witness);
  }
  auto step = [ps](std::span<const Rational> prefix, std::size_t cap) {
    std::vector<Rational> out;
    for (std::size_t s = 0; s < cap; ++s) {
      const Polygon pg = ps.at(s);
      if (pg.is_constant()) {
        out.push_back(pg.breakpoints().front().y);
        continue;
      }
      const std::size_t idx = uniform_modulus(ps, s);
      if (idx >= prefix.size()) break;
      out.push_back(pg.eval(clamp01(prefix[idx])));
    }
    return out;
  };
  auto usage = [ps](std::size_t outputs) {
    std::size_t last = 0;
    bool reads = false;
    for (std::size_t s = 0; s < outputs; ++s) {
      if (!stage_reads_input(ps, s)) continue;
      reads = true;
      last = std::max(last, uniform_modulus(ps, s));
    }
    return reads ? last + 1 : 0;
  };
  return StreamTransformer(std::move(step), std::move(usage));
}

PolygonSequence machine_to_uwc_polyseq(const StreamTransformer& m, std::size_t grid_limit) {
  return PolygonSequence(
      [m, grid_limit](std::size_t s) { return polygon_from_chain(probe_cover(m, s, grid_limit)); },
      PolygonMode::UniformWeaklyEffective, Rational(4));
}

CertifiedSequence max_of_lsc(const PolygonSequence& ps) {
  if (ps.mode() != PolygonMode::Increasing) {
    throw std::invalid_argument("max_of_lsc needs an increasing polygon sequence");
  }
  IndexedSequence maxima([ps](std::size_t n) { return max_value(ps.at(n)).second; });
  return CertifiedSequence{std::move(maxima), Increasing{}};
}

const char* function_class_name(FunctionClassTag tag) {
  switch (tag) {
    case FunctionClassTag::Computable: return "computable";
    case FunctionClassTag::LSC: return "lsc";
    case FunctionClassTag::USC: return "usc";
    case FunctionClassTag::SC: return "sc";
    case FunctionClassTag::WC: return "wc";
    case FunctionClassTag::UWC: return "uwc";
  }
  return "?";
}

bool tag_implies(FunctionClassTag narrow, FunctionClassTag wide) {
  using Tag = FunctionClassTag;
  if (narrow == wide || narrow == Tag::Computable) return true;
  switch (narrow) {
    case Tag::LSC:
    case Tag::USC:
      return wide == Tag::SC || wide == Tag::WC;
    case Tag::SC:
    case Tag::UWC:
      return wide == Tag::WC;
    default:
      return false;
  }
}

FunctionClassTag classify_constant(const CertifiedSequence& cs) {
  if (std::holds_alternative<Effective>(cs.cert)) return FunctionClassTag::Computable;
  if (std::holds_alternative<Increasing>(cs.cert)) return FunctionClassTag::LSC;
  if (std::holds_alternative<Decreasing>(cs.cert)) return FunctionClassTag::USC;
  if (std::holds_alternative<WeaklyEffective>(cs.cert)) return FunctionClassTag::WC;
  throw std::invalid_argument("certificate maps to no function class here");
}

}  // namespace certreal
