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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "certreal/catalog.hpp"
#include "certreal/conversions.hpp"
#include "certreal/diagonalizer.hpp"
#include "helpers.hpp"

using namespace certreal;

namespace {

struct Failure {
  std::string reason;
};

void require(bool condition, const std::string& reason) {
  if (!condition) throw Failure{reason};
}

std::vector<Name> five_names() {
  return {constant_name(Rational(0)), constant_name(Rational(1)),
          constant_name(Rational(1, 2)), constant_name(Rational(1, 3)),
          wobble_name(Rational(2, 3))};
}

// ---------------------------------------------------------------------------
// 1. Variation-split identity on 1000 random rational sequences.

void criterion_variation_split() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> length_dist(2, 20);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t length = length_dist(rng);
    const IndexedSequence seq =
        IndexedSequence::from_values(testing::random_sequence_values(rng, length));
    const auto [y, z] = variation_split(seq);
    for (std::size_t s = 0; s + 1 < length; ++s) {
      require(y.at(s) - z.at(s) == seq.at(s + 1), "split identity broke");
    }
    require(audit({y, Increasing{}}, length).pass, "rising part not increasing");
    require(audit({z, Increasing{}}, length).pass, "falling part not increasing");
  }
}

// ---------------------------------------------------------------------------
// 2. The lsc machines of three builtin increasing sequences emit increasing
//    certified lower bounds that close in on the stage-40 polygon.

void criterion_lsc_machines() {
  const std::size_t audited_stage = 40;
  const std::vector<PolygonSequence> sequences{
      scaled_identity_sequence(), tent_growth_sequence(),
      PolygonSequence::constant(Polygon::tent(), PolygonMode::Increasing)};
  for (const PolygonSequence& ps : sequences) {
    const StreamTransformer m = lsc_to_machine(ps);
    for (const Name& name : five_names()) {
      const Rational x = *name.promise;
      const std::vector<Rational> z = m.run(name, audited_stage + 1);
      const Rational ceiling = ps.at(audited_stage).eval(x);
      for (std::size_t s = 0; s <= audited_stage; ++s) {
        if (s > 0) require(z[s] >= z[s - 1], "machine output decreased");
        require(z[s] <= ceiling, "output above the audited stage polygon");
      }
      require(abs(z[audited_stage] - ps.at(audited_stage).eval(x)) <= Rational::pow2(-6),
              "output not within 2^-6 of the stage-40 polygon");
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Compactness recovery: stage polygons are certified lower bounds of the
//    limit and within 2^{-s} + 2^{-5} of the source stage polygon.

void criterion_lsc_recovery() {
  struct Case {
    PolygonSequence ps;
    std::function<Rational(const Rational&)> limit;
  };
  const std::vector<Case> cases{
      {PolygonSequence::constant(Polygon::constant(Rational(0)), PolygonMode::Increasing),
       [](const Rational&) { return Rational(0); }},
      {scaled_identity_sequence(), [](const Rational& x) { return x; }},
  };
  const Rational slack = Rational::pow2(-5);
  for (const Case& c : cases) {
    const StreamTransformer m = lsc_to_machine(c.ps);
    const PolygonSequence recovered = recover_lsc_sequence(m, 12);
    require(audit_increasing(recovered, 6).pass, "recovered stages not increasing");
    for (std::size_t s = 0; s <= 5; ++s) {
      const Polygon stage = recovered.at(s);
      const Polygon source = c.ps.at(s);
      const Rational tolerance = Rational::pow2(-static_cast<long>(s)) + slack;
      for (long j = 0; j <= 256; ++j) {
        const Rational x(j, 256);
        require(stage.eval(x) <= c.limit(x), "recovered polygon exceeds the limit");
        require(abs(stage.eval(x) - source.eval(x)) <= tolerance,
                "recovered polygon strays from its stage");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 4. The difference machine's output variation respects the telescoped bound.

void criterion_wc_variation_bound() {
  const PolygonSequence g = scaled_identity_sequence();
  const PolygonSequence h = scaled_identity_sequence(Rational(1, 2));
  const StreamTransformer m = wc_from_difference(g, h);
  const StreamTransformer mg = lsc_to_machine(g);
  const StreamTransformer mh = lsc_to_machine(h);
  const std::size_t horizon = 64;
  for (const Name& name : five_names()) {
    const Rational x = *name.promise;
    const std::vector<Rational> u = m.run(name, horizon + 1);
    Rational variation(0);
    for (std::size_t s = 0; s < horizon; ++s) variation += abs(u[s + 1] - u[s]);
    const Rational bound = g.at(horizon).eval(x) + h.at(horizon).eval(x) -
                           mg.run(name, 1)[0] - mh.run(name, 1)[0];
    require(variation <= bound, "difference output variation exceeds its bound");
  }
}

// ---------------------------------------------------------------------------
// 5. Uniform machines from budget-1/2 sequences keep output variation <= 1.

void criterion_uniform_budget_one() {
  const std::vector<PolygonSequence> sequences{
      PolygonSequence::constant(Polygon::tent(), PolygonMode::UniformWeaklyEffective,
                                Rational(0)),
      rising_plateau_sequence(Rational(1, 4)),
      rising_plateau_sequence(Rational(1, 2)),
  };
  const std::size_t horizon = 64;
  for (const PolygonSequence& ps : sequences) {
    require(polyseq_variation_prefix(ps, horizon) <= Rational(1, 2),
            "input sequence fails its own 1/2 audit");
    const StreamTransformer m = uwc_polyseq_to_machine(ps, horizon);
    for (const Name& name : five_names()) {
      const std::vector<Rational> y = m.run(name, horizon + 1);
      Rational variation(0);
      for (std::size_t s = 0; s < horizon; ++s) variation += abs(y[s + 1] - y[s]);
      require(variation <= Rational(1), "uniform machine variation exceeds 1");
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Uniform recovery: the recovered sequence stays within 2^{-s} of the
//    machine's outputs and its sup-distance variation stays under 4.

void criterion_uniform_recovery() {
  const auto playback_zero = StreamTransformer(
      [](std::span<const Rational>, std::size_t cap) {
        return std::vector<Rational>(cap, Rational(0));
      },
      [](std::size_t) { return std::size_t{0}; });

  struct Case {
    StreamTransformer machine;
    std::size_t stages;
    std::size_t grid_limit;
  };
  std::vector<Case> cases;
  cases.push_back({playback_zero, 32, 8});
  cases.push_back({uwc_polyseq_to_machine(PolygonSequence::constant(
                       Polygon::constant(Rational(0)), PolygonMode::UniformWeaklyEffective,
                       Rational(0))),
                   32, 8});
  cases.push_back({uwc_polyseq_to_machine(rising_plateau_sequence(Rational(1, 4))), 32, 8});
  // A stage-reading machine: feasible probe depth caps the audited stages.
  cases.push_back({uwc_polyseq_to_machine(PolygonSequence::constant(
                       Polygon::identity(), PolygonMode::UniformWeaklyEffective, Rational(0))),
                   8, 16});

  for (const Case& c : cases) {
    const PolygonSequence recovered = machine_to_uwc_polyseq(c.machine, c.grid_limit);
    require(polyseq_variation_prefix(recovered, c.stages) <= Rational(4),
            "recovered sup-distance variation exceeds 4");
    for (std::size_t s = 0; s < c.stages; ++s) {
      const Polygon stage = recovered.at(s);
      const Rational tolerance = Rational::pow2(-static_cast<long>(s));
      for (long j = 0; j <= 256; ++j) {
        const Rational x(j, 256);
        const Rational y = c.machine.run(constant_name(x), s + 1)[s];
        require(abs(y - stage.eval(x)) <= tolerance,
                "recovered stage strays from the machine output");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Maxima of the growing tent form the increasing sequence 1 - 2^{-n}.

void criterion_max_of_lsc() {
  const CertifiedSequence maxima = max_of_lsc(tent_growth_sequence());
  require(audit(maxima, 64).pass, "maxima sequence fails its increasing audit");
  for (std::size_t n = 0; n < 64; ++n) {
    const Rational expected = Rational(1) - Rational::pow2(-static_cast<long>(n));
    require(maxima.seq.at(n) == expected, "stage maximum differs from 1 - 2^-n");
    require(abs(maxima.seq.at(n) - Rational(1)) <= Rational::pow2(-static_cast<long>(n)),
            "stage maximum converges too slowly");
  }
}

// ---------------------------------------------------------------------------
// 8. Greedy divergence counting equals the exact pairing maximum, exhaustively
//    over the quarter alphabet up to length 12.

// Exact maximum by dynamic programming over prefixes; values are encoded in
// quarter units so the oracle runs in plain integers.
std::size_t pairing_maximum(const std::vector<int>& quarters, int threshold) {
  // best_before[v]: best prefix value over positions carrying value v that a
  // new pair may start at. pd[j] covers the first j elements.
  static thread_local std::vector<std::size_t> pd;
  pd.assign(quarters.size() + 1, 0);
  std::size_t best_before[5] = {0, 0, 0, 0, 0};
  bool seen[5] = {false, false, false, false, false};
  const auto slot = [](int v) { return v == 4 ? 4 : v; };  // values 0,1,2,4
  for (std::size_t j = 1; j <= quarters.size(); ++j) {
    if (j >= 2) {
      const int prev = slot(quarters[j - 2]);
      best_before[prev] = std::max(best_before[prev], pd[j - 2]);
      seen[prev] = true;
    }
    pd[j] = pd[j - 1];
    const int v = quarters[j - 1];
    for (const int w : {0, 1, 2, 4}) {
      if (seen[slot(w)] && std::abs(v - w) >= threshold) {
        pd[j] = std::max(pd[j], 1 + best_before[slot(w)]);
      }
    }
  }
  return pd[quarters.size()];
}

// Plain exhaustive recursion, anchoring the DP oracle at small lengths.
std::size_t pairing_maximum_exhaustive(const std::vector<int>& quarters, int threshold,
                                       std::size_t start) {
  std::size_t best = 0;
  for (std::size_t i = start; i < quarters.size(); ++i) {
    for (std::size_t j = i + 1; j < quarters.size(); ++j) {
      if (std::abs(quarters[i] - quarters[j]) >= threshold) {
        best = std::max(best, 1 + pairing_maximum_exhaustive(quarters, threshold, j + 1));
      }
    }
  }
  return best;
}

void criterion_divergence_counting() {
  const Rational alphabet[4] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)};
  const int quarter_values[4] = {0, 1, 2, 4};
  const int thresholds[3] = {4, 2, 1};  // 2^0, 2^-1, 2^-2 in quarter units

  for (std::size_t length = 2; length <= 12; ++length) {
    std::vector<std::size_t> digits(length, 0);
    std::vector<Rational> values(length, alphabet[0]);
    std::vector<int> quarters(length, 0);
    const bool anchor_oracle = length <= 6;
    while (true) {
      for (std::size_t n = 0; n < 3; ++n) {
        const std::size_t greedy =
            divergence_count(std::span<const Rational>(values), n);
        const std::size_t exact = pairing_maximum(quarters, thresholds[n]);
        if (greedy != exact) {
          std::ostringstream msg;
          msg << "greedy " << greedy << " != exact " << exact << " at length " << length;
          throw Failure{msg.str()};
        }
        if (anchor_oracle) {
          require(exact == pairing_maximum_exhaustive(quarters, thresholds[n], 0),
                  "dp oracle disagrees with plain enumeration");
        }
      }
      std::size_t pos = 0;
      while (pos < length && digits[pos] == 3) {
        digits[pos] = 0;
        values[pos] = alphabet[0];
        quarters[pos] = quarter_values[0];
        ++pos;
      }
      if (pos == length) break;
      ++digits[pos];
      values[pos] = alphabet[digits[pos]];
      quarters[pos] = quarter_values[digits[pos]];
    }
  }
}

// ---------------------------------------------------------------------------
// 9. The diagonalization run against the four-adversary catalog.

void criterion_diagonalization() {
  const RunReport report = run_diagonalization(default_adversary_catalog(), 200);
  for (std::size_t s = 0; s < report.f_trace.size(); ++s) {
    require(report.f_trace[s] == poly_sub(report.g_trace[s], report.h_trace[s]),
            "f != g - h at some stage");
  }
  const auto g_seq = PolygonSequence::from_list(report.g_trace, PolygonMode::Increasing);
  const auto h_seq = PolygonSequence::from_list(report.h_trace, PolygonMode::Increasing);
  require(audit_increasing(g_seq, report.g_trace.size()).pass, "g stages not increasing");
  require(audit_increasing(h_seq, report.h_trace.size()).pass, "h stages not increasing");
  for (std::size_t i = 0; i < report.adversaries.size(); ++i) {
    const AdversaryStatus& status = report.adversaries[i];
    require(status.bump_count <= (std::size_t{1} << status.index),
            "bump count exceeds 2^e for " + status.name);
    const bool in_budget = status.spent_variation <= Rational(1);
    if (in_budget && status.emitted > 0) {
      require(report.verdicts[i] == Verdict::Defeated, status.name + " not defeated");
      require(status.separation > Rational::pow2(-static_cast<long>(status.index) - 1),
              status.name + " separation too small");
    }
  }
}

// ---------------------------------------------------------------------------
// 10. sup_distance: metric axioms and domination of pointwise sampling.

void criterion_sup_distance() {
  std::mt19937_64 rng(1009);
  for (int round = 0; round < 500; ++round) {
    const Polygon a = testing::random_polygon(rng);
    const Polygon b = testing::random_polygon(rng);
    const Polygon c = testing::random_polygon(rng);
    const Rational dab = sup_distance(a, b);
    const Rational dbc = sup_distance(b, c);
    const Rational dac = sup_distance(a, c);
    require(dab == sup_distance(b, a), "symmetry broke");
    require(dac <= dab + dbc, "triangle inequality broke");
    require((dab == Rational(0)) == (a == b), "identity of indiscernibles broke");
    require((sup_distance(a, a) == Rational(0)), "self distance not zero");
  }
  for (int round = 0; round < 3; ++round) {
    const Polygon a = testing::random_polygon(rng);
    const Polygon b = testing::random_polygon(rng);
    const Rational dab = sup_distance(a, b);
    for (int probe = 0; probe < 10000; ++probe) {
      const Rational x = testing::random_unit_rational(rng, 1024);
      require(dab >= abs(a.eval(x) - b.eval(x)), "grid max lost to a sampled point");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "variation-split identity on 1000 random sequences", criterion_variation_split},
      {2, "lsc machines: monotone certified lower bounds at stage 40", criterion_lsc_machines},
      {3, "compactness recovery of lsc stage polygons", criterion_lsc_recovery},
      {4, "difference machine variation bound at stage 64", criterion_wc_variation_bound},
      {5, "uniform machines keep output variation within 1", criterion_uniform_budget_one},
      {6, "uniform recovery within 2^-s and budget 4", criterion_uniform_recovery},
      {7, "maxima of an increasing sequence are left computable", criterion_max_of_lsc},
      {8, "divergence counting equals the pairing maximum, exhaustively",
       criterion_divergence_counting},
      {9, "diagonalization defeats every in-budget adversary", criterion_diagonalization},
      {10, "sup distance is a metric and dominates sampling", criterion_sup_distance},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      criterion.run();
    } catch (const Failure& f) {
      reason = f.reason;
    } catch (const std::exception& e) {
      reason = e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (reason.empty()) {
      std::cout << "PASS  criterion " << criterion.number << ": " << criterion.title << "  ["
                << elapsed << " ms]\n";
    } else {
      ++failures;
      std::cout << "FAIL  criterion " << criterion.number << ": " << criterion.title << " — "
                << reason << "  [" << elapsed << " ms]\n";
    }
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
  }
  return failures;
}
