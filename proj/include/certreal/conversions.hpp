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

#ifndef CERTREAL_CONVERSIONS_HPP_
#define CERTREAL_CONVERSIONS_HPP_

#include <utility>

#include "certreal/polygon_sequence.hpp"
#include "certreal/stream_transformer.hpp"

namespace certreal {

// Machine direction of lower semi-computability: from an increasing polygon
// sequence to a transformer that maps every name of x to an increasing
// rational sequence converging to lim gen(n)(x) from below.
//
// Output s is z(s) = max{gen(t)(u_t) - 2^{-t} : t <= s} with u_t the input
// term at index modulus_index(gen(t), t); every output is a certified lower
// bound of the limit at x. usage(n) reads one term past the largest modulus
// index used by the first n outputs.
StreamTransformer lsc_to_machine(const PolygonSequence& ps);

// Decreasing-sequence counterpart, by negation symmetry.
StreamTransformer usc_to_machine(const PolygonSequence& ps);

// Compactness direction: rebuilds the stage polygon of a machine whose
// outputs increase to f(x) on every name. Probes constant names of dyadic
// rationals level by level; each probe r certifies its output value on the
// open interval of radius 2^{-usage} around r, because a name of any x there
// can open with the same prefix the machine consumed. Stops once the
// intervals cover [0,1], joins the certified plateau values with ramps inside
// the overlaps, and takes the pointwise maximum with earlier stages so the
// stage polygons increase. Throws CoverNotFound when probing up to grid_limit
// cannot cover [0,1].
Polygon machine_to_lsc(const StreamTransformer& m, std::size_t stage, std::size_t grid_limit);

// The full recovered increasing sequence, stages memoized.
PolygonSequence recover_lsc_sequence(const StreamTransformer& m, std::size_t grid_limit);

// Difference direction of weak computability: machine whose outputs are
// u(s) = y(s) - z(s), with y, z the lsc_to_machine outputs for g and h. The
// output variation up to stage S is bounded by
// g_S(x) + h_S(x) - y(0) - z(0), the telescoping of the two monotone parts.
StreamTransformer wc_from_difference(const PolygonSequence& g, const PolygonSequence& h);

// Splits a weakly effectively converging machine into two transformers
// emitting the rising and falling parts of its output stream; both outputs
// increase and their difference reproduces the stream shifted by one index.
std::pair<StreamTransformer, StreamTransformer> wc_machine_to_difference(
    const StreamTransformer& m);

// Uniform direction: from a polygon sequence whose consecutive sup distances
// sum to at most 1/2 (audited on a prefix; throws BudgetViolation otherwise)
// to a machine with output variation at most 1 on every name. Output s is
// gen(s) evaluated at the input term indexed by the uniform modulus
// m(s,s) = max_{i<=s} modulus_index(gen(i), s+3); stages whose polygon is a
// constant function read no input at all, which keeps the machine's usage
// at the true finite-use dependence.
StreamTransformer uwc_polyseq_to_machine(const PolygonSequence& ps,
                                         std::size_t budget_audit_depth = 64);

// Uniform compactness direction: recovers a polygon sequence whose stage-s
// polygon is within 2^{-s} of the machine's stage-s output at every point,
// with declared budget 4 for the sum of consecutive sup distances.
PolygonSequence machine_to_uwc_polyseq(const StreamTransformer& m, std::size_t grid_limit);

// The maxima of an increasing polygon sequence, as an increasing certified
// sequence: m_n = max gen(n), and m_n <= m_{n+1} because gen(n+1) dominates
// gen(n) at gen(n)'s argmax.
CertifiedSequence max_of_lsc(const PolygonSequence& ps);

// Where the constant function with the given limit lands in the hierarchy.
enum class FunctionClassTag { Computable, LSC, USC, SC, WC, UWC };

const char* function_class_name(FunctionClassTag tag);

// Containment in the hierarchy: Computable below everything,
// LSC/USC below SC below WC, UWC below WC.
bool tag_implies(FunctionClassTag narrow, FunctionClassTag wide);

// Effective -> Computable, Increasing -> LSC, Decreasing -> USC,
// WeaklyEffective -> WC. Other certificates classify nothing here and throw.
FunctionClassTag classify_constant(const CertifiedSequence& cs);

}  // namespace certreal

#endif  // CERTREAL_CONVERSIONS_HPP_
