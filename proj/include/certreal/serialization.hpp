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

#ifndef CERTREAL_SERIALIZATION_HPP_
#define CERTREAL_SERIALIZATION_HPP_

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "certreal/catalog.hpp"
#include "certreal/certificates.hpp"
#include "certreal/diagonalizer.hpp"
#include "certreal/polygon_sequence.hpp"

namespace certreal {

using Json = nlohmann::json;

// Rationals travel as two-element integer arrays [num, den]; integers that
// do not fit 64 bits fall back to decimal strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"breakpoints": [[[xn,xd],[yn,yd]], ...]}
Json polygon_to_json(const Polygon& pg);
Polygon polygon_from_json(const Json& j);

// {"variant": "weakly_effective", "budget": [num,den]} and friends; the
// h_bounded variant carries {"h": {"kind": "constant"|"linear", ...}}.
Json certificate_to_json(const ConvergenceCertificate& cert);
ConvergenceCertificate certificate_from_json(const Json& j);

// {"pass": bool, "violation_index": n|null, "witness": "..."}
Json audit_report_to_json(const AuditReport& report);

// {"literal": [...]} or {"generator": "constant"|"geometric"|"alternating", ...}
IndexedSequence sequence_from_json(const Json& j);

// {"mode": ..., "budget"?: ..., "polygons": [...]} or
// {"mode": ..., "generator": "constant"|"scaled-identity"|"tent-growth", ...}
PolygonSequence polygon_sequence_from_json(const Json& j);

// Array of {"name"?: ..., "e": n, "generator": ... | "polygons": [...]}
std::vector<Adversary> adversaries_from_json(const Json& j);

Json run_report_to_json(const RunReport& report);

Json load_json_file(const std::string& path);  // throws ParseError

// Rows (s, x, pg_s(x)) over the dyadic grid of the given depth, for stages
// 0..stages-1, as CSV (header "s,x,y") or a JSON array. Exact rationals
// render as "num/den" in CSV.
void emit_polygon_rows(std::ostream& os, const PolygonSequence& ps, std::size_t grid_depth,
                       std::size_t stages, const std::string& format);

}  // namespace certreal

#endif  // CERTREAL_SERIALIZATION_HPP_
