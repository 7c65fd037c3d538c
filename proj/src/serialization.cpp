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

#include "certreal/serialization.hpp"

#include <fstream>
#include <limits>
#include <ostream>

#include "certreal/errors.hpp"

namespace certreal {

namespace {

Json bigint_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json::array({bigint_to_json(r.numerator()), bigint_to_json(r.denominator())});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("rational must be a two-element array [num, den], got " + j.dump());
  }
  return Rational(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

Json polygon_to_json(const Polygon& pg) {
  Json pts = Json::array();
  for (const Breakpoint& p : pg.breakpoints()) {
    pts.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y)}));
  }
  return Json{{"breakpoints", std::move(pts)}};
}

Polygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    throw ParseError("polygon must be {\"breakpoints\": [...]}");
  }
  std::vector<Breakpoint> pts;
  for (const Json& item : j["breakpoints"]) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError("breakpoint must be [[xn,xd],[yn,yd]]");
    }
    pts.push_back({rational_from_json(item[0]), rational_from_json(item[1])});
  }
  try {
    return Polygon(std::move(pts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid polygon: ") + e.what());
  }
}

Json certificate_to_json(const ConvergenceCertificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Effective>) {
          return Json{{"variant", "effective"}};
        } else if constexpr (std::is_same_v<T, Increasing>) {
          return Json{{"variant", "increasing"}};
        } else if constexpr (std::is_same_v<T, Decreasing>) {
          return Json{{"variant", "decreasing"}};
        } else if constexpr (std::is_same_v<T, WeaklyEffective>) {
          return Json{{"variant", "weakly_effective"}, {"budget", rational_to_json(c.budget)}};
        } else if constexpr (std::is_same_v<T, HBounded>) {
          return Json{{"variant", "h_bounded"}};  // the bound map has no faithful JSON form
        } else {
          return Json{{"variant", "plain"}};
        }
      },
      cert);
}

ConvergenceCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant")) {
    throw ParseError("certificate must be {\"variant\": ...}");
  }
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "effective") return Effective{};
  if (variant == "increasing") return Increasing{};
  if (variant == "decreasing") return Decreasing{};
  if (variant == "plain") return Plain{};
  if (variant == "weakly_effective") {
    if (!j.contains("budget")) throw ParseError("weakly_effective needs a budget");
    return make_weakly_effective(rational_from_json(j["budget"]));
  }
  if (variant == "h_bounded") {
    if (!j.contains("h")) throw ParseError("h_bounded needs an h map");
    const Json& h = j["h"];
    const std::string kind = h.value("kind", "");
    if (kind == "constant") {
      const auto value = h.at("value").get<std::size_t>();
      return HBounded{[value](std::size_t) { return value; }};
    }
    if (kind == "linear") {
      const auto slope = h.at("slope").get<std::size_t>();
      const auto offset = h.value("offset", std::size_t{0});
      return HBounded{[slope, offset](std::size_t n) { return slope * n + offset; }};
    }
    throw ParseError("h map kind must be \"constant\" or \"linear\"");
  }
  throw ParseError("unknown certificate variant \"" + variant + "\"");
}

Json audit_report_to_json(const AuditReport& report) {
  Json j{{"pass", report.pass}, {"witness", report.witness}};
  j["violation_index"] =
      report.violation_index ? Json(*report.violation_index) : Json(nullptr);
  return j;
}

IndexedSequence sequence_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sequence spec must be an object");
  if (j.contains("literal")) {
    std::vector<Rational> values;
    for (const Json& item : j["literal"]) values.push_back(rational_from_json(item));
    if (values.empty()) throw ParseError("literal sequence needs at least one term");
    return IndexedSequence::from_values(std::move(values));
  }
  const std::string generator = j.value("generator", "");
  if (generator == "constant") {
    return IndexedSequence::constant(rational_from_json(j.at("value")));
  }
  if (generator == "geometric") {
    const Rational ratio =
        j.contains("ratio") ? rational_from_json(j["ratio"]) : Rational(1, 2);
    const Rational scale = j.contains("scale") ? rational_from_json(j["scale"]) : Rational(1);
    return geometric_sequence(ratio, scale);
  }
  if (generator == "alternating") {
    const Rational amplitude =
        j.contains("amplitude") ? rational_from_json(j["amplitude"]) : Rational(1);
    return alternating_sequence(amplitude);
  }
  throw ParseError("sequence spec needs \"literal\" or a known \"generator\"");
}

namespace {

PolygonMode mode_from_string(const std::string& text) {
  if (text == "increasing") return PolygonMode::Increasing;
  if (text == "decreasing") return PolygonMode::Decreasing;
  if (text == "uniformly_effective") return PolygonMode::UniformlyEffective;
  if (text == "uniform_weakly_effective") return PolygonMode::UniformWeaklyEffective;
  if (text == "pointwise") return PolygonMode::Pointwise;
  throw ParseError("unknown polygon sequence mode \"" + text + "\"");
}

}  // namespace

PolygonSequence polygon_sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mode")) {
    throw ParseError("polygon sequence spec needs a \"mode\"");
  }
  const PolygonMode mode = mode_from_string(j["mode"].get<std::string>());
  std::optional<Rational> budget;
  if (j.contains("budget")) budget = rational_from_json(j["budget"]);

  if (j.contains("polygons")) {
    std::vector<Polygon> polygons;
    for (const Json& item : j["polygons"]) polygons.push_back(polygon_from_json(item));
    if (polygons.empty()) throw ParseError("polygon list needs at least one entry");
    return PolygonSequence::from_list(std::move(polygons), mode, std::move(budget));
  }
  const std::string generator = j.value("generator", "");
  if (generator == "constant") {
    Polygon pg = j.contains("polygon") ? polygon_from_json(j["polygon"])
                                       : Polygon::constant(Rational(0));
    return PolygonSequence::constant(std::move(pg), mode, std::move(budget));
  }
  if (generator == "scaled-identity") {
    const Rational limit = j.contains("limit") ? rational_from_json(j["limit"]) : Rational(1);
    PolygonSequence base = scaled_identity_sequence(limit);
    return PolygonSequence([base](std::size_t s) { return base.at(s); }, mode,
                           std::move(budget));
  }
  if (generator == "tent-growth") {
    PolygonSequence base = tent_growth_sequence();
    return PolygonSequence([base](std::size_t s) { return base.at(s); }, mode,
                           std::move(budget));
  }
  throw ParseError("polygon sequence spec needs \"polygons\" or a known \"generator\"");
}

std::vector<Adversary> adversaries_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("adversary file must be a JSON array");
  std::vector<Adversary> out;
  for (const Json& item : j) {
    if (!item.is_object() || !item.contains("e")) {
      throw ParseError("adversary entry needs an index \"e\"");
    }
    const auto index = item["e"].get<std::size_t>();
    const std::string generator = item.value("generator", "");
    std::string name = item.value("name", generator.empty() ? "literal" : generator);
    if (item.contains("polygons")) {
      std::vector<Polygon> polygons;
      for (const Json& p : item["polygons"]) polygons.push_back(polygon_from_json(p));
      out.push_back(literal_adversary(index, std::move(polygons), std::move(name)));
    } else if (generator == "constant") {
      Polygon pg = item.contains("polygon") ? polygon_from_json(item["polygon"])
                                            : Polygon::constant(Rational(0));
      out.push_back(constant_adversary(index, std::move(pg), std::move(name)));
    } else if (generator == "follower") {
      out.push_back(follower_adversary(index, item.value("delay", std::size_t{1}), std::move(name)));
    } else if (generator == "oscillator") {
      const Rational amplitude =
          item.contains("amplitude") ? rational_from_json(item["amplitude"]) : Rational(1);
      out.push_back(oscillator_adversary(index, amplitude, std::move(name)));
    } else if (generator == "budget-burner") {
      out.push_back(budget_burner_adversary(index, std::move(name)));
    } else {
      throw ParseError("adversary entry needs \"polygons\" or a known \"generator\"");
    }
  }
  return out;
}

Json run_report_to_json(const RunReport& report) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < report.adversaries.size(); ++i) {
    const AdversaryStatus& s = report.adversaries[i];
    Json row{{"name", s.name},
             {"e", s.index},
             {"witness", rational_to_json(s.witness)},
             {"emitted", s.emitted},
             {"bump_count", s.bump_count},
             {"spent_variation", rational_to_json(s.spent_variation)},
             {"verdict", verdict_name(report.verdicts[i])}};
    row["final_separation"] = s.has_last_value ? rational_to_json(s.separation) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  const auto trace_json = [](const std::vector<Polygon>& trace) {
    Json arr = Json::array();
    for (const Polygon& pg : trace) arr.push_back(polygon_to_json(pg));
    return arr;
  };
  return Json{{"stages", report.stages},
              {"adversaries", std::move(rows)},
              {"trace",
               Json{{"g", trace_json(report.g_trace)},
                    {"h", trace_json(report.h_trace)},
                    {"f", trace_json(report.f_trace)}}}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit_polygon_rows(std::ostream& os, const PolygonSequence& ps, std::size_t grid_depth,
                       std::size_t stages, const std::string& format) {
  const BigInt den = BigInt(1) << static_cast<unsigned>(grid_depth);
  if (format == "csv") {
    os << "s,x,y\n";
    for (std::size_t s = 0; s < stages; ++s) {
      const Polygon pg = ps.at(s);
      for (BigInt num = 0; num <= den; ++num) {
        const Rational x(num, den);
        os << s << "," << x << "," << pg.eval(x) << "\n";
      }
    }
    return;
  }
  if (format == "json") {
    Json rows = Json::array();
    for (std::size_t s = 0; s < stages; ++s) {
      const Polygon pg = ps.at(s);
      for (BigInt num = 0; num <= den; ++num) {
        const Rational x(num, den);
        rows.push_back(Json{{"s", s},
                            {"x", rational_to_json(x)},
                            {"y", rational_to_json(pg.eval(x))}});
      }
    }
    os << rows.dump(2) << "\n";
    return;
  }
  throw ParseError("unsupported emit format \"" + format + "\"");
}

}  // namespace certreal
