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

// Command-line surface: evaluate polygons, audit sequences, run the
// representation conversions, run the diagonalization, and emit plot data.
// Exit codes: 0 success/pass, 1 usage or input error, 2 audit counterexample.

#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"

#include "certreal/conversions.hpp"
#include "certreal/errors.hpp"
#include "certreal/serialization.hpp"

namespace {

using namespace certreal;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

int cmd_eval(const std::string& file, const std::string& x_text) {
  const Polygon pg = polygon_from_json(load_json_file(file));
  std::cout << pg.eval(Rational::parse(x_text)) << "\n";
  return 0;
}

int cmd_dist(const std::string& file_a, const std::string& file_b) {
  const Polygon a = polygon_from_json(load_json_file(file_a));
  const Polygon b = polygon_from_json(load_json_file(file_b));
  std::cout << sup_distance(a, b) << "\n";
  return 0;
}

int cmd_audit_seq(const std::string& file, const std::string& cert_text, std::size_t depth) {
  Json cert_json;
  try {
    cert_json = Json::parse(cert_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  const CertifiedSequence cs{sequence_from_json(load_json_file(file)),
                             certificate_from_json(cert_json)};
  const AuditReport report = audit(cs, depth);
  std::cout << audit_report_to_json(report).dump(2) << "\n";
  return report.pass ? 0 : 2;
}

int cmd_maxof(const std::string& file, std::size_t depth) {
  const PolygonSequence ps = polygon_sequence_from_json(load_json_file(file));
  const CertifiedSequence maxima = max_of_lsc(ps);
  for (std::size_t n = 0; n < depth; ++n) {
    std::cout << maxima.seq.at(n) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& file, const std::string& cert_text) {
  Json cert_json;
  try {
    cert_json = Json::parse(cert_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  const CertifiedSequence cs{sequence_from_json(load_json_file(file)),
                             certificate_from_json(cert_json)};
  try {
    std::cout << function_class_name(classify_constant(cs)) << "\n";
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return 0;
}

int cmd_diagonalize(const std::string& file, std::size_t stages, const std::string& out_path) {
  const std::vector<Adversary> adversaries = adversaries_from_json(load_json_file(file));
  const RunReport report = run_diagonalization(adversaries, stages);
  for (std::size_t i = 0; i < report.adversaries.size(); ++i) {
    const AdversaryStatus& s = report.adversaries[i];
    std::cout << s.name << " (e=" << s.index << "): " << verdict_name(report.verdicts[i])
              << ", bumps " << s.bump_count << ", spent " << s.spent_variation;
    if (s.has_last_value) std::cout << ", separation " << s.separation;
    std::cout << "\n";
  }
  if (!out_path.empty()) {
    write_output(out_path, run_report_to_json(report).dump(2) + "\n");
  }
  return 0;
}

int cmd_emit(const std::string& file, std::size_t grid_depth, std::size_t stages,
             const std::string& format) {
  const PolygonSequence ps = polygon_sequence_from_json(load_json_file(file));
  emit_polygon_rows(std::cout, ps, grid_depth, stages, format);
  return 0;
}

int run_machine_to_stdout(const StreamTransformer& m, const std::string& input_text,
                          std::size_t outputs) {
  const Name input = constant_name(Rational::parse(input_text));
  for (const Rational& y : m.run(input, outputs)) {
    std::cout << y << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certreal: exact rational approximation certificates on [0,1]"};
  app.require_subcommand(1);
  std::function<int()> action;

  // eval
  {
    auto* cmd = app.add_subcommand("eval", "evaluate a polygon at a rational point");
    auto file = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    cmd->add_option("polygon", *file, "polygon JSON file")->required();
    cmd->add_option("x", *x, "rational argument, e.g. 1/4")->required();
    cmd->callback([&action, file, x] { action = [file, x] { return cmd_eval(*file, *x); }; });
  }
  // dist
  {
    auto* cmd = app.add_subcommand("dist", "sup distance between two polygons");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("a", *a, "polygon JSON file")->required();
    cmd->add_option("b", *b, "polygon JSON file")->required();
    cmd->callback([&action, a, b] { action = [a, b] { return cmd_dist(*a, *b); }; });
  }
  // audit-seq
  {
    auto* cmd = app.add_subcommand("audit-seq", "audit a sequence against a certificate");
    auto file = std::make_shared<std::string>();
    auto cert = std::make_shared<std::string>();
    auto depth = std::make_shared<std::size_t>(32);
    cmd->add_option("sequence", *file, "sequence spec JSON file")->required();
    cmd->add_option("--cert", *cert, "certificate JSON, inline")->required();
    cmd->add_option("--depth", *depth, "audit depth");
    cmd->callback([&action, file, cert, depth] {
      action = [file, cert, depth] { return cmd_audit_seq(*file, *cert, *depth); };
    });
  }
  // convert
  {
    auto* convert = app.add_subcommand("convert", "representation conversions");
    convert->require_subcommand(1);
    auto file = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>("0");
    auto outputs = std::make_shared<std::size_t>(8);
    auto stage = std::make_shared<std::size_t>(0);
    auto grid_limit = std::make_shared<std::size_t>(16);
    auto direction = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();

    auto* lsc = convert->add_subcommand(
        "lsc-to-machine", "run the machine of an increasing polygon sequence on a name");
    lsc->add_option("sequence", *file, "polygon sequence JSON file")->required();
    lsc->add_option("--input", *input, "rational; the machine reads its constant name");
    lsc->add_option("--outputs", *outputs, "how many outputs to print");
    lsc->callback([&action, file, input, outputs] {
      action = [file, input, outputs] {
        const PolygonSequence ps = polygon_sequence_from_json(load_json_file(*file));
        return run_machine_to_stdout(lsc_to_machine(ps), *input, *outputs);
      };
    });

    auto* mtl = convert->add_subcommand(
        "machine-to-lsc", "recover a stage polygon from the sequence's machine");
    mtl->add_option("sequence", *file, "polygon sequence JSON file")->required();
    mtl->add_option("--stage", *stage, "stage to recover");
    mtl->add_option("--grid-limit", *grid_limit, "dyadic probe depth bound");
    mtl->add_option("--out", *out_path, "write polygon JSON here instead of stdout");
    mtl->callback([&action, file, stage, grid_limit, out_path] {
      action = [file, stage, grid_limit, out_path] {
        const PolygonSequence ps = polygon_sequence_from_json(load_json_file(*file));
        const Polygon pg = machine_to_lsc(lsc_to_machine(ps), *stage, *grid_limit);
        write_output(*out_path, polygon_to_json(pg).dump(2) + "\n");
        return 0;
      };
    });

    auto* uwc = convert->add_subcommand("uwc", "uniform weakly effective conversions");
    uwc->add_option("sequence", *file, "polygon sequence JSON file")->required();
    uwc->add_option("--direction", *direction, "to-machine or to-polygons")->required();
    uwc->add_option("--input", *input, "rational input for to-machine");
    uwc->add_option("--outputs", *outputs, "outputs to print for to-machine");
    uwc->add_option("--stage", *stage, "stage to recover for to-polygons");
    uwc->add_option("--grid-limit", *grid_limit, "dyadic probe depth bound");
    uwc->add_option("--out", *out_path, "write polygon JSON here instead of stdout");
    uwc->callback([&action, file, direction, input, outputs, stage, grid_limit, out_path] {
      action = [file, direction, input, outputs, stage, grid_limit, out_path] {
        const PolygonSequence ps = polygon_sequence_from_json(load_json_file(*file));
        const StreamTransformer m = uwc_polyseq_to_machine(ps);
        if (*direction == "to-machine") {
          return run_machine_to_stdout(m, *input, *outputs);
        }
        if (*direction == "to-polygons") {
          const PolygonSequence recovered = machine_to_uwc_polyseq(m, *grid_limit);
          write_output(*out_path, polygon_to_json(recovered.at(*stage)).dump(2) + "\n");
          return 0;
        }
        throw ParseError("direction must be to-machine or to-polygons");
      };
    });
  }
  // maxof
  {
    auto* cmd = app.add_subcommand("maxof", "maxima sequence of an increasing polygon sequence");
    auto file = std::make_shared<std::string>();
    auto depth = std::make_shared<std::size_t>(8);
    cmd->add_option("sequence", *file, "polygon sequence JSON file")->required();
    cmd->add_option("--depth", *depth, "how many maxima to print");
    cmd->callback([&action, file, depth] {
      action = [file, depth] { return cmd_maxof(*file, *depth); };
    });
  }
  // classify-const
  {
    auto* cmd = app.add_subcommand("classify-const",
                                   "function class of the constant with this certificate");
    auto file = std::make_shared<std::string>();
    auto cert = std::make_shared<std::string>();
    cmd->add_option("sequence", *file, "sequence spec JSON file")->required();
    cmd->add_option("--cert", *cert, "certificate JSON, inline")->required();
    cmd->callback([&action, file, cert] {
      action = [file, cert] { return cmd_classify(*file, *cert); };
    });
  }
  // diagonalize
  {
    auto* cmd = app.add_subcommand("diagonalize", "run the stage construction");
    auto file = std::make_shared<std::string>();
    auto stages = std::make_shared<std::size_t>(50);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--adversaries", *file, "adversary list JSON file")->required();
    cmd->add_option("--stages", *stages, "number of stages");
    cmd->add_option("--out", *out_path, "write the full report JSON here");
    cmd->callback([&action, file, stages, out_path] {
      action = [file, stages, out_path] { return cmd_diagonalize(*file, *stages, *out_path); };
    });
  }
  // emit
  {
    auto* cmd = app.add_subcommand("emit", "tabulate stage polygons on a dyadic grid");
    auto file = std::make_shared<std::string>();
    auto grid_depth = std::make_shared<std::size_t>(4);
    auto stages = std::make_shared<std::size_t>(1);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("sequence", *file, "polygon sequence JSON file")->required();
    cmd->add_option("--grid-depth", *grid_depth, "dyadic grid depth");
    cmd->add_option("--stages", *stages, "stages to tabulate");
    cmd->add_option("--format", *format, "csv or json");
    cmd->callback([&action, file, grid_depth, stages, format] {
      action = [file, grid_depth, stages, format] {
        return cmd_emit(*file, *grid_depth, *stages, *format);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
