// Copyright 2026 The qswitch authors
//
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

#include "qsw/cli/report.hpp"

#include <charconv>
#include <utility>

#include "qsw/process_space.hpp"
#include "qsw/relabel.hpp"
#include "qsw/version.hpp"

namespace qsw::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson json_complex(Complex c) { return ojson::array({c.real(), c.imag()}); }

ojson json_state(const StateVector& v) {
  ojson out = ojson::array();
  for (const auto& c : v.amplitudes()) out.push_back(json_complex(c));
  return out;
}

ojson json_matrix(const Operator& m) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(json_complex(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ojson json_process_vector(const ProcessVector& v) {
  ojson out;
  out["d"] = v.system_dim();
  out["label"] = v.label();
  ojson coeffs = ojson::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(json_complex(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

// Shortest round-trip rendering, locale independent.
std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

ojson run_result(const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const SwitchCircuit circuit(*cfg.gate_a, *cfg.gate_b,
                              tol.unitarity_or_default());
  const StateVector joint = run_switch(circuit, *cfg.control, *cfg.target,
                                       tol.state_norm_or_default());
  const auto outcomes =
      measure_control(joint, *cfg.basis, tol.state_norm_or_default());

  ojson result;
  result["joint_state"] = json_state(joint);
  ojson outs = ojson::array();
  for (const auto& outcome : outcomes) {
    ojson o;
    o["outcome"] = outcome.outcome_index;
    o["probability"] = outcome.probability;
    o["conditional_target"] = outcome.conditional_target
                                  ? json_state(*outcome.conditional_target)
                                  : ojson(nullptr);
    outs.push_back(std::move(o));
  }
  result["outcomes"] = std::move(outs);
  return result;
}

ojson relabel_result(const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const OrderedDescription desc =
      relabel(*cfg.gate_a, *cfg.gate_b, *cfg.control,
              tol.unitarity_or_default(), tol.parallelism_or_default());
  ojson result;
  result["control_state"] = json_state(desc.control_state);
  result["first"] = json_process_vector(desc.first);
  result["second"] = json_process_vector(desc.second);
  result["distilled"] = desc.distilled;
  result["narrative"] = desc.narrative;
  return result;
}

ojson report_result(const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const SwitchCircuit circuit(*cfg.gate_a, *cfg.gate_b,
                              tol.unitarity_or_default());
  const ConsistencyReport rep =
      consistency_report(circuit, *cfg.control, tol.unitarity_or_default(),
                         tol.parallelism_or_default());
  ojson result;
  result["first_unitarity_defect"] = rep.first_unitarity_defect;
  result["second_unitarity_defect"] = rep.second_unitarity_defect;
  result["first_operator"] = json_matrix(rep.first_operator);
  result["second_operator"] = json_matrix(rep.second_operator);
  result["switch_conditionals"] =
      ojson::array({json_matrix(rep.switch_conditionals[0]),
                    json_matrix(rep.switch_conditionals[1])});
  result["overlap_table"] = ojson::array(
      {ojson::array({rep.overlap_table[0][0], rep.overlap_table[0][1]}),
       ojson::array({rep.overlap_table[1][0], rep.overlap_table[1][1]})});
  result["notes"] = rep.notes;
  return result;
}

ojson distill_result(const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const ProcessVector va = vectorize(*cfg.gate_a, "A");
  const ProcessVector vb = vectorize(*cfg.gate_b, "B");
  const Complex input_overlap = overlap(normalized(va), normalized(vb));
  const ProcessPair pair =
      distill_orthogonal(va, vb, tol.parallelism_or_default());
  ojson result;
  result["input_overlap"] = json_complex(input_overlap);
  result["first"] = json_process_vector(pair.first);
  result["second"] = json_process_vector(pair.second);
  return result;
}

std::string emit_tabular(const ojson& body) {
  const std::string command = body["config"]["command"].get<std::string>();
  const ojson& result = body["result"];
  std::string out;
  if (command == "run") {
    out += "outcome,probability\n";
    for (const auto& o : result["outcomes"]) {
      out += std::to_string(o["outcome"].get<int>()) + "," +
             fmt_double(o["probability"].get<double>()) + "\n";
    }
    return out;
  }
  if (command == "report") {
    out += "operator,K0,K1\n";
    const ojson& table = result["overlap_table"];
    out += "first," + fmt_double(table[0][0].get<double>()) + "," +
           fmt_double(table[0][1].get<double>()) + "\n";
    out += "second_after_first," + fmt_double(table[1][0].get<double>()) +
           "," + fmt_double(table[1][1].get<double>()) + "\n";
    return out;
  }
  // relabel and distill share the coefficient-table shape.
  out += "index,first_re,first_im,second_re,second_im\n";
  const ojson& first = result["first"]["coeffs"];
  const ojson& second = result["second"]["coeffs"];
  for (std::size_t i = 0; i < first.size(); ++i) {
    out += std::to_string(i) + "," + fmt_double(first[i][0].get<double>()) +
           "," + fmt_double(first[i][1].get<double>()) + "," +
           fmt_double(second[i][0].get<double>()) + "," +
           fmt_double(second[i][1].get<double>()) + "\n";
  }
  return out;
}

}  // namespace

ojson tool_block() {
  ojson out;
  out["name"] = std::string(kToolName);
  out["version"] = std::string(kToolVersion);
  return out;
}

ojson conventions_block() {
  ojson out;
  out["version"] = kConventionsVersion;
  out["tensor_order"] = "control-major: joint index = control*d + target";
  out["switch_order"] =
      "control |a>=|0> applies A first (target operator B*A); |b>=|1> "
      "applies B first (A*B)";
  out["vectorization"] =
      "coeffs[i*d + j] = U[j][i], the amplitude of |i>_in (x) |j>_out; no "
      "1/sqrt(d) factor, so norm(|U>) = sqrt(d) for unitary U";
  out["phase_rule"] =
      "distilled second vector: leading coefficient above 1e-12 made real "
      "and positive; relabeled second: leading span coefficient made real "
      "and positive";
  out["label_rendering"] =
      "amplitudes in labels/narratives use 4 decimal places, half-even "
      "rounding; product dot is U+00B7, minus is U+2212";
  out["complex_numbers"] = "[re, im] pairs of decimal numbers";
  return out;
}

std::string version_line() {
  return std::string(kToolName) + " " + std::string(kToolVersion) +
         " (conventions v" + std::to_string(kConventionsVersion) + ")";
}

ReportDocument run_command(const ExperimentConfig& cfg) {
  ojson result;
  switch (cfg.command) {
    case Command::kRun:
      result = run_result(cfg);
      break;
    case Command::kRelabel:
      result = relabel_result(cfg);
      break;
    case Command::kReport:
      result = report_result(cfg);
      break;
    case Command::kDistill:
      result = distill_result(cfg);
      break;
  }
  ojson body;
  body["tool"] = tool_block();
  body["conventions"] = conventions_block();
  body["config"] = echo_config(cfg);
  body["result"] = std::move(result);
  return ReportDocument{std::move(body)};
}

ReportDocument error_document(const std::string& type, int exit_code,
                              const std::vector<std::string>& messages) {
  ojson body;
  body["tool"] = tool_block();
  ojson err;
  err["type"] = type;
  err["exit_code"] = exit_code;
  err["messages"] = messages;
  body["error"] = std::move(err);
  return ReportDocument{std::move(body)};
}

std::string emit(const ReportDocument& doc, Format format) {
  if (format == Format::kTabular && doc.body.contains("result")) {
    return emit_tabular(doc.body);
  }
  return doc.body.dump(2) + "\n";
}

}  // namespace qsw::cli
