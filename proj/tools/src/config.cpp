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

#include "qsw/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qsw/gates.hpp"

namespace qsw::cli {

using nlohmann::json;

namespace {

bool parse_complex_pair(const json& j, Complex& out) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    return false;
  }
  out = Complex{j[0].get<double>(), j[1].get<double>()};
  return true;
}

std::optional<GateSpec> parse_gate_spec(const json& j, const std::string& field,
                                        std::vector<std::string>& errors) {
  GateSpec spec;
  if (j.is_string()) {
    spec.name = j.get<std::string>();
    return spec;
  }
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      if (item.key() != "matrix") {
        errors.push_back(field + ": unknown field: " + item.key());
        return std::nullopt;
      }
    }
    if (!j.contains("matrix")) {
      errors.push_back(field + ": gate object requires a \"matrix\" field");
      return std::nullopt;
    }
    const json& m = j["matrix"];
    if (!m.is_array() || m.empty()) {
      errors.push_back(field + ".matrix: must be a non-empty array of rows");
      return std::nullopt;
    }
    spec.is_matrix = true;
    const std::size_t d = m.size();
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != d) {
        errors.push_back(field + ".matrix: must be a square grid of [re, im] "
                                 "pairs");
        return std::nullopt;
      }
      std::vector<Complex> r;
      r.reserve(d);
      for (const auto& cell : row) {
        Complex c;
        if (!parse_complex_pair(cell, c)) {
          errors.push_back(field + ".matrix: entries must be [re, im] pairs "
                                   "of numbers");
          return std::nullopt;
        }
        r.push_back(c);
      }
      spec.rows.push_back(std::move(r));
    }
    return spec;
  }
  errors.push_back(field + ": must be a gate name string or an object with a "
                           "\"matrix\" field");
  return std::nullopt;
}

std::optional<Operator> resolve_gate(const GateSpec& spec,
                                     const std::string& field,
                                     std::vector<std::string>& errors) {
  if (spec.is_matrix) {
    try {
      return Operator::from_rows(spec.rows);
    } catch (const Error& e) {
      errors.push_back(field + ": " + e.what());
      return std::nullopt;
    }
  }
  auto gate = gates::resolve(spec.name);
  if (!gate) {
    errors.push_back(field + ": unknown gate name '" + spec.name + "'");
  }
  return gate;
}

std::optional<StateSpec> parse_state_spec(const json& j,
                                          const std::string& field,
                                          std::vector<std::string>& errors) {
  StateSpec spec;
  if (j.is_string()) {
    spec.name = j.get<std::string>();
    return spec;
  }
  if (j.is_array()) {
    spec.is_list = true;
    for (const auto& cell : j) {
      Complex c;
      if (!parse_complex_pair(cell, c)) {
        errors.push_back(field + ": amplitudes must be [re, im] pairs of "
                                 "numbers");
        return std::nullopt;
      }
      spec.amplitudes.push_back(c);
    }
    if (spec.amplitudes.empty()) {
      errors.push_back(field + ": amplitude list must be non-empty");
      return std::nullopt;
    }
    return spec;
  }
  errors.push_back(field + ": must be a named state string or an array of "
                           "[re, im] pairs");
  return std::nullopt;
}

std::optional<StateVector> named_state(const std::string& name,
                                       std::size_t dim) {
  const double s = 1.0 / std::sqrt(2.0);
  if (dim == 2) {
    if (name == "a") return StateVector::basis(2, 0);
    if (name == "b") return StateVector::basis(2, 1);
    if (name == "+") return StateVector({{s, 0.0}, {s, 0.0}});
    if (name == "-") return StateVector({{s, 0.0}, {-s, 0.0}});
    if (name == "i") return StateVector({{s, 0.0}, {0.0, s}});
    if (name == "-i") return StateVector({{s, 0.0}, {0.0, -s}});
  }
  if (!name.empty() && name.size() <= 6 &&
      std::all_of(name.begin(), name.end(),
                  [](unsigned char ch) { return std::isdigit(ch); })) {
    const unsigned long index = std::stoul(name);
    if (index < dim) return StateVector::basis(dim, index);
  }
  return std::nullopt;
}

std::optional<StateVector> resolve_state(const StateSpec& spec,
                                         std::size_t dim, double norm_tol,
                                         const std::string& field,
                                         std::vector<std::string>& errors) {
  if (!spec.is_list) {
    auto state = named_state(spec.name, dim);
    if (!state) {
      errors.push_back(field + ": unknown state name '" + spec.name +
                       "' for dimension " + std::to_string(dim));
    }
    return state;
  }
  if (spec.amplitudes.size() != dim) {
    errors.push_back(field + ": expected " + std::to_string(dim) +
                     " amplitudes, got " +
                     std::to_string(spec.amplitudes.size()));
    return std::nullopt;
  }
  std::optional<StateVector> state;
  try {
    state.emplace(spec.amplitudes);
  } catch (const Error& e) {
    errors.push_back(field + ": " + e.what());
    return std::nullopt;
  }
  const double n = norm(*state);
  if (std::abs(n - 1.0) > norm_tol) {
    errors.push_back(field + ": amplitudes must be unit norm (norm=" +
                     std::to_string(n) + ")");
    return std::nullopt;
  }
  return state;
}

void parse_tolerances(const json& j, Tolerances& out,
                      std::vector<std::string>& errors) {
  if (!j.is_object()) {
    errors.push_back("tolerances: must be an object");
    return;
  }
  out.present = true;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    std::optional<double>* slot = nullptr;
    if (key == "unitarity") slot = &out.unitarity;
    else if (key == "state_norm") slot = &out.state_norm;
    else if (key == "parallelism") slot = &out.parallelism;
    if (slot == nullptr) {
      errors.push_back("tolerances: unknown field: " + key);
      continue;
    }
    if (!item.value().is_number()) {
      errors.push_back("tolerances." + key + ": must be a number");
      continue;
    }
    const double v = item.value().get<double>();
    if (!std::isfinite(v) || v <= 0.0) {
      errors.push_back("tolerances." + key + ": must be a positive finite "
                                             "number");
      continue;
    }
    *slot = v;
  }
}

json echo_complex(Complex c) { return json::array({c.real(), c.imag()}); }

json echo_gate(const GateSpec& spec) {
  if (!spec.is_matrix) return spec.name;
  json rows = json::array();
  for (const auto& row : spec.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(echo_complex(c));
    rows.push_back(std::move(r));
  }
  json out;
  out["matrix"] = std::move(rows);
  return out;
}

json echo_state(const StateSpec& spec) {
  if (!spec.is_list) return spec.name;
  json amps = json::array();
  for (const auto& c : spec.amplitudes) amps.push_back(echo_complex(c));
  return amps;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kRun:
      return "run";
    case Command::kRelabel:
      return "relabel";
    case Command::kReport:
      return "report";
    case Command::kDistill:
      return "distill";
  }
  return "run";
}

std::optional<Command> command_from_name(std::string_view name) {
  if (name == "run") return Command::kRun;
  if (name == "relabel") return Command::kRelabel;
  if (name == "report") return Command::kReport;
  if (name == "distill") return Command::kDistill;
  return std::nullopt;
}

ValidationError::ValidationError(std::vector<std::string> messages)
    : std::runtime_error(messages.empty() ? "invalid config"
                                          : messages.front()),
      messages_(std::move(messages)) {}

ExperimentConfig parse_config(const std::string& text, Command command) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }

  std::vector<std::string> errors;
  if (!j.is_object()) {
    throw ValidationError({"config must be a JSON object"});
  }

  static const std::vector<std::string> known = {
      "command", "gate_a",           "gate_b",    "control",
      "target",  "measurement_basis", "tolerances"};
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      errors.push_back("unknown field: " + item.key());
    }
  }

  ExperimentConfig cfg;
  cfg.command = command;

  if (j.contains("command")) {
    if (!j["command"].is_string()) {
      errors.push_back("command: must be a string");
    } else {
      const std::string name = j["command"].get<std::string>();
      const auto parsed = command_from_name(name);
      if (!parsed) {
        errors.push_back("command: unknown command '" + name + "'");
      } else if (*parsed != command) {
        errors.push_back("command: config says '" + name +
                         "' but the invocation is '" +
                         command_name(command) + "'");
      }
    }
  }

  // Tolerances first; state resolution depends on state_norm.
  if (j.contains("tolerances")) {
    parse_tolerances(j["tolerances"], cfg.tolerances, errors);
  }
  const double norm_tol = cfg.tolerances.state_norm_or_default();

  for (const char* field : {"gate_a", "gate_b"}) {
    if (!j.contains(field)) {
      errors.push_back(std::string("missing required field: ") + field);
      continue;
    }
    auto spec = parse_gate_spec(j[field], field, errors);
    if (!spec) continue;
    auto op = resolve_gate(*spec, field, errors);
    if (std::string_view(field) == "gate_a") {
      cfg.gate_a_spec = std::move(*spec);
      cfg.gate_a = std::move(op);
    } else {
      cfg.gate_b_spec = std::move(*spec);
      cfg.gate_b = std::move(op);
    }
  }
  if (cfg.gate_a && cfg.gate_b && cfg.gate_a->dim() != cfg.gate_b->dim()) {
    errors.push_back("gate_a and gate_b must have equal dimension");
  }
  const std::size_t target_dim = cfg.gate_a ? cfg.gate_a->dim() : 0;

  const bool needs_control = command == Command::kRun ||
                             command == Command::kRelabel ||
                             command == Command::kReport;
  if (j.contains("control")) {
    auto spec = parse_state_spec(j["control"], "control", errors);
    if (spec) {
      cfg.control = resolve_state(*spec, 2, norm_tol, "control", errors);
      cfg.control_spec = std::move(*spec);
    }
  } else if (needs_control) {
    errors.push_back("missing required field: control (required by command '" +
                     std::string(command_name(command)) + "')");
  }

  if (j.contains("target")) {
    auto spec = parse_state_spec(j["target"], "target", errors);
    if (spec) {
      if (target_dim > 0) {
        cfg.target = resolve_state(*spec, target_dim, norm_tol, "target",
                                   errors);
      }
      cfg.target_spec = std::move(*spec);
    }
  } else if (command == Command::kRun) {
    errors.push_back("missing required field: target (required by command "
                     "'run')");
  }

  if (j.contains("measurement_basis")) {
    const json& b = j["measurement_basis"];
    if (!b.is_array() || b.size() != 2) {
      errors.push_back("measurement_basis: must be an array of exactly two "
                       "states");
    } else {
      auto s0 = parse_state_spec(b[0], "measurement_basis[0]", errors);
      auto s1 = parse_state_spec(b[1], "measurement_basis[1]", errors);
      if (s0 && s1) {
        auto chi0 = resolve_state(*s0, 2, norm_tol, "measurement_basis[0]",
                                  errors);
        auto chi1 = resolve_state(*s1, 2, norm_tol, "measurement_basis[1]",
                                  errors);
        if (chi0 && chi1) {
          try {
            cfg.basis.emplace(*chi0, *chi1, norm_tol);
          } catch (const Error& e) {
            errors.push_back(std::string("measurement_basis: ") + e.what());
          }
        }
        cfg.basis_spec = std::array<StateSpec, 2>{std::move(*s0),
                                                  std::move(*s1)};
      }
    }
  } else if (command == Command::kRun) {
    cfg.basis.emplace(ControlBasis::computational());
  }

  if (!errors.empty()) {
    throw ValidationError(std::move(errors));
  }
  return cfg;
}

nlohmann::ordered_json echo_config(const ExperimentConfig& cfg) {
  nlohmann::ordered_json e;
  e["command"] = command_name(cfg.command);
  e["gate_a"] = echo_gate(cfg.gate_a_spec);
  e["gate_b"] = echo_gate(cfg.gate_b_spec);
  if (cfg.control_spec) e["control"] = echo_state(*cfg.control_spec);
  if (cfg.target_spec) e["target"] = echo_state(*cfg.target_spec);
  if (cfg.basis_spec) {
    e["measurement_basis"] = nlohmann::ordered_json::array(
        {echo_state((*cfg.basis_spec)[0]), echo_state((*cfg.basis_spec)[1])});
  }
  if (cfg.tolerances.present) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    if (cfg.tolerances.unitarity) t["unitarity"] = *cfg.tolerances.unitarity;
    if (cfg.tolerances.state_norm) t["state_norm"] = *cfg.tolerances.state_norm;
    if (cfg.tolerances.parallelism) {
      t["parallelism"] = *cfg.tolerances.parallelism;
    }
    e["tolerances"] = std::move(t);
  }
  return e;
}

}  // namespace qsw::cli
