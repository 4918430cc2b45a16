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

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsw/linalg.hpp"
#include "qsw/process_space.hpp"
#include "qsw/quantum_switch.hpp"

// Experiment configs: one JSON object per invocation.  The exact grammar is
// documented in the repository README; unknown fields are rejected and
// validation reports every problem it finds, not just the first.

namespace qsw::cli {

enum class Command { kRun, kRelabel, kReport, kDistill };

const char* command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

// A gate as the user wrote it: a library name ("X", "RZ(0.25)") or an
// explicit square matrix of [re, im] pairs.
struct GateSpec {
  bool is_matrix = false;
  std::string name;
  std::vector<std::vector<Complex>> rows;
};

// A state as the user wrote it: a named ket ("0", "1", "+", "-", "i", "-i",
// "a", "b", or any basis index) or an explicit amplitude list.
struct StateSpec {
  bool is_list = false;
  std::string name;
  std::vector<Complex> amplitudes;
};

struct Tolerances {
  bool present = false;
  std::optional<double> unitarity;
  std::optional<double> state_norm;
  std::optional<double> parallelism;

  double unitarity_or_default() const {
    return unitarity.value_or(kDefaultTol);
  }
  double state_norm_or_default() const {
    return state_norm.value_or(kDefaultTol);
  }
  double parallelism_or_default() const {
    return parallelism.value_or(kParallelTol);
  }
};

struct ExperimentConfig {
  Command command = Command::kRun;

  // Echo forms (exactly what the user supplied).
  GateSpec gate_a_spec;
  GateSpec gate_b_spec;
  std::optional<StateSpec> control_spec;
  std::optional<StateSpec> target_spec;
  std::optional<std::array<StateSpec, 2>> basis_spec;
  Tolerances tolerances;

  // Resolved module inputs.  Structure is validated here; unitarity is a
  // domain check performed at execution time.
  std::optional<Operator> gate_a;
  std::optional<Operator> gate_b;
  std::optional<StateVector> control;
  std::optional<StateVector> target;
  std::optional<ControlBasis> basis;
};

// The config text is not well-formed (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed but not a valid experiment (exit code 3); carries the full
// list of validation problems.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// Parses and validates a config for the given invocation command.  A
// "command" field inside the config is optional but must agree with the
// invocation when present.
ExperimentConfig parse_config(const std::string& text, Command command);

// Canonical re-serialization of exactly the fields the user supplied;
// parsing the echo reproduces the same experiment.
nlohmann::ordered_json echo_config(const ExperimentConfig& cfg);

}  // namespace qsw::cli
