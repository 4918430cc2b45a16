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

#include <string>
#include <vector>

#include <json.hpp>

#include "qsw/cli/config.hpp"

namespace qsw::cli {

enum class Format { kStructured, kTabular };

// A finished report: config echo, results, tool version, and the convention
// block that makes the numbers interpretable without the source.
struct ReportDocument {
  nlohmann::ordered_json body;
};

nlohmann::ordered_json tool_block();
nlohmann::ordered_json conventions_block();

// "qswitch 0.1.0 (conventions v1)"
std::string version_line();

// Executes a validated config.  Throws qsw::Error subclasses for domain
// failures (OrderUndefined, NotUnitary, ...).
ReportDocument run_command(const ExperimentConfig& cfg);

// Error reports share the document shape; they are always emitted in the
// structured format.
ReportDocument error_document(const std::string& type, int exit_code,
                              const std::vector<std::string>& messages);

// Deterministic, byte-stable serialization.  The structured format is the
// complete JSON document; the tabular format renders the probability or
// overlap/coefficient tables as CSV with an LF after every row.
std::string emit(const ReportDocument& doc, Format format);

}  // namespace qsw::cli
