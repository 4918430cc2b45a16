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

#include "qsw/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <vector>

#include <CLI11.hpp>

#include "qsw/errors.hpp"

namespace qsw::cli {

namespace {

std::string emit_error(const std::string& type, int exit_code,
                       const std::vector<std::string>& messages) {
  return emit(error_document(type, exit_code, messages), Format::kStructured);
}

}  // namespace

CliResult run_config_text(Command command, const std::string& text,
                          Format format) {
  ExperimentConfig cfg;
  try {
    cfg = parse_config(text, command);
  } catch (const ParseError& e) {
    return {kExitParse, emit_error("parse", kExitParse, {e.what()})};
  } catch (const ValidationError& e) {
    return {kExitValidation,
            emit_error("validation", kExitValidation, e.messages())};
  } catch (const std::exception& e) {
    return {kExitInternal, emit_error("internal", kExitInternal, {e.what()})};
  }
  try {
    return {kExitOk, emit(run_command(cfg), format)};
  } catch (const OrderUndefined& e) {
    return {kExitDomain, emit_error("OrderUndefined", kExitDomain, {e.what()})};
  } catch (const NotUnitary& e) {
    return {kExitDomain, emit_error("NotUnitary", kExitDomain, {e.what()})};
  } catch (const Error& e) {
    return {kExitDomain, emit_error("domain", kExitDomain, {e.what()})};
  } catch (const std::exception& e) {
    return {kExitInternal, emit_error("internal", kExitInternal, {e.what()})};
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-process quantum switch simulator with definite-order "
               "relabeling"};
  app.set_version_flag("--version", version_line());
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string format_name = "structured";
  std::string out_path;

  const std::vector<std::pair<const char*, Command>> commands = {
      {"run", Command::kRun},
      {"relabel", Command::kRelabel},
      {"report", Command::kReport},
      {"distill", Command::kDistill}};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "Experiment config file (JSON)")
        ->required();
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"structured", "tabular"}));
    sub->add_option("--out", out_path,
                    "Write the report to this file instead of stdout");
    subs.emplace_back(sub, command);
  }
  subs[0].first->description("Run the switch and measure the control");
  subs[1].first->description("Produce the definite-order description");
  subs[2].first->description("Compare the relabeled description with the "
                             "switch conditionals");
  subs[3].first->description("Orthogonalize two process vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  Command command = Command::kRun;
  bool have_command = false;
  for (const auto& [sub, value] : subs) {
    if (sub->parsed()) {
      command = value;
      have_command = true;
    }
  }
  if (!have_command) {
    err << app.help();
    return kExitParse;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    out << emit_error("parse", kExitParse,
                      {"cannot read config file: " + config_path});
    return kExitParse;
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());

  const Format format =
      format_name == "tabular" ? Format::kTabular : Format::kStructured;
  const CliResult result = run_config_text(command, text, format);

  if (!out_path.empty()) {
    std::ofstream o(out_path, std::ios::binary);
    if (!o) {
      err << "cannot write output file: " << out_path << "\n";
      return kExitInternal;
    }
    o << result.output;
  } else {
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace qsw::cli
