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

#include <iosfwd>
#include <string>

#include "qsw/cli/report.hpp"

namespace qsw::cli {

// Exit-code contract, bit-exact for CI:
//   0 success, 2 config parse error, 3 config validation error,
//   4 domain error (OrderUndefined, NotUnitary, ...).
// 1 is reserved for internal failures that should never happen.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitDomain = 4;

struct CliResult {
  int exit_code;
  std::string output;
};

// The whole pipeline behind the file boundary: parse, validate, execute,
// emit.  Never throws; every failure maps to an exit code and a structured
// error document.
CliResult run_config_text(Command command, const std::string& text,
                          Format format);

// Full command-line entry point (argument parsing and file I/O live here,
// nowhere else).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qsw::cli
