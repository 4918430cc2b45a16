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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsw/linalg.hpp"

// Named single-qubit gate library.  Angles are radians everywhere.

namespace qsw::gates {

Operator identity();
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
Operator phase_s();
Operator phase_t();
Operator rx(double theta);
Operator ry(double theta);
Operator rz(double theta);

// Names of the parameter-free gates: I, X, Y, Z, H, S, T.
const std::vector<std::string>& fixed_names();

// Resolves "X", "H", ... or a parameterized form "RX(0.5)", "RZ(-1.2e-1)".
// Returns nullopt for anything it does not recognize.
std::optional<Operator> resolve(std::string_view name);

}  // namespace qsw::gates
