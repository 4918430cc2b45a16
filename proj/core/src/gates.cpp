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

#include "qsw/gates.hpp"

#include <charconv>
#include <cmath>

namespace qsw::gates {

Operator identity() { return Operator::identity(2); }

Operator pauli_x() {
  return Operator(2, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
}

Operator pauli_y() {
  return Operator(2, {{0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}});
}

Operator pauli_z() {
  return Operator(2, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}});
}

Operator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Operator(2, {{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}});
}

Operator phase_s() {
  return Operator(2, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}});
}

Operator phase_t() {
  const double s = 1.0 / std::sqrt(2.0);
  return Operator(2, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {s, s}});
}

Operator rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return Operator(2, {{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}});
}

Operator ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return Operator(2, {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}});
}

Operator rz(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return Operator(2, {{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}});
}

const std::vector<std::string>& fixed_names() {
  static const std::vector<std::string> names = {"I", "X", "Y", "Z",
                                                 "H", "S", "T"};
  return names;
}

std::optional<Operator> resolve(std::string_view name) {
  if (name == "I") return identity();
  if (name == "X") return pauli_x();
  if (name == "Y") return pauli_y();
  if (name == "Z") return pauli_z();
  if (name == "H") return hadamard();
  if (name == "S") return phase_s();
  if (name == "T") return phase_t();

  // Parameterized rotations: RX(<radians>), RY(...), RZ(...).
  if (name.size() >= 5 && name.substr(0, 1) == "R" && name.back() == ')' &&
      name[2] == '(') {
    const char axis = name[1];
    const std::string_view arg = name.substr(3, name.size() - 4);
    double theta = 0.0;
    const char* begin = arg.data();
    const char* end = arg.data() + arg.size();
    auto [ptr, ec] = std::from_chars(begin, end, theta);
    if (ec != std::errc{} || ptr != end || !std::isfinite(theta)) {
      return std::nullopt;
    }
    switch (axis) {
      case 'X':
        return rx(theta);
      case 'Y':
        return ry(theta);
      case 'Z':
        return rz(theta);
      default:
        return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace qsw::gates
