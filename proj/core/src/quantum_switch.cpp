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

#include "qsw/quantum_switch.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qsw {

namespace {

void check_unit_norm(const StateVector& v, double tol, const char* what) {
  const double n = norm(v);
  if (std::abs(n - 1.0) > tol) {
    throw InvalidValue(std::string(what) + ": state must be unit norm (norm=" +
                       std::to_string(n) + ")");
  }
}

void check_dim(const StateVector& v, std::size_t dim, const char* what) {
  if (v.dim() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(dim) + ", got " +
                            std::to_string(v.dim()));
  }
}

}  // namespace

SwitchCircuit::SwitchCircuit(Operator a_gate, Operator b_gate,
                             double unitarity_tol)
    : a_gate_(std::move(a_gate)), b_gate_(std::move(b_gate)) {
  if (a_gate_.dim() != b_gate_.dim()) {
    throw DimensionMismatch("SwitchCircuit: branch gates act on different "
                            "target dimensions");
  }
  const double da = unitarity_defect(a_gate_);
  if (da >= unitarity_tol) {
    throw NotUnitary("SwitchCircuit: gate A is not unitary (defect=" +
                     std::to_string(da) + ")");
  }
  const double db = unitarity_defect(b_gate_);
  if (db >= unitarity_tol) {
    throw NotUnitary("SwitchCircuit: gate B is not unitary (defect=" +
                     std::to_string(db) + ")");
  }
}

ControlBasis::ControlBasis(StateVector chi0, StateVector chi1, double tol)
    : chi0_(std::move(chi0)), chi1_(std::move(chi1)) {
  check_dim(chi0_, 2, "ControlBasis");
  check_dim(chi1_, 2, "ControlBasis");
  check_unit_norm(chi0_, tol, "ControlBasis");
  check_unit_norm(chi1_, tol, "ControlBasis");
  if (std::abs(inner(chi0_, chi1_)) > tol) {
    throw InvalidValue("ControlBasis: basis states must be orthogonal");
  }
}

ControlBasis ControlBasis::computational() {
  return ControlBasis(StateVector::basis(2, 0), StateVector::basis(2, 1));
}

ControlBasis ControlBasis::from_state(const StateVector& chi0, double tol) {
  check_dim(chi0, 2, "ControlBasis::from_state");
  const StateVector chi1({std::conj(chi0[1]), -std::conj(chi0[0])});
  return ControlBasis(chi0, chi1, tol);
}

Operator switch_unitary(const SwitchCircuit& circuit) {
  const std::size_t d = circuit.target_dim();
  const Operator first_a = circuit.b_gate() * circuit.a_gate();  // A then B
  const Operator first_b = circuit.a_gate() * circuit.b_gate();  // B then A
  const std::size_t dim = 2 * d;
  std::vector<Complex> e(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      e[i * dim + j] = first_a(i, j);
      e[(d + i) * dim + (d + j)] = first_b(i, j);
    }
  }
  return Operator(dim, std::move(e));
}

StateVector run_switch(const SwitchCircuit& circuit, const StateVector& control,
                       const StateVector& target, double norm_tol) {
  check_dim(control, 2, "run_switch control");
  check_dim(target, circuit.target_dim(), "run_switch target");
  check_unit_norm(control, norm_tol, "run_switch control");
  check_unit_norm(target, norm_tol, "run_switch target");
  return switch_unitary(circuit) * tensor_product(control, target);
}

std::array<SwitchOutcome, 2> measure_control(const StateVector& joint,
                                             const ControlBasis& basis,
                                             double norm_tol) {
  if (joint.dim() % 2 != 0 || joint.dim() < 2) {
    throw DimensionMismatch("measure_control: joint state must live on a "
                            "control qubit times a target system");
  }
  check_unit_norm(joint, norm_tol, "measure_control");
  const std::size_t d = joint.dim() / 2;

  std::array<SwitchOutcome, 2> outcomes{SwitchOutcome{0, 0.0, std::nullopt},
                                        SwitchOutcome{1, 0.0, std::nullopt}};
  for (int k = 0; k < 2; ++k) {
    const StateVector& chi = (k == 0) ? basis.chi0() : basis.chi1();
    // Partial inner product <chi| on the control factor.
    std::vector<Complex> partial(d, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < d; ++j) {
      partial[j] = std::conj(chi[0]) * joint[j] + std::conj(chi[1]) * joint[d + j];
    }
    double p = 0.0;
    for (const auto& c : partial) p += std::norm(c);
    outcomes[k].probability = p;
    if (p >= kZeroProbability) {
      const double n = std::sqrt(p);
      for (auto& c : partial) c /= n;
      outcomes[k].conditional_target = StateVector(std::move(partial));
    }
  }
  return outcomes;
}

Operator conditional_operator(const SwitchCircuit& circuit,
                              const StateVector& control_in,
                              const StateVector& chi_out) {
  check_dim(control_in, 2, "conditional_operator control_in");
  check_dim(chi_out, 2, "conditional_operator chi_out");
  check_unit_norm(control_in, kDefaultTol, "conditional_operator control_in");
  const Complex ca = std::conj(chi_out[0]) * control_in[0];
  const Complex cb = std::conj(chi_out[1]) * control_in[1];
  return ca * (circuit.b_gate() * circuit.a_gate()) +
         cb * (circuit.a_gate() * circuit.b_gate());
}

}  // namespace qsw
