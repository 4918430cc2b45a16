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

#include "qsw/linalg.hpp"

// The two-process quantum switch.
//
// Conventions: the control qubit is the first tensor factor, so the joint
// index is control*d + target.  Control state |a> = |0> routes the target
// through A first (the target experiences B*A); |b> = |1> routes B first
// (A*B).  The switch operator is therefore
//
//   S = |a><a| (x) B*A  +  |b><b| (x) A*B.

namespace qsw {

// Outcomes with probability below this carry no conditional state.
inline constexpr double kZeroProbability = 1e-14;

class SwitchCircuit {
 public:
  // Both gates d x d with unitarity_defect < unitarity_tol, else NotUnitary.
  SwitchCircuit(Operator a_gate, Operator b_gate,
                double unitarity_tol = kDefaultTol);

  const Operator& a_gate() const { return a_gate_; }
  const Operator& b_gate() const { return b_gate_; }
  std::size_t target_dim() const { return a_gate_.dim(); }

 private:
  Operator a_gate_;
  Operator b_gate_;
};

class ControlBasis {
 public:
  // Two unit-norm, mutually orthogonal dim-2 states.
  ControlBasis(StateVector chi0, StateVector chi1, double tol = kDefaultTol);

  static ControlBasis computational();
  // Completes chi0 = (alpha, beta) with its orthogonal partner
  // (conj(beta), -conj(alpha)).
  static ControlBasis from_state(const StateVector& chi0,
                                 double tol = kDefaultTol);

  const StateVector& chi0() const { return chi0_; }
  const StateVector& chi1() const { return chi1_; }

 private:
  StateVector chi0_;
  StateVector chi1_;
};

struct SwitchOutcome {
  int outcome_index;
  double probability;
  // Empty when probability < kZeroProbability: an impossible outcome is
  // flagged explicitly rather than returning a garbage vector.
  std::optional<StateVector> conditional_target;
};

Operator switch_unitary(const SwitchCircuit& circuit);

// switch_unitary(circuit) * (control (x) target).  Both inputs must be unit
// norm within norm_tol.
StateVector run_switch(const SwitchCircuit& circuit, const StateVector& control,
                       const StateVector& target,
                       double norm_tol = kDefaultTol);

// Projects the control factor of a unit-norm joint state onto each basis
// state; probabilities sum to 1 for any orthonormal basis.
std::array<SwitchOutcome, 2> measure_control(const StateVector& joint,
                                             const ControlBasis& basis,
                                             double norm_tol = kDefaultTol);

// The (generally non-unitary) operator the target experiences given control
// input control_in and control outcome chi_out:
//   <chi_out|a><a|control_in> B*A + <chi_out|b><b|control_in> A*B.
// For control_in = |+> and chi_out = |+->/|-> this is (B*A +- A*B)/2.
Operator conditional_operator(const SwitchCircuit& circuit,
                              const StateVector& control_in,
                              const StateVector& chi_out);

}  // namespace qsw
