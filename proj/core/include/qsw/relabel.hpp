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
#include <string>

#include "qsw/process_space.hpp"
#include "qsw/quantum_switch.hpp"

// Definite-order re-description of the switch: every control state picks a
// "first" process vector (the control amplitudes applied to |A>, |B>) and
// the unique orthogonal "second" one inside their span.  The relabeling is
// purely descriptive; it never changes what the switch computes.

namespace qsw {

struct OrderedDescription {
  // Amplitudes (alpha, beta) over {|a>, |b>}.
  StateVector control_state;
  // Unit norm, mutually orthogonal, both inside span{|A>, |B>}.
  ProcessVector first;
  ProcessVector second;
  std::string narrative;
  // True when |A>, |B> were non-orthogonal and went through
  // distill_orthogonal before relabeling.
  bool distilled;
};

struct ConsistencyReport {
  double first_unitarity_defect;
  double second_unitarity_defect;
  // devectorize(sqrt(d) * first), so a vector representing a unitary maps
  // back to that unitary; same for second.
  Operator first_operator;
  Operator second_operator;
  // Conditional operators for the outcome basis {control, orthogonal}.
  std::array<Operator, 2> switch_conditionals;
  // Normalized overlaps |Tr(X^dag Y)| / (||X|| ||Y||); rows are
  // {first_operator, second_operator*first_operator}, columns the two
  // switch conditionals.  An entry is 0 when either operator is
  // numerically zero.
  std::array<std::array<double, 2>, 2> overlap_table;
  std::string notes;
};

// Maps a control state to the ordered pair of relabeled process vectors:
//   first  = alpha |A^> + beta |B^>          (normalized)
//   second = conj(beta) |A^> - conj(alpha) |B^>
// where {|A^>, |B^>} is the orthonormal pair obtained from |A>, |B>
// (distilled when they overlap).  The phase of second is fixed by making
// its leading span coefficient real and positive, which reproduces the
// ordinary descriptions exactly: control |a> gives (|A>, |B>), control |b>
// gives (|B>, |A>), and the equal real superposition gives
// ((|A>+|B>)/sqrt2, (|A>-|B>)/sqrt2).
// Throws NotUnitary for invalid gates and OrderUndefined for parallel
// process vectors.
OrderedDescription relabel(const Operator& a_gate, const Operator& b_gate,
                           const StateVector& control,
                           double unitarity_tol = kDefaultTol,
                           double parallel_tol = kParallelTol);

// Deterministic two-line rendering:
//   "<L1> happens first, not its orthogonal <L2>, then <L2> happens, not
//    its orthogonal <L1>."
//   "first <L1> then <L2>"
std::string narrative(const OrderedDescription& desc);

// Quantifies how the relabeled description relates to the switch's actual
// conditional operators.  The composition row multiplies in temporal order
// (first applied first, i.e. second_operator*first_operator); the report
// records whether that matches a conditional, it does not assert it.
ConsistencyReport consistency_report(const SwitchCircuit& circuit,
                                     const StateVector& control,
                                     double unitarity_tol = kDefaultTol,
                                     double parallel_tol = kParallelTol);

}  // namespace qsw
