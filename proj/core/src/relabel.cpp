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

#include "qsw/relabel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qsw {

namespace {

std::string make_narrative(const std::string& l1, const std::string& l2) {
  std::string out;
  out += l1 + " happens first, not its orthogonal " + l2 + ", then " + l2 +
         " happens, not its orthogonal " + l1 + ".";
  out += "\n";
  out += "first " + l1 + " then " + l2;
  return out;
}

double normalized_hs_overlap(const Operator& x, const Operator& y) {
  const double nx = frobenius_norm(x);
  const double ny = frobenius_norm(y);
  if (nx < 1e-14 || ny < 1e-14) return 0.0;
  return std::abs(hs_inner(x, y)) / (nx * ny);
}

void check_gate_unitary(const Operator& gate, double tol, const char* which) {
  const double defect = unitarity_defect(gate);
  if (defect >= tol) {
    throw NotUnitary(std::string("relabel: gate ") + which +
                     " is not unitary (defect=" + std::to_string(defect) + ")");
  }
}

}  // namespace

OrderedDescription relabel(const Operator& a_gate, const Operator& b_gate,
                           const StateVector& control, double unitarity_tol,
                           double parallel_tol) {
  if (a_gate.dim() != b_gate.dim()) {
    throw DimensionMismatch("relabel: gates act on different dimensions");
  }
  check_gate_unitary(a_gate, unitarity_tol, "A");
  check_gate_unitary(b_gate, unitarity_tol, "B");
  if (control.dim() != 2) {
    throw DimensionMismatch("relabel: control must be a qubit state");
  }
  if (std::abs(norm(control) - 1.0) > kDefaultTol) {
    throw InvalidValue("relabel: control must be unit norm");
  }

  const ProcessVector va = vectorize(a_gate, "A");
  const ProcessVector vb = vectorize(b_gate, "B");
  const ProcessVector na = normalized(va);
  const ProcessVector nb = normalized(vb);

  // Non-orthogonal inputs are reduced to an orthogonal pair first; the
  // overlapping part carries no sense of order.
  const bool distilled = std::abs(overlap(na, nb)) >= kCoeffZeroTol;
  ProcessVector a_hat = na;
  ProcessVector b_hat = nb;
  if (distilled) {
    // Raises OrderUndefined for parallel inputs.
    ProcessPair pair = distill_orthogonal(va, vb, parallel_tol);
    a_hat = std::move(pair.first);
    b_hat = std::move(pair.second);
  }

  const Complex alpha = control[0];
  const Complex beta = control[1];
  const ProcessVector first = normalized(superpose(alpha, a_hat, beta, b_hat));

  // The orthogonal complement of first inside span{A^, B^}.  Its global
  // phase is fixed by making the leading span coefficient real and
  // positive, which reproduces the ordinary descriptions exactly.
  const Complex ca = std::conj(beta);
  const Complex cb = -std::conj(alpha);
  const Complex lead = (std::abs(ca) > kCoeffZeroTol) ? ca : cb;
  const Complex phase = std::conj(lead) / std::abs(lead);
  const ProcessVector second =
      normalized(superpose(phase * ca, a_hat, phase * cb, b_hat));

  OrderedDescription desc{control, first, second,
                          make_narrative(first.label(), second.label()),
                          distilled};
  return desc;
}

std::string narrative(const OrderedDescription& desc) {
  return make_narrative(desc.first.label(), desc.second.label());
}

ConsistencyReport consistency_report(const SwitchCircuit& circuit,
                                     const StateVector& control,
                                     double unitarity_tol,
                                     double parallel_tol) {
  const OrderedDescription desc = relabel(circuit.a_gate(), circuit.b_gate(),
                                          control, unitarity_tol, parallel_tol);

  // Undo the unit normalization before devectorizing: a process vector
  // pointing along a unitary has norm sqrt(d), so sqrt(d) * first maps back
  // to the operator it describes.
  const double root_d = std::sqrt(static_cast<double>(circuit.target_dim()));
  const Operator first_op = devectorize(scaled(Complex{root_d, 0.0}, desc.first));
  const Operator second_op =
      devectorize(scaled(Complex{root_d, 0.0}, desc.second));

  const ControlBasis outcome_basis = ControlBasis::from_state(control);
  const Operator k0 =
      conditional_operator(circuit, control, outcome_basis.chi0());
  const Operator k1 =
      conditional_operator(circuit, control, outcome_basis.chi1());
  const Operator composed = second_op * first_op;

  ConsistencyReport report{
      unitarity_defect(first_op),
      unitarity_defect(second_op),
      first_op,
      second_op,
      {k0, k1},
      {{{normalized_hs_overlap(first_op, k0), normalized_hs_overlap(first_op, k1)},
        {normalized_hs_overlap(composed, k0),
         normalized_hs_overlap(composed, k1)}}},
      ""};

  std::string notes;
  if (desc.distilled) {
    notes += "inputs were non-orthogonal; distilled to an orthogonal pair "
             "before relabeling; ";
  }
  notes += (report.first_unitarity_defect < kDefaultTol)
               ? "first process devectorizes to a unitary (defect < 1e-10)"
               : "first process devectorizes to a non-unitary operator";
  if (approx_eq_up_to_phase(composed, k0)) {
    notes += "; second*first matches switch conditional K0 up to global phase";
  } else if (approx_eq_up_to_phase(composed, k1)) {
    notes += "; second*first matches switch conditional K1 up to global phase";
  } else {
    notes += "; second*first matches no switch conditional up to global phase";
  }
  if (frobenius_norm(composed) < 1e-14) {
    notes += "; second*first is numerically zero";
  }
  if (frobenius_norm(k0) < 1e-14) notes += "; conditional K0 is numerically zero";
  if (frobenius_norm(k1) < 1e-14) notes += "; conditional K1 is numerically zero";
  report.notes = std::move(notes);
  return report;
}

}  // namespace qsw
