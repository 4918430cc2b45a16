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

#include "qsw/linalg.hpp"

// Processes as vectors in H_in (x) H_out.
//
// Index convention, the single source of truth for this module:
//
//   coeffs[i*d + j] = U[j][i]
//
// i.e. the coefficient at i*d + j is the amplitude of |i>_in (x) |j>_out,
// and column i of U (the image of input basis state |i>) becomes block i.
// With this layout overlap(vectorize(x), vectorize(y)) equals Tr(x^dag y)
// with no extra conjugation.
//
// vectorize carries no 1/sqrt(d) factor, so ||vectorize(U)|| = sqrt(d) for
// unitary U.  Normalization is always an explicit step, never implied.

namespace qsw {

// Normalized-overlap modulus above 1 - kParallelTol means the two vectors
// are parallel up to phase and no order exists between them.
inline constexpr double kParallelTol = 1e-10;

// Coefficients at or below this modulus count as zero when scanning for the
// leading coefficient and when simplifying composed labels.
inline constexpr double kCoeffZeroTol = 1e-12;

class ProcessVector {
 public:
  // coeffs must have length d*d.
  ProcessVector(std::size_t d, std::vector<Complex> coeffs, std::string label);

  std::size_t system_dim() const { return d_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t d_;
  std::vector<Complex> coeffs_;
  std::string label_;
};

struct ProcessPair {
  ProcessVector first;
  ProcessVector second;
};

ProcessVector vectorize(const Operator& u, std::string label);
Operator devectorize(const ProcessVector& v);

// Standard inner product of the coefficient sequences; equals
// hs_inner(devectorize(v), devectorize(w)).
Complex overlap(const ProcessVector& v, const ProcessVector& w);

double norm(const ProcessVector& v);
ProcessVector normalized(const ProcessVector& v);
ProcessVector scaled(Complex factor, const ProcessVector& v);

// Coefficientwise alpha*v + beta*w with a composed human-readable label,
// e.g. "(0.7071·A + 0.7071·B)".  Zero coefficients drop their term and a
// lone coefficient-one term collapses to the bare label.
ProcessVector superpose(Complex alpha, const ProcessVector& v, Complex beta,
                        const ProcessVector& w);

// Gram-Schmidt step: returns (v normalized, normalize(w - <v^,w> v^)).
// The second output has its leading coefficient made real and positive.
// Throws OrderUndefined when the normalized overlap modulus exceeds
// 1 - parallel_tol (same process twice: no sense of order).
ProcessPair distill_orthogonal(const ProcessVector& v, const ProcessVector& w,
                               double parallel_tol = kParallelTol);

// Multiplies by the unique phase that makes the first coefficient of
// modulus > zero_tol real and positive.  Zero vectors pass through.
ProcessVector phase_fixed(const ProcessVector& v,
                          double zero_tol = kCoeffZeroTol);

// Renders an amplitude for labels and narratives: 4 decimal places,
// half-even rounding; pure-real "0.7071", pure-imaginary "0.7071i",
// general "(0.5000+0.5000i)".  Negatives use U+2212.
std::string format_amplitude(Complex value);

// The label-composition rule used by superpose, exposed for narrative code.
std::string compose_superposition_label(Complex alpha, const std::string& la,
                                        Complex beta, const std::string& lb);

}  // namespace qsw
