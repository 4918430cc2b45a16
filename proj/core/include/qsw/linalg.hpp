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

#include <complex>
#include <cstddef>
#include <vector>

#include "qsw/errors.hpp"

// Dense complex linear algebra for small systems (d <= 8 in intended use).
// All types are immutable values after construction and all operations are
// pure functions, so everything here is safe to call concurrently.
// Matrices are stored row-major; row index = output index of the matrix
// acting on column vectors.  Non-finite entries are rejected at
// construction and never propagated.

namespace qsw {

using Complex = std::complex<double>;

// Default absolute entrywise comparison tolerance.
inline constexpr double kDefaultTol = 1e-10;

class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  // Computational basis ket |index> in dimension dim.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

 private:
  std::vector<Complex> amps_;
};

class Operator {
 public:
  // Row-major entries, length dim*dim.
  Operator(std::size_t dim, std::vector<Complex> entries);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim);
  static Operator from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

Operator operator+(const Operator& x, const Operator& y);
Operator operator-(const Operator& x, const Operator& y);
Operator operator*(const Operator& x, const Operator& y);
Operator operator*(Complex scalar, const Operator& x);
StateVector operator*(const Operator& x, const StateVector& v);

StateVector operator+(const StateVector& x, const StateVector& y);
StateVector operator-(const StateVector& x, const StateVector& y);
StateVector operator*(Complex scalar, const StateVector& x);

// Kronecker products.  Entry ((i*dy+k),(j*dy+l)) of the operator product is
// x(i,j)*y(k,l); the state overload follows the same index convention.
Operator tensor_product(const Operator& x, const Operator& y);
StateVector tensor_product(const StateVector& x, const StateVector& y);

// Conjugate transpose.
Operator dagger(const Operator& x);

Complex trace(const Operator& x);

// Hilbert-Schmidt inner product Tr(x^dagger * y).
Complex hs_inner(const Operator& x, const Operator& y);

double frobenius_norm(const Operator& x);

// Frobenius norm of (x^dagger * x - I); zero exactly for unitary x.
double unitarity_defect(const Operator& x);

Complex inner(const StateVector& x, const StateVector& y);
double norm(const StateVector& x);
StateVector normalized(const StateVector& x);

// Entrywise comparison: true iff max entry distance <= tol.  The phase
// variants first align the two operands by the phase of the
// largest-magnitude entry of the first.
bool approx_eq(const Operator& x, const Operator& y, double tol = kDefaultTol);
bool approx_eq_up_to_phase(const Operator& x, const Operator& y,
                           double tol = kDefaultTol);
bool approx_eq(const StateVector& x, const StateVector& y,
               double tol = kDefaultTol);
bool approx_eq_up_to_phase(const StateVector& x, const StateVector& y,
                           double tol = kDefaultTol);

}  // namespace qsw
