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

#include "qsw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsw {

namespace {

void check_finite(const std::vector<Complex>& values, const char* what) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidValue(std::string(what) + ": entries must be finite");
    }
  }
}

void check_same_dim(std::size_t dx, std::size_t dy, const char* what) {
  if (dx != dy) {
    throw DimensionMismatch(std::string(what) + ": dimensions " +
                            std::to_string(dx) + " and " + std::to_string(dy) +
                            " differ");
  }
}

// Shared by the operator and state variants.
bool max_entry_close(const std::vector<Complex>& x,
                     const std::vector<Complex>& y, double tol) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

bool close_up_to_phase(const std::vector<Complex>& x,
                       const std::vector<Complex>& y, double tol) {
  std::size_t k = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::abs(x[i]);
    if (m > best) {
      best = m;
      k = i;
    }
  }
  if (best == 0.0 || std::abs(y[k]) == 0.0) {
    return max_entry_close(x, y, tol);
  }
  const Complex phase = (x[k] / best) * (std::conj(y[k]) / std::abs(y[k]));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - phase * y[i]) > tol) return false;
  }
  return true;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) {
    throw InvalidValue("StateVector: dimension must be positive");
  }
  check_finite(amps_, "StateVector");
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw InvalidValue("StateVector::basis: index out of range");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = Complex{1.0, 0.0};
  return StateVector(std::move(amps));
}

Operator::Operator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw InvalidValue("Operator: dimension must be positive");
  }
  if (entries_.size() != dim_ * dim_) {
    throw InvalidValue("Operator: expected " + std::to_string(dim_ * dim_) +
                       " entries, got " + std::to_string(entries_.size()));
  }
  check_finite(entries_, "Operator");
}

Operator Operator::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = Complex{1.0, 0.0};
  return Operator(dim, std::move(e));
}

Operator Operator::zero(std::size_t dim) {
  return Operator(dim, std::vector<Complex>(dim * dim, Complex{0.0, 0.0}));
}

Operator Operator::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t d = rows.size();
  std::vector<Complex> e;
  e.reserve(d * d);
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw InvalidValue("Operator::from_rows: matrix must be square");
    }
    e.insert(e.end(), row.begin(), row.end());
  }
  return Operator(d, std::move(e));
}

Operator operator+(const Operator& x, const Operator& y) {
  check_same_dim(x.dim(), y.dim(), "operator+");
  std::vector<Complex> e(x.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += y.entries()[i];
  return Operator(x.dim(), std::move(e));
}

Operator operator-(const Operator& x, const Operator& y) {
  check_same_dim(x.dim(), y.dim(), "operator-");
  std::vector<Complex> e(x.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= y.entries()[i];
  return Operator(x.dim(), std::move(e));
}

Operator operator*(const Operator& x, const Operator& y) {
  check_same_dim(x.dim(), y.dim(), "operator*");
  const std::size_t d = x.dim();
  std::vector<Complex> e(d * d, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < d; ++j) {
        e[i * d + j] += xik * y(k, j);
      }
    }
  }
  return Operator(d, std::move(e));
}

Operator operator*(Complex scalar, const Operator& x) {
  std::vector<Complex> e(x.entries());
  for (auto& v : e) v *= scalar;
  return Operator(x.dim(), std::move(e));
}

StateVector operator*(const Operator& x, const StateVector& v) {
  check_same_dim(x.dim(), v.dim(), "operator*(Operator, StateVector)");
  const std::size_t d = x.dim();
  std::vector<Complex> out(d, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out[i] += x(i, j) * v[j];
    }
  }
  return StateVector(std::move(out));
}

StateVector operator+(const StateVector& x, const StateVector& y) {
  check_same_dim(x.dim(), y.dim(), "operator+(StateVector)");
  std::vector<Complex> out(x.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return StateVector(std::move(out));
}

StateVector operator-(const StateVector& x, const StateVector& y) {
  check_same_dim(x.dim(), y.dim(), "operator-(StateVector)");
  std::vector<Complex> out(x.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
  return StateVector(std::move(out));
}

StateVector operator*(Complex scalar, const StateVector& x) {
  std::vector<Complex> out(x.amplitudes());
  for (auto& v : out) v *= scalar;
  return StateVector(std::move(out));
}

Operator tensor_product(const Operator& x, const Operator& y) {
  const std::size_t dx = x.dim();
  const std::size_t dy = y.dim();
  const std::size_t d = dx * dy;
  std::vector<Complex> e(d * d);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dx; ++j) {
      for (std::size_t k = 0; k < dy; ++k) {
        for (std::size_t l = 0; l < dy; ++l) {
          e[(i * dy + k) * d + (j * dy + l)] = x(i, j) * y(k, l);
        }
      }
    }
  }
  return Operator(d, std::move(e));
}

StateVector tensor_product(const StateVector& x, const StateVector& y) {
  const std::size_t dy = y.dim();
  std::vector<Complex> out(x.dim() * dy);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t k = 0; k < dy; ++k) {
      out[i * dy + k] = x[i] * y[k];
    }
  }
  return StateVector(std::move(out));
}

Operator dagger(const Operator& x) {
  const std::size_t d = x.dim();
  std::vector<Complex> e(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      e[j * d + i] = std::conj(x(i, j));
    }
  }
  return Operator(d, std::move(e));
}

Complex trace(const Operator& x) {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) t += x(i, i);
  return t;
}

Complex hs_inner(const Operator& x, const Operator& y) {
  check_same_dim(x.dim(), y.dim(), "hs_inner");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    t += std::conj(x.entries()[i]) * y.entries()[i];
  }
  return t;
}

double frobenius_norm(const Operator& x) {
  double s = 0.0;
  for (const auto& v : x.entries()) s += std::norm(v);
  return std::sqrt(s);
}

double unitarity_defect(const Operator& x) {
  return frobenius_norm(dagger(x) * x - Operator::identity(x.dim()));
}

Complex inner(const StateVector& x, const StateVector& y) {
  check_same_dim(x.dim(), y.dim(), "inner");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) {
    t += std::conj(x[i]) * y[i];
  }
  return t;
}

double norm(const StateVector& x) {
  double s = 0.0;
  for (const auto& v : x.amplitudes()) s += std::norm(v);
  return std::sqrt(s);
}

StateVector normalized(const StateVector& x) {
  const double n = norm(x);
  if (n < 1e-15) {
    throw InvalidValue("normalized: vector has near-zero norm");
  }
  return Complex{1.0 / n, 0.0} * x;
}

bool approx_eq(const Operator& x, const Operator& y, double tol) {
  check_same_dim(x.dim(), y.dim(), "approx_eq");
  return max_entry_close(x.entries(), y.entries(), tol);
}

bool approx_eq_up_to_phase(const Operator& x, const Operator& y, double tol) {
  check_same_dim(x.dim(), y.dim(), "approx_eq_up_to_phase");
  return close_up_to_phase(x.entries(), y.entries(), tol);
}

bool approx_eq(const StateVector& x, const StateVector& y, double tol) {
  check_same_dim(x.dim(), y.dim(), "approx_eq");
  return max_entry_close(x.amplitudes(), y.amplitudes(), tol);
}

bool approx_eq_up_to_phase(const StateVector& x, const StateVector& y,
                           double tol) {
  check_same_dim(x.dim(), y.dim(), "approx_eq_up_to_phase");
  return close_up_to_phase(x.amplitudes(), y.amplitudes(), tol);
}

}  // namespace qsw
