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

#include "qsw/process_space.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qsw {

namespace {

// Typographic pieces shared by all composed labels; U+00B7 and U+2212.
constexpr const char* kDot = "·";
constexpr const char* kMinus = "−";

void check_same_space(const ProcessVector& v, const ProcessVector& w,
                      const char* what) {
  if (v.system_dim() != w.system_dim()) {
    throw DimensionMismatch(std::string(what) +
                            ": process vectors live on different systems");
  }
}

// Half-even rounding of x to 4 decimal places, returned as the scaled
// integer (7071 for 0.70710678...).  nearbyint ties to even under the
// default rounding mode.
long long round4(double x) {
  const double v = std::nearbyint(x * 10000.0);
  if (v == 0.0) return 0;  // normalizes -0
  return static_cast<long long>(v);
}

std::string render4(long long scaled) {
  std::string out;
  if (scaled < 0) {
    out += kMinus;
    scaled = -scaled;
  }
  const long long ip = scaled / 10000;
  const long long fp = scaled % 10000;
  out += std::to_string(ip);
  out += '.';
  std::string frac = std::to_string(fp);
  out.append(4 - frac.size(), '0');
  out += frac;
  return out;
}

bool is_zero(Complex c) { return std::abs(c) <= kCoeffZeroTol; }
bool is_one(Complex c) { return std::abs(c - Complex{1.0, 0.0}) <= kCoeffZeroTol; }
bool is_minus_one(Complex c) {
  return std::abs(c + Complex{1.0, 0.0}) <= kCoeffZeroTol;
}

// A term inside a composed label, without any joining sign logic.
std::string single_term(Complex c, const std::string& label) {
  if (is_one(c)) return label;
  if (is_minus_one(c)) return kMinus + label;
  return format_amplitude(c) + kDot + label;
}

// Appends " + <term>" or " - <term>", folding a pure-real or
// pure-imaginary negative coefficient into the separator.
void append_joined_term(std::string& out, Complex c, const std::string& label) {
  const long long rr = round4(c.real());
  const long long ri = round4(c.imag());
  const bool negative_pure = (ri == 0 && rr < 0) || (rr == 0 && ri < 0);
  if (negative_pure) {
    out += ' ';
    out += kMinus;
    out += ' ';
    c = -c;
  } else {
    out += " + ";
  }
  if (is_one(c)) {
    out += label;
  } else {
    out += format_amplitude(c) + kDot + label;
  }
}

}  // namespace

std::string format_amplitude(Complex value) {
  const long long rr = round4(value.real());
  const long long ri = round4(value.imag());
  if (ri == 0) return render4(rr);
  if (rr == 0) return render4(ri) + "i";
  std::string out = "(";
  out += render4(rr);
  if (ri > 0) {
    out += "+";
    out += render4(ri);
  } else {
    out += kMinus;
    out += render4(-ri);
  }
  out += "i)";
  return out;
}

std::string compose_superposition_label(Complex alpha, const std::string& la,
                                        Complex beta, const std::string& lb) {
  const bool za = is_zero(alpha);
  const bool zb = is_zero(beta);
  if (za && zb) return "0";
  if (zb) return single_term(alpha, la);
  if (za) return single_term(beta, lb);
  std::string out = "(";
  out += single_term(alpha, la);
  append_joined_term(out, beta, lb);
  out += ")";
  return out;
}

ProcessVector::ProcessVector(std::size_t d, std::vector<Complex> coeffs,
                             std::string label)
    : d_(d), coeffs_(std::move(coeffs)), label_(std::move(label)) {
  if (d_ == 0) {
    throw InvalidValue("ProcessVector: system dimension must be positive");
  }
  if (coeffs_.size() != d_ * d_) {
    throw InvalidValue("ProcessVector: expected " + std::to_string(d_ * d_) +
                       " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidValue("ProcessVector: coefficients must be finite");
    }
  }
}

ProcessVector vectorize(const Operator& u, std::string label) {
  const std::size_t d = u.dim();
  std::vector<Complex> coeffs(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      coeffs[i * d + j] = u(j, i);
    }
  }
  return ProcessVector(d, std::move(coeffs), std::move(label));
}

Operator devectorize(const ProcessVector& v) {
  const std::size_t d = v.system_dim();
  std::vector<Complex> entries(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      entries[j * d + i] = v.coeffs()[i * d + j];
    }
  }
  return Operator(d, std::move(entries));
}

Complex overlap(const ProcessVector& v, const ProcessVector& w) {
  check_same_space(v, w, "overlap");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    t += std::conj(v.coeffs()[i]) * w.coeffs()[i];
  }
  return t;
}

double norm(const ProcessVector& v) {
  double s = 0.0;
  for (const auto& c : v.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

ProcessVector normalized(const ProcessVector& v) {
  const double n = norm(v);
  if (n < 1e-15) {
    throw InvalidValue("normalized: process vector has near-zero norm");
  }
  std::vector<Complex> coeffs(v.coeffs());
  for (auto& c : coeffs) c /= n;
  return ProcessVector(v.system_dim(), std::move(coeffs), v.label());
}

ProcessVector scaled(Complex factor, const ProcessVector& v) {
  std::vector<Complex> coeffs(v.coeffs());
  for (auto& c : coeffs) c *= factor;
  return ProcessVector(v.system_dim(), std::move(coeffs), v.label());
}

ProcessVector superpose(Complex alpha, const ProcessVector& v, Complex beta,
                        const ProcessVector& w) {
  check_same_space(v, w, "superpose");
  std::vector<Complex> coeffs(v.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = alpha * v.coeffs()[i] + beta * w.coeffs()[i];
  }
  return ProcessVector(
      v.system_dim(), std::move(coeffs),
      compose_superposition_label(alpha, v.label(), beta, w.label()));
}

ProcessVector phase_fixed(const ProcessVector& v, double zero_tol) {
  for (const auto& c : v.coeffs()) {
    const double m = std::abs(c);
    if (m > zero_tol) {
      const Complex phase = std::conj(c) / m;
      if (std::abs(phase - Complex{1.0, 0.0}) == 0.0) return v;
      return scaled(phase, v);
    }
  }
  return v;
}

ProcessPair distill_orthogonal(const ProcessVector& v, const ProcessVector& w,
                               double parallel_tol) {
  check_same_space(v, w, "distill_orthogonal");
  const double nv = norm(v);
  const double nw = norm(w);
  if (nv < 1e-12 || nw < 1e-12) {
    throw InvalidValue("distill_orthogonal: input has near-zero norm");
  }
  const ProcessVector vhat = normalized(v);
  // Parallelism is judged on the normalized overlap modulus.
  const double cosine = std::abs(overlap(vhat, w)) / nw;
  if (cosine > 1.0 - parallel_tol) {
    throw OrderUndefined(
        "distill_orthogonal: process vectors are parallel up to phase; the "
        "same process twice has no sense of order");
  }
  const Complex proj = overlap(vhat, w);
  std::vector<Complex> residual(w.coeffs());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    residual[i] -= proj * vhat.coeffs()[i];
  }
  // A trailing prime marks the distilled residual of w.
  ProcessVector second(w.system_dim(), std::move(residual), w.label() + "'");
  return ProcessPair{vhat, phase_fixed(normalized(second))};
}

}  // namespace qsw
