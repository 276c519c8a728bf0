// Copyright 2026 The nlqubit Authors
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

#include "nlqubit/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqubit {

PureState::PureState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
  const double norm2 = std::norm(amp0) + std::norm(amp1);
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

Complex PureState::inner(const PureState& other) const {
  return std::conj(amp0_) * other.amp0_ + std::conj(amp1_) * other.amp1_;
}

bool DensityMatrix::is_hermitian(double tol) const {
  return std::abs(m01 - std::conj(m10)) <= tol && std::abs(m00.imag()) <= tol &&
         std::abs(m11.imag()) <= tol;
}

bool DensityMatrix::is_valid(double tol) const {
  if (!is_hermitian(tol)) return false;
  if (std::abs(trace() - 1.0) > tol) return false;
  return m00.real() >= -tol && m11.real() >= -tol && det().real() >= -tol;
}

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& rhs) {
  m00 += rhs.m00;
  m01 += rhs.m01;
  m10 += rhs.m10;
  m11 += rhs.m11;
  return *this;
}

DensityMatrix operator-(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  return {lhs.m00 - rhs.m00, lhs.m01 - rhs.m01, lhs.m10 - rhs.m10, lhs.m11 - rhs.m11};
}

DensityMatrix operator*(double s, const DensityMatrix& m) {
  return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

DensityMatrix operator*(Complex s, const DensityMatrix& m) {
  return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

PureState state_from_angles(const BlochAngles& angles) {
  const double c = std::cos(0.5 * angles.theta);
  const double s = std::sin(0.5 * angles.theta);
  return {Complex{c, 0.0}, std::polar(1.0, angles.phi) * s};
}

PureState orthogonal_state(const BlochAngles& angles) {
  return state_from_angles({angles.theta - kPi, angles.phi});
}

PureState rotate_phase(const PureState& state, double beta) {
  return {state.amp0() * std::polar(1.0, -0.5 * beta),
          state.amp1() * std::polar(1.0, 0.5 * beta)};
}

DensityMatrix density_of(const PureState& state) {
  const Complex a = state.amp0();
  const Complex b = state.amp1();
  return {Complex{std::norm(a), 0.0}, a * std::conj(b), b * std::conj(a),
          Complex{std::norm(b), 0.0}};
}

double fidelity(const PureState& state, const DensityMatrix& rho) {
  if (!rho.is_hermitian(1e-10)) {
    throw std::invalid_argument("fidelity: operator is not Hermitian");
  }
  const Complex a = state.amp0();
  const Complex b = state.amp1();
  const double diag = std::norm(a) * rho.m00.real() + std::norm(b) * rho.m11.real();
  const double off = (std::conj(a) * rho.m01 * b + std::conj(b) * rho.m10 * a).real();
  return diag + off;
}

DensityMatrix bit_flip(const DensityMatrix& rho) {
  return {rho.m11, rho.m10, rho.m01, rho.m00};
}

}  // namespace nlqubit
