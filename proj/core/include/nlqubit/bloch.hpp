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

#pragma once

#include <complex>
#include <numbers>

namespace nlqubit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Polar angle `theta` and azimuth `phi` of a point on the Bloch sphere.
///
/// Physical states have theta in [0, pi], but the state constructor accepts
/// any real theta so that shifted targets such as (theta - alpha, phi) can
/// be formed without reflection.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Normalized single-qubit pure state amp0|0> + amp1|1>.
///
/// Global phase is kept as-is; compare states through overlaps or density
/// matrices, never amplitude-by-amplitude.
class PureState {
 public:
  /// Throws std::invalid_argument unless |amp0|^2 + |amp1|^2 = 1 within 1e-12.
  PureState(Complex amp0, Complex amp1);

  Complex amp0() const { return amp0_; }
  Complex amp1() const { return amp1_; }

  /// <this|other>
  Complex inner(const PureState& other) const;

 private:
  Complex amp0_;
  Complex amp1_;
};

/// 2x2 complex matrix in row-major entries. Used both for density matrices
/// and for intermediate linear combinations of them; validity is checked
/// explicitly with `is_valid`.
struct DensityMatrix {
  Complex m00{};
  Complex m01{};
  Complex m10{};
  Complex m11{};

  Complex trace() const { return m00 + m11; }
  Complex det() const { return m00 * m11 - m01 * m10; }

  bool is_hermitian(double tol = 1e-12) const;
  /// Hermitian, unit trace and positive semidefinite, all within `tol`.
  bool is_valid(double tol = 1e-12) const;

  DensityMatrix& operator+=(const DensityMatrix& rhs);
  friend DensityMatrix operator+(DensityMatrix lhs, const DensityMatrix& rhs) {
    return lhs += rhs;
  }
  friend DensityMatrix operator-(const DensityMatrix& lhs, const DensityMatrix& rhs);
  friend DensityMatrix operator*(double s, const DensityMatrix& m);
  friend DensityMatrix operator*(Complex s, const DensityMatrix& m);
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, applied literally for any
/// real theta.
PureState state_from_angles(const BlochAngles& angles);

/// The ORTHOG image |psi(theta - pi, phi)>.
PureState orthogonal_state(const BlochAngles& angles);

/// R_z(beta) = diag(e^{-i beta/2}, e^{i beta/2}); advances the azimuth by beta.
PureState rotate_phase(const PureState& state, double beta);

DensityMatrix density_of(const PureState& state);

/// <psi|rho|psi>. Throws std::invalid_argument when rho is not Hermitian
/// within 1e-10, which indicates a malformed channel output.
double fidelity(const PureState& state, const DensityMatrix& rho);

/// Pauli X conjugation, X rho X.
DensityMatrix bit_flip(const DensityMatrix& rho);

}  // namespace nlqubit
