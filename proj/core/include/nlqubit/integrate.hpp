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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nlqubit/bloch.hpp"
#include "nlqubit/channels.hpp"
#include "nlqubit/functional.hpp"
#include "nlqubit/quadrature.hpp"

namespace nlqubit {

/// One polar band [theta_lo, theta_hi) of a target map and the shift it
/// applies: (theta, phi) -> (theta + theta_shift, phi + phi_shift).
struct MapPiece {
  double theta_lo = 0.0;
  double theta_hi = kPi;
  double theta_shift = 0.0;
  double phi_shift = 0.0;
};

/// Piecewise-constant shift of the Bloch sphere. The pieces partition
/// [0, pi] in order; zero-width pieces are allowed and contribute nothing.
class TargetMap {
 public:
  /// Throws std::invalid_argument unless the pieces partition [0, pi].
  explicit TargetMap(std::vector<MapPiece> pieces);

  static TargetMap identity();
  /// Whole sphere: (theta, phi) -> (theta - alpha, phi).
  static TargetMap linear_shift(double alpha);
  /// [0, delta) rotated by -beta about z, [delta, pi] by +beta.
  static TargetMap rotation(double delta, double beta);
  /// ORTHOG on [0, delta) and [pi - delta, pi], identity in between.
  static TargetMap orthog(double delta);
  /// [0, delta) shifted to theta - alpha, identity on [delta, pi].
  static TargetMap general(double delta, double alpha);

  const std::vector<MapPiece>& pieces() const { return pieces_; }

  /// Piece owning theta (half-open, the last piece also owns pi).
  const MapPiece& piece_for(double theta) const;
  BlochAngles apply(const BlochAngles& input) const;

 private:
  std::vector<MapPiece> pieces_;
};

/// Integrand of a sphere average: receives the input angles and the target
/// angles the map assigns to them.
using SphereIntegrand = std::function<double(const BlochAngles& input, const BlochAngles& target)>;

/// (1/4pi) * integral of f sin(theta) dtheta dphi, with the polar integral
/// split exactly at the map's piece boundaries.
double sphere_average(const SphereIntegrand& f, const TargetMap& map, const QuadratureSpec& q);

enum class MeasurementScheme { rho1, rho2, rho3, sigma1, sigma2 };

std::string_view to_string(MeasurementScheme scheme);
/// Throws std::invalid_argument for unknown names.
MeasurementScheme parse_measurement_scheme(std::string_view name);

/// Preparation averaged over the guess basis, stored as the affine map it
/// induces on Bloch vectors: rho(r) = offset + r_x*mx + r_y*my + r_z*mz.
///
/// Preparations are linear in the input projector, so the affine map is
/// recovered exactly from four inputs (both poles and two equator points).
class AveragedPreparation {
 public:
  /// rho1 and rho2 average guesses over the whole sphere, rho3 over the
  /// upper hemisphere; sigma1 and sigma2 involve no guess. `beta` is used by
  /// rho3 only.
  AveragedPreparation(MeasurementScheme scheme, const QuadratureSpec& q, double beta = 0.0);

  DensityMatrix operator()(const BlochAngles& input) const;

 private:
  DensityMatrix offset_;
  DensityMatrix mx_;
  DensityMatrix my_;
  DensityMatrix mz_;
};

/// Average over inputs (and guesses where applicable) of
/// <target|preparation|target>.
double measurement_fidelity(MeasurementScheme scheme, const TargetMap& map,
                            const QuadratureSpec& q, double beta = 0.0);

/// Sphere-averaged fidelity of a quantum-scheme channel against `map`.
double quantum_fidelity(const AncillaVectors& ch, const TargetMap& map, const QuadratureSpec& q);

/// Result of fitting the affine functional to probe evaluations.
struct FunctionalFit {
  FidelityFunctional functional;
  /// Largest |measured - predicted| over all probes.
  double residual = 0.0;
};

/// Probe Gram points: five that determine the functional, (0,0,0), (1,0,0),
/// (0,1,0), (1,1,1), (1,1,i), followed by three interior points that only
/// test it.
const std::vector<GramParams>& functional_probes();

/// Least-squares fit of F = v + X x + Y y + 2 Re(W z) to `averaged` evaluated
/// on every dilated probe. Throws NumericalError when the residual exceeds
/// `tolerance`, i.e. when `averaged` is not affine in the Gram parameters.
FunctionalFit fit_functional(const std::function<double(const AncillaVectors&)>& averaged,
                             double tolerance = 1e-9);

/// Fidelity functional of `map` from quadrature over the probe channels.
FidelityFunctional extract_functional(const TargetMap& map, const QuadratureSpec& q);

/// Closed-form functional of the partial ORTHOG map, delta in [0, pi/2].
FidelityFunctional orthog_coefficients(double delta);

/// Closed-form functional of the whole-sphere theta shift (general map with
/// delta = pi), alpha in [0, pi].
FidelityFunctional general_coefficients(double alpha);

}  // namespace nlqubit
