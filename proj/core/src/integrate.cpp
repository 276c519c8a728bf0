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

#include "nlqubit/integrate.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nlqubit {
namespace {

constexpr double kBoundaryTol = 1e-12;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

// --------------------------------------------------------------------------
// TargetMap
// --------------------------------------------------------------------------

TargetMap::TargetMap(std::vector<MapPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("TargetMap: no pieces");
  for (const auto& p : pieces_) {
    if (!finite(p.theta_lo) || !finite(p.theta_hi) || !finite(p.theta_shift) ||
        !finite(p.phi_shift)) {
      throw std::invalid_argument("TargetMap: non-finite piece parameter");
    }
    if (p.theta_hi < p.theta_lo) {
      throw std::invalid_argument("TargetMap: piece with theta_hi < theta_lo");
    }
  }
  if (std::abs(pieces_.front().theta_lo) > kBoundaryTol ||
      std::abs(pieces_.back().theta_hi - kPi) > kBoundaryTol) {
    throw std::invalid_argument("TargetMap: pieces must span [0, pi]");
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (std::abs(pieces_[i].theta_hi - pieces_[i + 1].theta_lo) > kBoundaryTol) {
      throw std::invalid_argument("TargetMap: pieces must be contiguous");
    }
  }
}

TargetMap TargetMap::identity() { return TargetMap({{0.0, kPi, 0.0, 0.0}}); }

TargetMap TargetMap::linear_shift(double alpha) {
  return TargetMap({{0.0, kPi, -alpha, 0.0}});
}

TargetMap TargetMap::rotation(double delta, double beta) {
  return TargetMap({{0.0, delta, 0.0, -beta}, {delta, kPi, 0.0, beta}});
}

TargetMap TargetMap::orthog(double delta) {
  return TargetMap(
      {{0.0, delta, -kPi, 0.0}, {delta, kPi - delta, 0.0, 0.0}, {kPi - delta, kPi, -kPi, 0.0}});
}

TargetMap TargetMap::general(double delta, double alpha) {
  return TargetMap({{0.0, delta, -alpha, 0.0}, {delta, kPi, 0.0, 0.0}});
}

const MapPiece& TargetMap::piece_for(double theta) const {
  for (const auto& p : pieces_) {
    if (theta >= p.theta_lo && theta < p.theta_hi) return p;
  }
  return pieces_.back();
}

BlochAngles TargetMap::apply(const BlochAngles& input) const {
  const MapPiece& p = piece_for(input.theta);
  return {input.theta + p.theta_shift, input.phi + p.phi_shift};
}

// --------------------------------------------------------------------------
// Sphere averaging
// --------------------------------------------------------------------------

double sphere_average(const SphereIntegrand& f, const TargetMap& map, const QuadratureSpec& q) {
  q.validate();
  const auto rule = gauss_legendre(q.n_theta);
  const double dphi = 2.0 * kPi / q.n_phi;
  CompensatedSum total;
  for (const auto& piece : map.pieces()) {
    if (!(piece.theta_hi > piece.theta_lo)) continue;
    const double half = 0.5 * (piece.theta_hi - piece.theta_lo);
    const double mid = 0.5 * (piece.theta_hi + piece.theta_lo);
    for (int i = 0; i < q.n_theta; ++i) {
      const double theta = mid + half * rule->nodes[i];
      // (1/4pi) * w_theta * sin(theta) * dphi
      const double weight = half * rule->weights[i] * std::sin(theta) * dphi / (4.0 * kPi);
      for (int j = 0; j < q.n_phi; ++j) {
        const BlochAngles input{theta, j * dphi};
        const BlochAngles target{theta + piece.theta_shift, input.phi + piece.phi_shift};
        total.add(weight * f(input, target));
      }
    }
  }
  return total.value();
}

// --------------------------------------------------------------------------
// Measurement schemes
// --------------------------------------------------------------------------

std::string_view to_string(MeasurementScheme scheme) {
  switch (scheme) {
    case MeasurementScheme::rho1: return "rho1";
    case MeasurementScheme::rho2: return "rho2";
    case MeasurementScheme::rho3: return "rho3";
    case MeasurementScheme::sigma1: return "sigma1";
    case MeasurementScheme::sigma2: return "sigma2";
  }
  return "unknown";
}

MeasurementScheme parse_measurement_scheme(std::string_view name) {
  for (auto s : {MeasurementScheme::rho1, MeasurementScheme::rho2, MeasurementScheme::rho3,
                 MeasurementScheme::sigma1, MeasurementScheme::sigma2}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown measurement scheme '" + std::string(name) + "'");
}

namespace {

// Guess-averaged preparation for one input. Guesses are uniform over the
// sphere (rho1, rho2) or over the upper hemisphere (rho3).
DensityMatrix guess_average(MeasurementScheme scheme, const BlochAngles& input,
                            const QuadratureSpec& q, double beta) {
  switch (scheme) {
    case MeasurementScheme::sigma1: return prep_sigma1(input);
    case MeasurementScheme::sigma2: return prep_sigma2(input);
    default: break;
  }
  const bool hemisphere = scheme == MeasurementScheme::rho3;
  const double mu_hi = hemisphere ? 0.5 * kPi : kPi;
  const double area = hemisphere ? 2.0 * kPi : 4.0 * kPi;
  const auto rule = gauss_legendre(q.n_guess_theta);
  const double half = 0.5 * mu_hi;
  const double dnu = 2.0 * kPi / q.n_guess_phi;

  DensityMatrix acc;
  for (int i = 0; i < q.n_guess_theta; ++i) {
    const double mu = half + half * rule->nodes[i];
    const double weight = half * rule->weights[i] * std::sin(mu) * dnu / area;
    for (int j = 0; j < q.n_guess_phi; ++j) {
      const BlochAngles guess{mu, j * dnu};
      DensityMatrix prep;
      switch (scheme) {
        case MeasurementScheme::rho1: prep = prep_rho1(input, guess); break;
        case MeasurementScheme::rho2: prep = prep_rho2(input, guess); break;
        default: prep = prep_rho3(input, guess, beta); break;
      }
      acc += weight * prep;
    }
  }
  return acc;
}

}  // namespace

AveragedPreparation::AveragedPreparation(MeasurementScheme scheme, const QuadratureSpec& q,
                                         double beta) {
  q.validate();
  const DensityMatrix north = guess_average(scheme, {0.0, 0.0}, q, beta);
  const DensityMatrix south = guess_average(scheme, {kPi, 0.0}, q, beta);
  const DensityMatrix plus_x = guess_average(scheme, {0.5 * kPi, 0.0}, q, beta);
  const DensityMatrix plus_y = guess_average(scheme, {0.5 * kPi, 0.5 * kPi}, q, beta);
  offset_ = 0.5 * (north + south);
  mz_ = 0.5 * (north - south);
  mx_ = plus_x - offset_;
  my_ = plus_y - offset_;
}

DensityMatrix AveragedPreparation::operator()(const BlochAngles& input) const {
  const double st = std::sin(input.theta);
  const double rx = st * std::cos(input.phi);
  const double ry = st * std::sin(input.phi);
  const double rz = std::cos(input.theta);
  return offset_ + rx * mx_ + ry * my_ + rz * mz_;
}

double measurement_fidelity(MeasurementScheme scheme, const TargetMap& map,
                            const QuadratureSpec& q, double beta) {
  const AveragedPreparation prep(scheme, q, beta);
  return sphere_average(
      [&](const BlochAngles& input, const BlochAngles& target) {
        return fidelity(state_from_angles(target), prep(input));
      },
      map, q);
}

double quantum_fidelity(const AncillaVectors& ch, const TargetMap& map, const QuadratureSpec& q) {
  const ChannelOverlaps ov = overlaps_of(ch);
  return sphere_average(
      [&](const BlochAngles& input, const BlochAngles& target) {
        return fidelity(state_from_angles(target), quantum_output(input, ov));
      },
      map, q);
}

// --------------------------------------------------------------------------
// Functional extraction
// --------------------------------------------------------------------------

const std::vector<GramParams>& functional_probes() {
  static const std::vector<GramParams> probes = {
      {0.0, 0.0, {0.0, 0.0}},   {1.0, 0.0, {0.0, 0.0}},    {0.0, 1.0, {0.0, 0.0}},
      {1.0, 1.0, {1.0, 0.0}},   {1.0, 1.0, {0.0, 1.0}},    {0.5, 0.5, {0.25, 0.25}},
      {0.3, 0.8, {-0.2, 0.3}},  {0.9, 0.2, {0.1, -0.35}},
  };
  return probes;
}

FunctionalFit fit_functional(const std::function<double(const AncillaVectors&)>& averaged,
                             double tolerance) {
  const auto& probes = functional_probes();
  const auto rows = static_cast<Eigen::Index>(probes.size());
  Eigen::MatrixXd design(rows, 5);
  Eigen::VectorXd measured(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const GramParams& g = probes[static_cast<std::size_t>(r)];
    // 2 Re(W z) = 2 Re W Re z - 2 Im W Im z
    design.row(r) << 1.0, g.x, g.y, 2.0 * g.z.real(), -2.0 * g.z.imag();
    measured(r) = averaged(dilate(g));
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(measured);
  const double residual = (design * coef - measured).cwiseAbs().maxCoeff();

  FunctionalFit fit;
  fit.functional = {coef(0), coef(1), coef(2), Complex{coef(3), coef(4)}};
  fit.residual = residual;
  if (!std::isfinite(residual) || residual > tolerance) {
    throw NumericalError("fit_functional: residual " + std::to_string(residual) +
                         " exceeds tolerance; fidelity is not affine in the Gram parameters");
  }
  return fit;
}

FidelityFunctional extract_functional(const TargetMap& map, const QuadratureSpec& q) {
  return fit_functional([&](const AncillaVectors& ch) { return quantum_fidelity(ch, map, q); })
      .functional;
}

FidelityFunctional orthog_coefficients(double delta) {
  if (!(delta >= -kBoundaryTol && delta <= 0.5 * kPi + kBoundaryTol)) {
    throw std::invalid_argument("orthog_coefficients: delta must lie in [0, pi/2]");
  }
  const double c1 = std::cos(delta);
  const double c2 = std::cos(2.0 * (kPi - delta)) - std::cos(2.0 * delta);
  const double c3 = std::cos(3.0 * (kPi - delta)) - std::cos(3.0 * delta);
  const double constant = 2.0 / 3.0 + c3 / 24.0 - c1 / 4.0;
  const double linear = -1.0 / 6.0 - c2 / 8.0 - c3 / 24.0 + c1 / 4.0;
  const double cross = -1.0 / 6.0 + c3 / 48.0 + 3.0 * c1 / 8.0;
  return {constant, linear, linear, Complex{cross, 0.0}};
}

FidelityFunctional general_coefficients(double alpha) {
  if (!(alpha >= -kBoundaryTol && alpha <= kPi + kBoundaryTol)) {
    throw std::invalid_argument("general_coefficients: alpha must lie in [0, pi]");
  }
  const double c = std::cos(alpha) / 6.0;
  const double s = kPi / 8.0 * std::sin(alpha);
  return {0.5 - c, c + s, c - s, Complex{c, 0.0}};
}

}  // namespace nlqubit
