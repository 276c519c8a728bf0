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

#include "nlqubit/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

namespace nlqubit {
namespace {

Complex dot(std::span<const Complex> u, std::span<const Complex> v) {
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm2(std::span<const Complex> u) { return dot(u, u).real(); }

// Outcome-weighted mixture p|u><u| + q|v><v|.
DensityMatrix mix(double p, const PureState& u, double q, const PureState& v) {
  return p * density_of(u) + q * density_of(v);
}

}  // namespace

DensityMatrix prep_rho1(const BlochAngles& input, const BlochAngles& guess) {
  const PureState psi = state_from_angles(input);
  const PureState g = state_from_angles(guess);
  const PureState g_perp = orthogonal_state(guess);
  return mix(std::norm(psi.inner(g)), g, std::norm(psi.inner(g_perp)), g_perp);
}

DensityMatrix prep_rho2(const BlochAngles& input, const BlochAngles& guess) {
  const PureState psi = state_from_angles(input);
  const PureState g = state_from_angles(guess);
  const PureState g_perp = orthogonal_state(guess);
  return mix(std::norm(psi.inner(g)), g_perp, std::norm(psi.inner(g_perp)), g);
}

DensityMatrix prep_sigma1(const BlochAngles& input) {
  const PureState psi = state_from_angles(input);
  return {std::norm(psi.amp0()), 0.0, 0.0, std::norm(psi.amp1())};
}

DensityMatrix prep_sigma2(const BlochAngles& input) {
  const PureState psi = state_from_angles(input);
  return {std::norm(psi.amp1()), 0.0, 0.0, std::norm(psi.amp0())};
}

DensityMatrix prep_rho3(const BlochAngles& input, const BlochAngles& guess, double beta) {
  if (guess.theta > 0.5 * kPi + 1e-12) {
    throw std::invalid_argument("prep_rho3: guess must lie in the upper hemisphere");
  }
  const PureState psi = state_from_angles(input);
  const double p = std::norm(psi.inner(state_from_angles(guess)));
  const double q = std::norm(psi.inner(orthogonal_state(guess)));
  const PureState up = state_from_angles({guess.theta, guess.phi + beta});
  const PureState down = state_from_angles({guess.theta - kPi, guess.phi - beta});
  return mix(p, up, q, down);
}

double AncillaVectors::constraint_violation() const {
  const std::size_t n = a.size();
  if (n == 0 || a_tilde.size() != n || b.size() != n || b_tilde.size() != n) {
    return std::numeric_limits<double>::infinity();
  }
  const double first = std::abs(norm2(a) + norm2(b) - 1.0);
  const double second = std::abs(norm2(a_tilde) + norm2(b_tilde) - 1.0);
  const double cross = std::abs(dot(b, a_tilde) + dot(a, b_tilde));
  return std::max({first, second, cross});
}

void AncillaVectors::validate(double tol) const {
  if (!(constraint_violation() <= tol)) {
    throw std::invalid_argument("AncillaVectors: unitarity constraints violated");
  }
}

bool GramParams::is_feasible(double tol) const {
  if (!(x >= -tol && x <= 1.0 + tol && y >= -tol && y <= 1.0 + tol)) return false;
  return std::norm(z) <= x * y + tol;
}

ChannelOverlaps overlaps_of(const AncillaVectors& ch) {
  ch.validate();
  ChannelOverlaps ov;
  ov.a_norm2 = norm2(ch.a);
  ov.a_tilde_norm2 = norm2(ch.a_tilde);
  ov.b_norm2 = norm2(ch.b);
  ov.b_tilde_norm2 = norm2(ch.b_tilde);
  ov.a_b = dot(ch.a, ch.b);
  ov.bt_at = dot(ch.b_tilde, ch.a_tilde);
  ov.a_at = dot(ch.a, ch.a_tilde);
  ov.bt_b = dot(ch.b_tilde, ch.b);
  ov.b_at = dot(ch.b, ch.a_tilde);
  ov.a_bt = dot(ch.a, ch.b_tilde);
  return ov;
}

DensityMatrix quantum_output(const BlochAngles& input, const ChannelOverlaps& ov) {
  const double c = std::cos(0.5 * input.theta);
  const double s = std::sin(0.5 * input.theta);
  const double cc = c * c;
  const double ss = s * s;
  const double cs = c * s;
  const Complex e = std::polar(1.0, input.phi);
  const Complex ebar = std::conj(e);

  DensityMatrix rho;
  rho.m01 = cc * ov.a_b + ss * ov.bt_at + cs * e * ov.a_at + cs * ebar * ov.bt_b;
  rho.m10 = cc * std::conj(ov.a_b) + ss * std::conj(ov.bt_at) + cs * e * std::conj(ov.bt_b) +
            cs * ebar * std::conj(ov.a_at);
  rho.m00 = cc * ov.b_norm2 + ss * ov.a_tilde_norm2 + cs * e * ov.b_at +
            cs * ebar * std::conj(ov.b_at);
  rho.m11 = cc * ov.a_norm2 + ss * ov.b_tilde_norm2 + cs * e * ov.a_bt +
            cs * ebar * std::conj(ov.a_bt);
  return rho;
}

DensityMatrix quantum_output(const BlochAngles& input, const AncillaVectors& ch) {
  return quantum_output(input, overlaps_of(ch));
}

AncillaVectors buzek_unot() {
  const double r23 = std::sqrt(2.0 / 3.0);
  const double r16 = std::sqrt(1.0 / 6.0);
  AncillaVectors ch;
  ch.a = {-r23, 0.0, 0.0, 0.0};
  ch.a_tilde = {0.0, 0.0, 0.0, r23};
  ch.b = {0.0, r16, r16, 0.0};
  ch.b_tilde = {0.0, -r16, -r16, 0.0};
  return ch;
}

AncillaVectors identity_channel() {
  return {{0.0}, {0.0}, {1.0}, {1.0}};
}

AncillaVectors bit_flip_channel() {
  return {{1.0}, {1.0}, {0.0}, {0.0}};
}

GramParams gram_of(const AncillaVectors& ch) {
  return {norm2(ch.b), norm2(ch.b_tilde), dot(ch.b, ch.b_tilde)};
}

AncillaVectors dilate(const GramParams& g) {
  if (!g.is_feasible()) {
    throw std::invalid_argument("dilate: Gram parameters are infeasible");
  }
  const double x = std::clamp(g.x, 0.0, 1.0);
  const double y = std::clamp(g.y, 0.0, 1.0);
  Complex z = g.z;
  if (x == 0.0 && z != Complex{}) {
    throw std::invalid_argument("dilate: x = 0 requires z = 0");
  }
  // Pull roundoff-level excursions back onto the Cauchy-Schwarz disk.
  const double bound = std::sqrt(x * y);
  if (std::abs(z) > bound) z *= bound / std::abs(z);

  AncillaVectors ch;
  ch.a = {0.0, 0.0, std::sqrt(1.0 - x), 0.0};
  ch.a_tilde = {0.0, 0.0, 0.0, std::sqrt(1.0 - y)};
  if (x > 0.0) {
    const double sx = std::sqrt(x);
    const double rest = std::max(0.0, y - std::norm(z) / x);
    ch.b = {sx, 0.0, 0.0, 0.0};
    ch.b_tilde = {z / sx, std::sqrt(rest), 0.0, 0.0};
  } else {
    ch.b = {0.0, 0.0, 0.0, 0.0};
    ch.b_tilde = {0.0, std::sqrt(y), 0.0, 0.0};
  }
  return ch;
}

}  // namespace nlqubit
