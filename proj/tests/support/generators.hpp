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

// Seeded random generators shared by the unit, property and acceptance
// tests.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "nlqubit/channels.hpp"
#include "nlqubit/functional.hpp"
#include "nlqubit/scenarios.hpp"

namespace nlqubit::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_normal() { return {normal(), normal()}; }

  /// Uniform direction on the sphere.
  BlochAngles angles() {
    return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2.0 * kPi)};
  }

  GramParams gram() {
    GramParams g;
    g.x = uniform(0.0, 1.0);
    g.y = uniform(0.0, 1.0);
    const double r = std::sqrt(g.x * g.y) * std::sqrt(uniform(0.0, 1.0));
    g.z = std::polar(r, uniform(-kPi, kPi));
    return g;
  }

  /// Channel from two orthonormal vectors of C^2 (x) C^d: the images of
  /// |0>|Q> and |1>|Q> under a random unitary.
  AncillaVectors channel(int d) {
    const auto n = static_cast<std::size_t>(2 * d);
    std::vector<Complex> c0(n);
    std::vector<Complex> c1(n);
    for (auto& v : c0) v = complex_normal();
    for (auto& v : c1) v = complex_normal();
    normalize(c0);
    Complex proj{};
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(c0[i]) * c1[i];
    for (std::size_t i = 0; i < n; ++i) c1[i] -= proj * c0[i];
    normalize(c1);
    // |0>|Q> -> |0>|B> + |1>|A>,  |1>|Q> -> |0>|A~> + |1>|B~>
    AncillaVectors ch;
    const auto half = static_cast<std::ptrdiff_t>(d);
    ch.b.assign(c0.begin(), c0.begin() + half);
    ch.a.assign(c0.begin() + half, c0.end());
    ch.a_tilde.assign(c1.begin(), c1.begin() + half);
    ch.b_tilde.assign(c1.begin() + half, c1.end());
    return ch;
  }

  FidelityFunctional functional() {
    return {uniform(0.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
            Complex{uniform(-0.5, 0.5), uniform(-0.5, 0.5)}};
  }

  /// Random valid scenario with a family-appropriate parameter set.
  ScenarioRequest scenario(const QuadratureSpec& q) {
    ScenarioRequest req;
    req.quad = q;
    switch (integer(0, 3)) {
      case 0:
        req.family = Family::rotation;
        req.delta = uniform(0.0, kPi);
        req.beta = uniform(0.0, kPi);
        break;
      case 1:
        req.family = Family::orthog;
        req.delta = uniform(0.0, 0.5 * kPi);
        break;
      case 2:
        req.family = Family::general;
        req.delta = uniform(0.0, kPi);
        req.alpha = uniform(0.0, kPi);
        break;
      default:
        req.family = Family::linear_baseline;
        req.alpha = uniform(0.0, kPi);
        break;
    }
    req.schemes = {SchemeSpec::of(MeasurementScheme::rho1), SchemeSpec::of(MeasurementScheme::rho2),
                   SchemeSpec::of(MeasurementScheme::sigma1),
                   SchemeSpec::of(MeasurementScheme::sigma2), SchemeSpec::quantum_optimal()};
    if (req.family == Family::rotation) req.schemes.push_back(SchemeSpec::of(MeasurementScheme::rho3));
    return req;
  }

 private:
  static void normalize(std::vector<Complex>& v) {
    double n2 = 0.0;
    for (const auto& c : v) n2 += std::norm(c);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : v) c *= inv;
  }

  std::mt19937_64 rng_;
};

/// Partial-trace oracle: builds the joint output vectors and traces the
/// ancilla out directly.
inline DensityMatrix partial_trace_output(const BlochAngles& input, const AncillaVectors& ch) {
  const double c = std::cos(0.5 * input.theta);
  const Complex s = std::polar(std::sin(0.5 * input.theta), input.phi);
  const std::size_t d = ch.dim();
  std::vector<Complex> o0(d);
  std::vector<Complex> o1(d);
  for (std::size_t k = 0; k < d; ++k) {
    o0[k] = c * ch.b[k] + s * ch.a_tilde[k];
    o1[k] = c * ch.a[k] + s * ch.b_tilde[k];
  }
  DensityMatrix rho;
  for (std::size_t k = 0; k < d; ++k) {
    rho.m00 += std::norm(o0[k]);
    rho.m11 += std::norm(o1[k]);
    rho.m01 += o0[k] * std::conj(o1[k]);
  }
  rho.m10 = std::conj(rho.m01);
  return rho;
}

}  // namespace nlqubit::testing
