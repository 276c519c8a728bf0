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

#include <memory>
#include <vector>

namespace nlqubit {

/// Gauss-Legendre abscissae and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, computed once per n by Newton iteration on P_n and cached.
/// Throws std::invalid_argument for n < 1.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n);

/// Node counts used for every sphere integral. Polar angles use
/// Gauss-Legendre on each piece; azimuths use the uniform (trapezoid) rule,
/// which is exact for the low-order trigonometric integrands involved.
struct QuadratureSpec {
  int n_theta = 64;
  int n_phi = 64;
  int n_guess_theta = 64;
  int n_guess_phi = 64;

  /// Throws std::invalid_argument unless every count is >= 4.
  void validate() const;

  /// All four counts set to n.
  static QuadratureSpec uniform(int n) { return {n, n, n, n}; }
  /// All four counts multiplied by k.
  QuadratureSpec scaled(int k) const {
    return {n_theta * k, n_phi * k, n_guess_theta * k, n_guess_phi * k};
  }
};

/// Neumaier-compensated running sum; order of `add` calls fixes the result.
class CompensatedSum {
 public:
  void add(double value);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace nlqubit
