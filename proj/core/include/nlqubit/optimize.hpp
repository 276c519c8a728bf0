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
#include <optional>
#include <string_view>

#include "nlqubit/functional.hpp"

namespace nlqubit {

/// Named shape of an optimal channel.
enum class Regime {
  identity,        // x = y = 1, z = 1
  pi_rotation,     // x = y = 1, z = -1
  bit_flip,        // x = y = z = 0
  chi_rotation,    // x = y = 1, |z| = 1, other phase
  boundary_mixed,  // anything else
};

std::string_view to_string(Regime regime);

/// Classifies a Gram point against the named corners with tolerance 1e-9.
Regime classify(const GramParams& g);

struct Optimum {
  GramParams best;
  double value = 0.0;
  /// arg(best.z); zero when z = 0.
  double chi = 0.0;
  Regime regime = Regime::boundary_mixed;
};

/// Global maximum of f over {x, y in [0,1], |z|^2 <= xy}.
///
/// For fixed (x, y) the optimal z is sqrt(xy) e^{-i arg W}, leaving
/// g(x, y) = X x + Y y + 2|W| sqrt(xy). g is positively homogeneous of
/// degree one, so its maximum over the box is attained at the origin or on
/// one of the faces x = 1, y = 1, where it reduces to a concave quadratic
/// in sqrt of the free coordinate. Ties (within 1e-10) go to the candidate
/// with smaller x + y.
Optimum maximize(const FidelityFunctional& f);

/// Rotation angle -arg(W) in (-pi, pi] of the optimal x = y = 1 channel.
/// Throws std::domain_error when the optimum is not at x = y = 1.
double optimal_chi(const FidelityFunctional& f);

/// Grid search over (sqrt(x), sqrt(y)) on an n_grid x n_grid lattice of
/// [0,1]^2 with the phase-aligned z, followed by three zoomed lattice passes
/// around the best cell. Independent check of `maximize`. Throws
/// std::invalid_argument for n_grid < 50.
Optimum brute_force(const FidelityFunctional& f, int n_grid);

/// Root of f - g - threshold in [lo, hi] by bisection, to within 1e-10.
/// Returns std::nullopt when the endpoints do not bracket a sign change.
///
/// A non-zero threshold locates where one curve departs from another it
/// touches (f - g >= 0 everywhere), which plain sign-change bisection
/// cannot see.
std::optional<double> find_crossover(const std::function<double(double)>& f,
                                     const std::function<double(double)>& g, double lo, double hi,
                                     double threshold = 0.0);

/// Boundary in [lo, hi] between where `pred` holds and where it does not,
/// given pred(lo) != pred(hi). Returns std::nullopt otherwise.
std::optional<double> find_transition(const std::function<bool(double)>& pred, double lo,
                                      double hi);

}  // namespace nlqubit
