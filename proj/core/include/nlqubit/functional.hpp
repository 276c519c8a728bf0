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

#include <stdexcept>
#include <string>

#include "nlqubit/channels.hpp"

namespace nlqubit {

/// Raised when a computation cannot produce a trustworthy number: a fit
/// residual above tolerance, a fidelity outside [0, 1], a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Average fidelity as an affine function of the Gram parameters,
/// F(x, y, z) = v + x_coef*x + y_coef*y + 2 Re(w z).
struct FidelityFunctional {
  double v = 0.0;
  double x_coef = 0.0;
  double y_coef = 0.0;
  Complex w{};

  double evaluate(const GramParams& g) const {
    return v + x_coef * g.x + y_coef * g.y + 2.0 * (w * g.z).real();
  }
};

}  // namespace nlqubit
