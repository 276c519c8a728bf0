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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlqubit/integrate.hpp"
#include "nlqubit/optimize.hpp"

namespace nlqubit {

/// Transformation families:
///   rotation         [0, delta) rotated by -beta about z, [delta, pi] by +beta
///   orthog           ORTHOG on [0, delta) and [pi - delta, pi]
///   general          theta -> theta - alpha on [0, delta)
///   linear_baseline  theta -> theta - alpha on the whole sphere
enum class Family { rotation, orthog, general, linear_baseline };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Invalid request field. `field()` is one of delta, beta, alpha, schemes,
/// quad.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// One strategy to evaluate: a measurement preparation, the optimal quantum
/// channel, or a fixed quantum channel given by its Gram parameters.
struct SchemeSpec {
  enum class Kind { measurement, quantum_optimal, quantum_fixed };

  Kind kind = Kind::measurement;
  MeasurementScheme measurement = MeasurementScheme::rho1;
  GramParams fixed;

  static SchemeSpec of(MeasurementScheme scheme) { return {Kind::measurement, scheme, {}}; }
  static SchemeSpec quantum_optimal() { return {Kind::quantum_optimal, {}, {}}; }
  static SchemeSpec quantum_fixed(const GramParams& g) { return {Kind::quantum_fixed, {}, g}; }

  /// Accepts rho1, rho2, rho3, sigma1, sigma2, quantum_optimal and
  /// quantum_fixed:x:y:re:im. Throws std::invalid_argument otherwise.
  static SchemeSpec parse(std::string_view text);

  /// Column label; quantum_fixed renders as quantum_fixed:x:y:re:im.
  std::string label() const;
};

struct ScenarioRequest {
  Family family = Family::rotation;
  std::optional<double> delta;
  std::optional<double> beta;
  std::optional<double> alpha;
  std::vector<SchemeSpec> schemes;
  QuadratureSpec quad;

  /// Throws ParameterError for missing, superfluous or out-of-range
  /// parameters, an empty scheme list, or rho3 outside the rotation family.
  void validate() const;

  /// Target map of the family at the requested parameters.
  TargetMap target_map() const;
};

struct CurvePoint {
  double abscissa = 0.0;
  /// (label, fidelity) in request order.
  std::vector<std::pair<std::string, double>> fidelities;
  /// Present when quantum_optimal was requested.
  std::optional<Optimum> optimum;

  /// Throws std::out_of_range for unknown labels.
  double at(std::string_view label) const;
};

enum class SweepParameter { delta, beta, alpha };

std::string_view to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(std::string_view name);

/// Evaluates every requested scheme. The abscissa is delta for the rotation,
/// orthog and general families and alpha for the baseline.
///
/// Throws NumericalError when a fidelity is non-finite or outside [0, 1]
/// beyond 1e-9, or when the functional fit fails.
CurvePoint run(const ScenarioRequest& req);

/// Copy of `req` with `parameter` set to `value`.
ScenarioRequest with_parameter(ScenarioRequest req, SweepParameter parameter, double value);

/// n_points evenly spaced values of `parameter` from lo to hi inclusive.
/// Points are evaluated concurrently; the result is ordered by abscissa and
/// independent of scheduling. Throws std::invalid_argument for n_points < 2
/// or hi <= lo.
std::vector<CurvePoint> sweep(const ScenarioRequest& tmpl, SweepParameter parameter, double lo,
                              double hi, int n_points);

/// Default odd sweep length, so that midpoints such as pi/2 are sampled.
inline constexpr int kDefaultSweepPoints = 97;

/// Rotation angles used for the family of chi(delta) curves. A presentation
/// choice; any beta is accepted.
inline constexpr std::array<double, 5> kRotationBetaPresets = {kPi / 6.0, kPi / 3.0, kPi / 2.0,
                                                                2.0 * kPi / 3.0, 5.0 * kPi / 6.0};

struct Crossover {
  /// "measurement" for a change of best preparation, "quantum" for a change
  /// of optimal-channel regime.
  std::string kind;
  std::string from;
  std::string to;
  /// std::nullopt when bisection could not confirm the bracket.
  std::optional<double> location;
};

/// Scans `parameter` over [lo, hi] and reports every switch of the best
/// measurement preparation (among the requested measurement schemes, ties
/// within 1e-9 ignored) and, if quantum_optimal is requested, every switch of
/// the optimal regime. Each switch is refined by bisection.
std::vector<Crossover> crossover_report(const ScenarioRequest& tmpl, SweepParameter parameter,
                                        double lo, double hi, int n_scan = kDefaultSweepPoints);

}  // namespace nlqubit
