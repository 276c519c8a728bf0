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

#include "nlqubit/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <thread>

namespace nlqubit {
namespace {

// Slack for parameters typed as decimal approximations of pi or pi/2.
constexpr double kRangeSlack = 1e-6;
constexpr double kTieGap = 1e-9;

double parse_number(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("invalid number '" + s + "' in " + std::string(what));
  }
  return v;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double checked_in_range(const std::optional<double>& value, std::string_view name, double lo,
                        double hi) {
  if (!value) throw ParameterError(std::string(name), std::string(name) + " is required");
  const double v = *value;
  if (!std::isfinite(v) || v < lo - kRangeSlack || v > hi + kRangeSlack) {
    throw ParameterError(std::string(name), std::string(name) + " must lie in [" +
                                                format_number(lo) + ", " + format_number(hi) + "]");
  }
  return std::clamp(v, lo, hi);
}

void require_absent(const std::optional<double>& value, std::string_view name, Family family) {
  if (value) {
    throw ParameterError(std::string(name), std::string(name) + " does not apply to the " +
                                                std::string(to_string(family)) + " family");
  }
}

void check_fidelity(const std::string& label, double value) {
  if (!std::isfinite(value) || value < -1e-9 || value > 1.0 + 1e-9) {
    throw NumericalError("fidelity of " + label + " is outside [0, 1]: " + format_number(value));
  }
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::rotation: return "rotation";
    case Family::orthog: return "orthog";
    case Family::general: return "general";
    case Family::linear_baseline: return "linear_baseline";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::rotation, Family::orthog, Family::general, Family::linear_baseline}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::delta: return "delta";
    case SweepParameter::beta: return "beta";
    case SweepParameter::alpha: return "alpha";
  }
  return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (auto p : {SweepParameter::delta, SweepParameter::beta, SweepParameter::alpha}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

SchemeSpec SchemeSpec::parse(std::string_view text) {
  if (text == "quantum_optimal") return quantum_optimal();
  constexpr std::string_view fixed_prefix = "quantum_fixed:";
  if (text.starts_with(fixed_prefix)) {
    std::vector<double> values;
    std::string_view rest = text.substr(fixed_prefix.size());
    while (true) {
      const auto colon = rest.find(':');
      values.push_back(parse_number(rest.substr(0, colon), "quantum_fixed"));
      if (colon == std::string_view::npos) break;
      rest = rest.substr(colon + 1);
    }
    if (values.size() != 4) {
      throw std::invalid_argument("quantum_fixed expects x:y:re:im");
    }
    const GramParams g{values[0], values[1], Complex{values[2], values[3]}};
    if (!g.is_feasible()) throw std::invalid_argument("quantum_fixed: infeasible Gram parameters");
    return quantum_fixed(g);
  }
  return of(parse_measurement_scheme(text));
}

std::string SchemeSpec::label() const {
  switch (kind) {
    case Kind::measurement: return std::string(to_string(measurement));
    case Kind::quantum_optimal: return "quantum_optimal";
    case Kind::quantum_fixed:
      return "quantum_fixed:" + format_number(fixed.x) + ":" + format_number(fixed.y) + ":" +
             format_number(fixed.z.real()) + ":" + format_number(fixed.z.imag());
  }
  return "unknown";
}

void ScenarioRequest::validate() const {
  try {
    quad.validate();
  } catch (const std::invalid_argument& e) {
    throw ParameterError("quad", e.what());
  }
  switch (family) {
    case Family::rotation:
      checked_in_range(delta, "delta", 0.0, kPi);
      if (!beta || !std::isfinite(*beta)) throw ParameterError("beta", "beta is required");
      require_absent(alpha, "alpha", family);
      break;
    case Family::orthog:
      checked_in_range(delta, "delta", 0.0, 0.5 * kPi);
      require_absent(beta, "beta", family);
      require_absent(alpha, "alpha", family);
      break;
    case Family::general:
      checked_in_range(delta, "delta", 0.0, kPi);
      checked_in_range(alpha, "alpha", 0.0, kPi);
      require_absent(beta, "beta", family);
      break;
    case Family::linear_baseline:
      checked_in_range(alpha, "alpha", 0.0, kPi);
      require_absent(delta, "delta", family);
      require_absent(beta, "beta", family);
      break;
  }
  if (schemes.empty()) throw ParameterError("schemes", "at least one scheme is required");
  for (const auto& s : schemes) {
    if (s.kind == SchemeSpec::Kind::measurement && s.measurement == MeasurementScheme::rho3 &&
        family != Family::rotation) {
      throw ParameterError("schemes", "rho3 is only defined for the rotation family");
    }
    if (s.kind == SchemeSpec::Kind::quantum_fixed && !s.fixed.is_feasible()) {
      throw ParameterError("schemes", "quantum_fixed: infeasible Gram parameters");
    }
  }
}

TargetMap ScenarioRequest::target_map() const {
  validate();
  switch (family) {
    case Family::rotation:
      return TargetMap::rotation(checked_in_range(delta, "delta", 0.0, kPi), *beta);
    case Family::orthog:
      return TargetMap::orthog(checked_in_range(delta, "delta", 0.0, 0.5 * kPi));
    case Family::general:
      return TargetMap::general(checked_in_range(delta, "delta", 0.0, kPi),
                                checked_in_range(alpha, "alpha", 0.0, kPi));
    case Family::linear_baseline:
      return TargetMap::linear_shift(checked_in_range(alpha, "alpha", 0.0, kPi));
  }
  throw std::invalid_argument("unknown family");
}

double CurvePoint::at(std::string_view label) const {
  for (const auto& [name, value] : fidelities) {
    if (name == label) return value;
  }
  throw std::out_of_range("no fidelity for scheme '" + std::string(label) + "'");
}

CurvePoint run(const ScenarioRequest& req) {
  const TargetMap map = req.target_map();
  CurvePoint point;
  point.abscissa = req.family == Family::linear_baseline ? *req.alpha : *req.delta;
  // rho3 rotates its upper-hemisphere outcome the way the map rotates the
  // upper cap.
  const double rho3_beta = req.family == Family::rotation ? map.pieces().front().phi_shift : 0.0;

  for (const auto& scheme : req.schemes) {
    double value = 0.0;
    switch (scheme.kind) {
      case SchemeSpec::Kind::measurement:
        value = measurement_fidelity(scheme.measurement, map, req.quad, rho3_beta);
        break;
      case SchemeSpec::Kind::quantum_optimal: {
        const Optimum opt = maximize(extract_functional(map, req.quad));
        value = opt.value;
        point.optimum = opt;
        break;
      }
      case SchemeSpec::Kind::quantum_fixed:
        value = quantum_fidelity(dilate(scheme.fixed), map, req.quad);
        break;
    }
    const std::string label = scheme.label();
    check_fidelity(label, value);
    point.fidelities.emplace_back(label, value);
  }
  return point;
}

ScenarioRequest with_parameter(ScenarioRequest req, SweepParameter parameter, double value) {
  switch (parameter) {
    case SweepParameter::delta: req.delta = value; break;
    case SweepParameter::beta: req.beta = value; break;
    case SweepParameter::alpha: req.alpha = value; break;
  }
  return req;
}

std::vector<CurvePoint> sweep(const ScenarioRequest& tmpl, SweepParameter parameter, double lo,
                              double hi, int n_points) {
  if (n_points < 2) throw std::invalid_argument("sweep: n_points must be >= 2");
  if (!(hi > lo)) throw std::invalid_argument("sweep: empty range");
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    xs[static_cast<std::size_t>(i)] =
        i == n_points - 1 ? hi : lo + (hi - lo) * i / (n_points - 1);
  }
  // Fail fast on the first point before spawning workers.
  with_parameter(tmpl, parameter, xs.front()).validate();

  std::vector<CurvePoint> out(xs.size());
  const unsigned workers =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(n_points));
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers) {
        CurvePoint p = run(with_parameter(tmpl, parameter, xs[i]));
        p.abscissa = xs[i];
        out[i] = std::move(p);
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

namespace {

// Label of the decisively best measurement scheme, or empty on a tie.
std::string best_measurement(const CurvePoint& p, const std::vector<std::string>& labels) {
  std::string best;
  double best_value = -1.0;
  double runner_up = -1.0;
  for (const auto& label : labels) {
    const double v = p.at(label);
    if (v > best_value) {
      runner_up = best_value;
      best_value = v;
      best = label;
    } else if (v > runner_up) {
      runner_up = v;
    }
  }
  return best_value - runner_up > kTieGap ? best : std::string{};
}

}  // namespace

std::vector<Crossover> crossover_report(const ScenarioRequest& tmpl, SweepParameter parameter,
                                        double lo, double hi, int n_scan) {
  std::vector<std::string> measurement_labels;
  bool quantum = false;
  for (const auto& s : tmpl.schemes) {
    if (s.kind == SchemeSpec::Kind::measurement) measurement_labels.push_back(s.label());
    if (s.kind == SchemeSpec::Kind::quantum_optimal) quantum = true;
  }

  const std::vector<CurvePoint> scan = sweep(tmpl, parameter, lo, hi, n_scan);
  std::vector<Crossover> report;

  if (measurement_labels.size() >= 2) {
    ScenarioRequest measurement_only = tmpl;
    measurement_only.schemes.clear();
    for (const auto& label : measurement_labels) {
      measurement_only.schemes.push_back(SchemeSpec::parse(label));
    }
    auto fidelity_of = [&](const std::string& label) {
      ScenarioRequest single = measurement_only;
      single.schemes = {SchemeSpec::parse(label)};
      return [single, parameter, label](double x) {
        return run(with_parameter(single, parameter, x)).at(label);
      };
    };

    std::string previous;
    double previous_x = lo;
    for (const auto& p : scan) {
      const std::string best = best_measurement(p, measurement_labels);
      if (best.empty()) continue;
      if (!previous.empty() && best != previous) {
        report.push_back({"measurement", previous, best,
                          find_crossover(fidelity_of(previous), fidelity_of(best), previous_x,
                                         p.abscissa)});
      }
      previous = best;
      previous_x = p.abscissa;
    }
  }

  if (quantum) {
    ScenarioRequest quantum_only = tmpl;
    quantum_only.schemes = {SchemeSpec::quantum_optimal()};
    auto regime_at = [&](double x) {
      return run(with_parameter(quantum_only, parameter, x)).optimum->regime;
    };
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
      const Regime a = scan[i].optimum->regime;
      const Regime b = scan[i + 1].optimum->regime;
      if (a == b) continue;
      report.push_back({"quantum", std::string(to_string(a)), std::string(to_string(b)),
                        find_transition([&](double x) { return regime_at(x) == a; },
                                        scan[i].abscissa, scan[i + 1].abscissa)});
    }
  }
  return report;
}

}  // namespace nlqubit
