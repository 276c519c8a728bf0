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

#include "nlqubit/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace nlqubit {
namespace {

constexpr double kLabelTol = 1e-9;
constexpr double kTieTol = 1e-10;

// e^{-i arg W}, or zero when W vanishes.
Complex aligned_phase(Complex w) {
  const double m = std::abs(w);
  return m > 0.0 ? std::conj(w) / m : Complex{};
}

Optimum make_optimum(const FidelityFunctional& f, double x, double y) {
  Optimum o;
  o.best = {x, y, std::sqrt(x * y) * aligned_phase(f.w)};
  o.value = f.evaluate(o.best);
  o.chi = o.best.z == Complex{} ? 0.0 : std::arg(o.best.z);
  o.regime = classify(o.best);
  return o;
}

struct Candidate {
  double x;
  double y;
  double gain;  // value above f.v
};

// Maximizes fixed + free*s^2 + 2*mw*s over s in [0, 1].
double best_face_coordinate(double free, double mw) {
  if (free >= 0.0) return 1.0;
  return std::min(1.0, mw / -free);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::identity: return "identity";
    case Regime::pi_rotation: return "pi_rotation";
    case Regime::bit_flip: return "bit_flip";
    case Regime::chi_rotation: return "chi_rotation";
    case Regime::boundary_mixed: return "boundary_mixed";
  }
  return "unknown";
}

Regime classify(const GramParams& g) {
  if (std::abs(g.x - 1.0) <= kLabelTol && std::abs(g.y - 1.0) <= kLabelTol) {
    if (std::abs(g.z - 1.0) <= kLabelTol) return Regime::identity;
    if (std::abs(g.z + 1.0) <= kLabelTol) return Regime::pi_rotation;
    if (std::abs(std::abs(g.z) - 1.0) <= kLabelTol) return Regime::chi_rotation;
    return Regime::boundary_mixed;
  }
  if (g.x <= kLabelTol && g.y <= kLabelTol && std::abs(g.z) <= kLabelTol) {
    return Regime::bit_flip;
  }
  return Regime::boundary_mixed;
}

Optimum maximize(const FidelityFunctional& f) {
  const double mw = std::abs(f.w);
  const double s = best_face_coordinate(f.y_coef, mw);  // face x = 1, y = s^2
  const double t = best_face_coordinate(f.x_coef, mw);  // face y = 1, x = t^2
  const std::array<Candidate, 3> candidates = {{
      {0.0, 0.0, 0.0},
      {1.0, s * s, f.x_coef + f.y_coef * s * s + 2.0 * mw * s},
      {t * t, 1.0, f.y_coef + f.x_coef * t * t + 2.0 * mw * t},
  }};
  Candidate best = candidates[0];
  for (const auto& c : candidates) {
    if (c.gain > best.gain + kTieTol ||
        (std::abs(c.gain - best.gain) <= kTieTol && c.x + c.y < best.x + best.y)) {
      best = c;
    }
  }
  return make_optimum(f, best.x, best.y);
}

double optimal_chi(const FidelityFunctional& f) {
  const Optimum o = maximize(f);
  if (std::abs(o.best.x - 1.0) > kLabelTol || std::abs(o.best.y - 1.0) > kLabelTol) {
    throw std::domain_error("optimal_chi: optimum is not at x = y = 1");
  }
  if (f.w == Complex{}) return 0.0;
  const double chi = -std::arg(f.w);
  return chi <= -kPi ? chi + 2.0 * kPi : chi;
}

Optimum brute_force(const FidelityFunctional& f, int n_grid) {
  if (n_grid < 50) throw std::invalid_argument("brute_force: n_grid must be >= 50");
  const double mw = std::abs(f.w);
  // Amplitude coordinates a = sqrt(x), b = sqrt(y) make the gain a smooth
  // quadratic form, so grid error shrinks with the square of the spacing.
  auto gain = [&](double a, double b) {
    return f.x_coef * a * a + f.y_coef * b * b + 2.0 * mw * a * b;
  };
  double ba = 0.0;
  double bb = 0.0;
  double bg = gain(0.0, 0.0);
  double a_lo = 0.0;
  double a_hi = 1.0;
  double b_lo = 0.0;
  double b_hi = 1.0;
  for (int round = 0; round < 4; ++round) {
    for (int i = 0; i < n_grid; ++i) {
      for (int j = 0; j < n_grid; ++j) {
        const double a = a_lo + (a_hi - a_lo) * i / (n_grid - 1);
        const double b = b_lo + (b_hi - b_lo) * j / (n_grid - 1);
        const double g = gain(a, b);
        if (g > bg) {
          bg = g;
          ba = a;
          bb = b;
        }
      }
    }
    // Zoom onto the neighbouring cells of the current winner.
    const double ha = (a_hi - a_lo) / (n_grid - 1);
    const double hb = (b_hi - b_lo) / (n_grid - 1);
    a_lo = std::max(0.0, ba - ha);
    a_hi = std::min(1.0, ba + ha);
    b_lo = std::max(0.0, bb - hb);
    b_hi = std::min(1.0, bb + hb);
  }
  return make_optimum(f, ba * ba, bb * bb);
}

std::optional<double> find_transition(const std::function<bool(double)>& pred, double lo,
                                      double hi) {
  const bool at_lo = pred(lo);
  if (at_lo == pred(hi)) return std::nullopt;
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> find_crossover(const std::function<double(double)>& f,
                                     const std::function<double(double)>& g, double lo, double hi,
                                     double threshold) {
  return find_transition(
      [&](double x) {
        const double d = f(x) - g(x) - threshold;
        if (!std::isfinite(d)) throw NumericalError("find_crossover: non-finite difference");
        return d > 0.0;
      },
      lo, hi);
}

}  // namespace nlqubit
