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

#include <cstddef>
#include <vector>

#include "nlqubit/bloch.hpp"

namespace nlqubit {

// ---------------------------------------------------------------------------
// Measurement-based preparations. Each returns the state prepared after
// measuring `input` (in the guess basis or the computational basis) and
// preparing a state conditioned on the outcome.
// ---------------------------------------------------------------------------

/// Guess-basis measurement; prepare the observed basis state.
DensityMatrix prep_rho1(const BlochAngles& input, const BlochAngles& guess);
/// Guess-basis measurement; prepare the opposite basis state.
DensityMatrix prep_rho2(const BlochAngles& input, const BlochAngles& guess);
/// Computational-basis measurement; prepare the observed basis state.
DensityMatrix prep_sigma1(const BlochAngles& input);
/// Computational-basis measurement; prepare the opposite basis state.
DensityMatrix prep_sigma2(const BlochAngles& input);

/// Guess-basis measurement followed by a z rotation of the prepared state:
/// the guessed state (mu, nu) is prepared as (mu, nu + beta) and its
/// orthogonal as (mu - pi, nu - beta).
///
/// The guess must lie in the upper hemisphere; guess.theta > pi/2 throws
/// std::invalid_argument.
DensityMatrix prep_rho3(const BlochAngles& input, const BlochAngles& guess, double beta);

// ---------------------------------------------------------------------------
// Quantum scheme: a unitary on qubit + ancilla (ancilla starts in a fixed
// state Q) acting as
//
//   |0>|Q>  ->  |1>|A> + |0>|B>
//   |1>|Q>  ->  |0>|A~> + |1>|B~>
//
// followed by a partial trace over the ancilla.
// ---------------------------------------------------------------------------

/// Ancilla vectors A, A~, B, B~ of a common dimension. Unitarity requires
/// |A|^2 + |B|^2 = 1, |A~|^2 + |B~|^2 = 1 and <B|A~> + <A|B~> = 0.
struct AncillaVectors {
  std::vector<Complex> a;
  std::vector<Complex> a_tilde;
  std::vector<Complex> b;
  std::vector<Complex> b_tilde;

  std::size_t dim() const { return a.size(); }

  /// Largest violation among the three unitarity conditions; infinity when
  /// the four vectors do not share one positive dimension.
  double constraint_violation() const;
  /// Throws std::invalid_argument when constraint_violation() > tol.
  void validate(double tol = 1e-10) const;
};

/// Reduced channel coordinates x = |B|^2, y = |B~|^2, z = <B|B~>. The
/// sphere-averaged fidelity of any channel depends on these only.
struct GramParams {
  double x = 0.0;
  double y = 0.0;
  Complex z{};

  /// x, y in [0, 1] and |z|^2 <= xy, each within tol.
  bool is_feasible(double tol = 1e-12) const;
};

/// Inner products of a validated channel, precomputed once so the output
/// state can be evaluated cheaply inside quadrature loops.
struct ChannelOverlaps {
  double a_norm2 = 0.0;        // |A|^2
  double a_tilde_norm2 = 0.0;  // |A~|^2
  double b_norm2 = 0.0;        // |B|^2
  double b_tilde_norm2 = 0.0;  // |B~|^2
  Complex a_b{};               // <A|B>
  Complex bt_at{};             // <B~|A~>
  Complex a_at{};              // <A|A~>
  Complex bt_b{};              // <B~|B>
  Complex b_at{};              // <B|A~>
  Complex a_bt{};              // <A|B~>
};

/// Validates `ch` and collects its inner products.
ChannelOverlaps overlaps_of(const AncillaVectors& ch);

/// Output density matrix after the ancilla is traced out, written out term
/// by term in cos(theta/2), sin(theta/2) and e^{+-i phi}.
DensityMatrix quantum_output(const BlochAngles& input, const ChannelOverlaps& ov);
/// Validates `ch` (std::invalid_argument on violation) and evaluates the output.
DensityMatrix quantum_output(const BlochAngles& input, const AncillaVectors& ch);

/// The universal-NOT vectors on a two-qubit (dim 4) ancilla, basis order
/// |00>, |01>, |10>, |11>.
AncillaVectors buzek_unot();

/// Identity channel: B = B~ = e_1, A = A~ = 0.
AncillaVectors identity_channel();
/// Pauli-X channel: A = A~ = e_1, B = B~ = 0.
AncillaVectors bit_flip_channel();

GramParams gram_of(const AncillaVectors& ch);

/// Canonical dim-4 realization of a Gram point: B = sqrt(x) e1,
/// B~ = (z/sqrt(x)) e1 + sqrt(y - |z|^2/x) e2, A = sqrt(1-x) e3,
/// A~ = sqrt(1-y) e4 (B~ = sqrt(y) e2 when x = 0).
///
/// Throws std::invalid_argument for infeasible points, including x = 0 with
/// z != 0.
AncillaVectors dilate(const GramParams& g);

}  // namespace nlqubit
