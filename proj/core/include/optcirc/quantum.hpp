// Copyright 2026 The optcirc Authors
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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "optcirc/common.hpp"

namespace optcirc {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Finite-dimensional system: dimension of the associated Hilbert space.
// The trivial system has d = 1.
struct QSystem {
  int dim = 1;
};

/// A completely positive trace-non-increasing map in Kraus form,
/// ρ ↦ Σ_k K_k ρ K_k†, with K_k of shape out_dim × in_dim.
///
/// Construction verifies Σ_k K_k† K_k ≤ I within the operator tolerance.
/// The map is deterministic (a channel) when the sum equals I.
class KrausMap {
 public:
  KrausMap(int in_dim, int out_dim, std::vector<CMatrix> kraus,
           double tolerance = tol::kOperator);

  static KrausMap identity(int dim);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

  // Σ_k K_k† K_k (the POVM element the map induces on its input).
  CMatrix kraus_sum() const;

  // Choi matrix C[(a,i),(b,j)] = Σ_k K_k(a,i) conj(K_k(b,j)), indexed
  // row-major by (output, input). Positive semidefinite exactly when the
  // map is completely positive, which Kraus form guarantees; exposed so
  // positivity can be verified independently and maps compared as maps.
  CMatrix choi() const;

  bool is_deterministic(double tolerance = tol::kOperator) const;

 private:
  int in_dim_;
  int out_dim_;
  std::vector<CMatrix> kraus_;
};

/// A state: positive operator ρ with Tr ρ ≤ 1; deterministic at unit trace.
class QState {
 public:
  QState(CMatrix rho, double tolerance = tol::kOperator);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  double trace() const { return rho_.trace().real(); }
  bool is_deterministic(double tolerance = tol::kOperator) const;

 private:
  CMatrix rho_;
};

/// An effect: operator E with 0 ≤ E ≤ I, paired with states via Tr[Eρ].
class QEffect {
 public:
  QEffect(CMatrix e, double tolerance = tol::kOperator);

  int dim() const { return static_cast<int>(e_.rows()); }
  const CMatrix& matrix() const { return e_; }

 private:
  CMatrix e_;
};

// ρ ↦ Σ_k K_k ρ K_k†. Throws DimensionError on mismatched dimensions.
QState apply(const KrausMap& map, const QState& state);

// Tr[E ρ], clamped into [0,1] when within tolerance of the bounds; a value
// outside [-tol, 1+tol] signals invalid inputs and throws.
double probability(const QEffect& effect, const QState& state,
                   double tolerance = tol::kOperator);

// Sequential composition g∘f with Kraus set {G_j F_k}.
KrausMap compose_seq(const KrausMap& f, const KrausMap& g);

// Parallel composition f⊗g with Kraus set {F_k ⊗ G_j}; dimensions multiply
// (throws DimensionError past the composite-dimension cap).
KrausMap compose_par(const KrausMap& f, const KrausMap& g);

// Sum of CP maps: Kraus sets concatenated. All maps must share dimensions.
KrausMap coarse_grain(const std::vector<KrausMap>& maps);

bool is_deterministic(const KrausMap& map, double tolerance = tol::kOperator);

// The unique deterministic effect of a system: the trace functional, E = I.
QEffect deterministic_effect(QSystem system);

/// A test: alternative events indexed by a finite outcome space. Complete
/// when the coarse-grained event is deterministic.
struct QTest {
  std::vector<KrausMap> events;

  int size() const { return static_cast<int>(events.size()); }
  int in_dim() const { return events.at(0).in_dim(); }
  int out_dim() const { return events.at(0).out_dim(); }
  bool is_complete(double tolerance = tol::kOperator) const {
    return coarse_grain(events).is_deterministic(tolerance);
  }
};

// ---------------------------------------------------------------------------
// Stock states, effects and tests.

QState basis_state(int dim, int k);
QState pure_state(const CVector& amplitudes);
QState maximally_mixed(int dim);

// Von Neumann measurement in the computational basis (d outcomes).
QTest basis_test(int dim);

// Von Neumann measurement in the Fourier basis, mutually unbiased with the
// computational one (for d=2 this is the X basis).
QTest fourier_test(int dim);

// Qubit von Neumann measurement along the axis tilted by theta from z
// (in the x-z plane): projectors onto cos(θ/2)|0⟩ ± sin(θ/2)|1⟩.
QTest tilted_test(double theta);

// Single-outcome deterministic test: the identity channel when dimensions
// agree, otherwise the replace-with-maximally-mixed channel.
QTest deterministic_test(int in_dim, int out_dim);

// Measure in the computational basis and prepare |0⟩ (in_dim outcomes).
QTest measure_prepare_test(int in_dim, int out_dim);

// Preparation test (in_dim = 1): states ρ_i summing to a unit-trace state.
QTest random_preparation_test(int dim, int outcomes, std::mt19937_64& rng);

// Complete test obtained by partitioning the Kraus operators of a random
// channel built from a random isometry.
QTest random_complete_test(int in_dim, int out_dim, int outcomes,
                           std::mt19937_64& rng);

// Random subnormalized state / random density matrix.
QState random_state(int dim, std::mt19937_64& rng, bool deterministic = false);

// Haar-ish random unitary (QR of a Gaussian matrix).
CMatrix random_unitary(int dim, std::mt19937_64& rng);

}  // namespace optcirc
