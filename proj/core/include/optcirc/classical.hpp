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
#include "optcirc/quantum.hpp"

namespace optcirc {

// Classical system: a finite set of configurations.
struct CSystem {
  int size = 1;
};

/// A substochastic Markov matrix: entries ≥ 0, column sums ≤ 1. Columns
/// index input configurations, so states are column vectors and sequential
/// composition is the plain matrix product. Deterministic when every column
/// sums to 1.
class SubstochasticMatrix {
 public:
  SubstochasticMatrix(int in_size, int out_size, Eigen::MatrixXd m,
                      double tolerance = tol::kOperator);

  static SubstochasticMatrix identity(int size);

  int in_size() const { return in_size_; }
  int out_size() const { return out_size_; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::RowVectorXd column_sums() const { return m_.colwise().sum(); }
  bool is_deterministic(double tolerance = tol::kOperator) const;

 private:
  int in_size_;
  int out_size_;
  Eigen::MatrixXd m_;
};

/// A classical state: subnormalized probability vector.
class CState {
 public:
  explicit CState(Eigen::VectorXd p, double tolerance = tol::kOperator);

  int size() const { return static_cast<int>(p_.size()); }
  const Eigen::VectorXd& vector() const { return p_; }
  double mass() const { return p_.sum(); }
  bool is_deterministic(double tolerance = tol::kOperator) const;

 private:
  Eigen::VectorXd p_;
};

/// A classical effect: covector with entries in [0,1].
class CEffect {
 public:
  explicit CEffect(Eigen::VectorXd e, double tolerance = tol::kOperator);

  int size() const { return static_cast<int>(e_.size()); }
  const Eigen::VectorXd& vector() const { return e_; }

 private:
  Eigen::VectorXd e_;
};

CState c_apply(const SubstochasticMatrix& m, const CState& s);

// g after f: matrix product G·F.
SubstochasticMatrix c_compose_seq(const SubstochasticMatrix& f, const SubstochasticMatrix& g);

// Kronecker product, first factor most significant.
SubstochasticMatrix c_compose_par(const SubstochasticMatrix& f, const SubstochasticMatrix& g);

// The all-ones covector; pairing with a state gives its total mass.
CEffect c_deterministic_effect(CSystem system);

double c_pairing(const CEffect& effect, const CState& state,
                 double tolerance = tol::kOperator);

/// A classical test; complete when the summed events are column-stochastic.
struct CTest {
  std::vector<SubstochasticMatrix> events;

  int size() const { return static_cast<int>(events.size()); }
  int in_size() const { return events.at(0).in_size(); }
  int out_size() const { return events.at(0).out_size(); }
  bool is_complete(double tolerance = tol::kOperator) const;
};

// ---------------------------------------------------------------------------
// Embedding into the quantum backend: states become diagonal density
// matrices, maps M become the Kraus set {√M_ji |j⟩⟨i| : M_ji > 0}. The
// embedding preserves composition and all probabilities.

QState embed_to_quantum(const CState& s);
KrausMap embed_to_quantum(const SubstochasticMatrix& m);
QEffect embed_to_quantum(const CEffect& e);
QTest embed_to_quantum(const CTest& t);

// ---------------------------------------------------------------------------
// Stock classical states and tests.

CState c_point_state(int size, int k);
CState c_uniform_state(int size);

// Read the configuration (identity rows split per outcome; out=in).
CTest c_basis_test(int size);

// Single deterministic event: identity when sizes agree, otherwise
// replace-with-uniform.
CTest c_deterministic_test(int in_size, int out_size);

// Read the configuration, then reset to configuration 0.
CTest c_measure_prepare_test(int in_size, int out_size);

// Complete test from a random column-stochastic matrix split by rows.
CTest c_random_complete_test(int in_size, int out_size, int outcomes,
                             std::mt19937_64& rng);

CState c_random_state(int size, std::mt19937_64& rng, bool deterministic = false);

}  // namespace optcirc
