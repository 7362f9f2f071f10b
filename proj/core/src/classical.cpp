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

#include "optcirc/classical.hpp"

#include <algorithm>
#include <cmath>

namespace optcirc {

SubstochasticMatrix::SubstochasticMatrix(int in_size, int out_size, Eigen::MatrixXd m,
                                         double tolerance)
    : in_size_(in_size), out_size_(out_size), m_(std::move(m)) {
  if (in_size_ < 1 || out_size_ < 1) {
    throw DimensionError("SubstochasticMatrix sizes must be positive");
  }
  if (m_.rows() != out_size_ || m_.cols() != in_size_) {
    throw DimensionError("SubstochasticMatrix shape mismatch: expected " +
                         std::to_string(out_size_) + "x" + std::to_string(in_size_));
  }
  if (m_.minCoeff() < -tolerance) {
    throw Error("SubstochasticMatrix has negative entries");
  }
  if (column_sums().maxCoeff() > 1.0 + tolerance) {
    throw Error("SubstochasticMatrix column sums exceed 1");
  }
}

SubstochasticMatrix SubstochasticMatrix::identity(int size) {
  return SubstochasticMatrix(size, size, Eigen::MatrixXd::Identity(size, size));
}

bool SubstochasticMatrix::is_deterministic(double tolerance) const {
  return (column_sums().array() - 1.0).abs().maxCoeff() <= tolerance;
}

CState::CState(Eigen::VectorXd p, double tolerance) : p_(std::move(p)) {
  if (p_.size() < 1) {
    throw DimensionError("classical state must be nonempty");
  }
  if (p_.minCoeff() < -tolerance) {
    throw Error("classical state has negative entries");
  }
  if (mass() > 1.0 + tolerance) {
    throw Error("classical state mass exceeds 1");
  }
}

bool CState::is_deterministic(double tolerance) const {
  return std::abs(mass() - 1.0) <= tolerance;
}

CEffect::CEffect(Eigen::VectorXd e, double tolerance) : e_(std::move(e)) {
  if (e_.size() < 1) {
    throw DimensionError("classical effect must be nonempty");
  }
  if (e_.minCoeff() < -tolerance || e_.maxCoeff() > 1.0 + tolerance) {
    throw Error("classical effect entries outside [0,1]");
  }
}

CState c_apply(const SubstochasticMatrix& m, const CState& s) {
  if (m.in_size() != s.size()) {
    throw DimensionError("c_apply: matrix expects size " + std::to_string(m.in_size()) +
                         ", state has " + std::to_string(s.size()));
  }
  return CState(m.matrix() * s.vector());
}

SubstochasticMatrix c_compose_seq(const SubstochasticMatrix& f, const SubstochasticMatrix& g) {
  if (f.out_size() != g.in_size()) {
    throw DimensionError("c_compose_seq: inner sizes differ (" +
                         std::to_string(f.out_size()) + " vs " + std::to_string(g.in_size()) + ")");
  }
  return SubstochasticMatrix(f.in_size(), g.out_size(), g.matrix() * f.matrix());
}

SubstochasticMatrix c_compose_par(const SubstochasticMatrix& f, const SubstochasticMatrix& g) {
  const long in = static_cast<long>(f.in_size()) * g.in_size();
  const long out = static_cast<long>(f.out_size()) * g.out_size();
  if (in > kMaxCompositeDimension || out > kMaxCompositeDimension) {
    throw DimensionError("c_compose_par: composite size exceeds cap of " +
                         std::to_string(kMaxCompositeDimension));
  }
  Eigen::MatrixXd m(out, in);
  for (int i = 0; i < f.out_size(); ++i) {
    for (int j = 0; j < f.in_size(); ++j) {
      m.block(i * g.out_size(), j * g.in_size(), g.out_size(), g.in_size()) =
          f.matrix()(i, j) * g.matrix();
    }
  }
  return SubstochasticMatrix(static_cast<int>(in), static_cast<int>(out), std::move(m));
}

CEffect c_deterministic_effect(CSystem system) {
  return CEffect(Eigen::VectorXd::Ones(system.size));
}

double c_pairing(const CEffect& effect, const CState& state, double tolerance) {
  if (effect.size() != state.size()) {
    throw DimensionError("c_pairing: effect size " + std::to_string(effect.size()) +
                         ", state size " + std::to_string(state.size()));
  }
  const double p = effect.vector().dot(state.vector());
  if (p < -tolerance || p > 1.0 + tolerance) {
    throw Error("pairing " + std::to_string(p) + " outside [0,1]: invalid inputs");
  }
  return std::clamp(p, 0.0, 1.0);
}

bool CTest::is_complete(double tolerance) const {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(out_size(), in_size());
  for (const auto& e : events) {
    if (e.in_size() != in_size() || e.out_size() != out_size()) {
      throw DimensionError("CTest events have mismatched sizes");
    }
    sum += e.matrix();
  }
  return (sum.colwise().sum().array() - 1.0).abs().maxCoeff() <= tolerance;
}

// ---------------------------------------------------------------------------

QState embed_to_quantum(const CState& s) {
  CMatrix rho = CMatrix::Zero(s.size(), s.size());
  for (int i = 0; i < s.size(); ++i) {
    rho(i, i) = std::max(s.vector()(i), 0.0);
  }
  return QState(std::move(rho));
}

KrausMap embed_to_quantum(const SubstochasticMatrix& m) {
  std::vector<CMatrix> kraus;
  for (int j = 0; j < m.out_size(); ++j) {
    for (int i = 0; i < m.in_size(); ++i) {
      const double v = m.matrix()(j, i);
      if (v > 0.0) {
        CMatrix k = CMatrix::Zero(m.out_size(), m.in_size());
        k(j, i) = std::sqrt(v);
        kraus.push_back(std::move(k));
      }
    }
  }
  if (kraus.empty()) {
    // The zero map still needs a Kraus representative.
    kraus.push_back(CMatrix::Zero(m.out_size(), m.in_size()));
  }
  return KrausMap(m.in_size(), m.out_size(), std::move(kraus));
}

QEffect embed_to_quantum(const CEffect& e) {
  CMatrix m = CMatrix::Zero(e.size(), e.size());
  for (int i = 0; i < e.size(); ++i) {
    m(i, i) = std::clamp(e.vector()(i), 0.0, 1.0);
  }
  return QEffect(std::move(m));
}

QTest embed_to_quantum(const CTest& t) {
  QTest out;
  out.events.reserve(t.events.size());
  for (const auto& e : t.events) {
    out.events.push_back(embed_to_quantum(e));
  }
  return out;
}

// ---------------------------------------------------------------------------

CState c_point_state(int size, int k) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(size);
  p(k) = 1.0;
  return CState(std::move(p));
}

CState c_uniform_state(int size) {
  return CState(Eigen::VectorXd::Constant(size, 1.0 / size));
}

CTest c_basis_test(int size) {
  CTest test;
  for (int i = 0; i < size; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
    m(i, i) = 1.0;
    test.events.emplace_back(size, size, std::move(m));
  }
  return test;
}

CTest c_deterministic_test(int in_size, int out_size) {
  if (in_size == out_size) {
    return CTest{{SubstochasticMatrix::identity(in_size)}};
  }
  return CTest{{SubstochasticMatrix(
      in_size, out_size, Eigen::MatrixXd::Constant(out_size, in_size, 1.0 / out_size))}};
}

CTest c_measure_prepare_test(int in_size, int out_size) {
  CTest test;
  for (int i = 0; i < in_size; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(out_size, in_size);
    m(0, i) = 1.0;
    test.events.emplace_back(in_size, out_size, std::move(m));
  }
  return test;
}

CTest c_random_complete_test(int in_size, int out_size, int outcomes, std::mt19937_64& rng) {
  if (outcomes < 1) {
    throw Error("c_random_complete_test needs at least one outcome");
  }
  // Random column-stochastic matrix, distributed over the outcomes by
  // per-entry convex weights; the events sum back to the stochastic matrix.
  std::exponential_distribution<double> expo(1.0);
  Eigen::MatrixXd total(out_size, in_size);
  for (int j = 0; j < in_size; ++j) {
    double colsum = 0.0;
    for (int i = 0; i < out_size; ++i) {
      total(i, j) = expo(rng);
      colsum += total(i, j);
    }
    total.col(j) /= colsum;
  }
  std::vector<Eigen::MatrixXd> parts(outcomes, Eigen::MatrixXd::Zero(out_size, in_size));
  for (int i = 0; i < out_size; ++i) {
    for (int j = 0; j < in_size; ++j) {
      Eigen::VectorXd w(outcomes);
      for (int x = 0; x < outcomes; ++x) w(x) = expo(rng);
      w /= w.sum();
      for (int x = 0; x < outcomes; ++x) parts[x](i, j) = total(i, j) * w(x);
    }
  }
  CTest test;
  for (int x = 0; x < outcomes; ++x) {
    test.events.emplace_back(in_size, out_size, std::move(parts[x]));
  }
  return test;
}

CState c_random_state(int size, std::mt19937_64& rng, bool deterministic) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd p(size);
  for (int i = 0; i < size; ++i) p(i) = expo(rng);
  p /= p.sum();
  if (!deterministic) {
    std::uniform_real_distribution<double> mass(0.2, 1.0);
    p *= mass(rng);
  }
  return CState(std::move(p));
}

}  // namespace optcirc
