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

#include "optcirc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace optcirc {

namespace {

bool approx_hermitian(const CMatrix& m, double tolerance) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double min_eigenvalue(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Operator norm of a Hermitian matrix.
double herm_norm(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

KrausMap::KrausMap(int in_dim, int out_dim, std::vector<CMatrix> kraus, double tolerance)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
  if (in_dim_ < 1 || out_dim_ < 1) {
    throw DimensionError("KrausMap dimensions must be positive");
  }
  if (kraus_.empty()) {
    throw Error("KrausMap needs at least one Kraus operator");
  }
  for (const auto& k : kraus_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_) {
      throw DimensionError("Kraus operator shape mismatch: expected " +
                           std::to_string(out_dim_) + "x" + std::to_string(in_dim_));
    }
  }
  // Trace-non-increasing: Σ K†K ≤ I.
  const CMatrix s = kraus_sum();
  const CMatrix herm = 0.5 * (s + s.adjoint());
  if (max_eigenvalue(herm) > 1.0 + tolerance) {
    throw Error("Kraus set is not trace-non-increasing");
  }
}

KrausMap KrausMap::identity(int dim) {
  return KrausMap(dim, dim, {CMatrix::Identity(dim, dim)});
}

CMatrix KrausMap::kraus_sum() const {
  CMatrix s = CMatrix::Zero(in_dim_, in_dim_);
  for (const auto& k : kraus_) s += k.adjoint() * k;
  return s;
}

CMatrix KrausMap::choi() const {
  const int d = out_dim_ * in_dim_;
  CMatrix choi = CMatrix::Zero(d, d);
  CVector v(d);
  for (const auto& k : kraus_) {
    for (int a = 0; a < out_dim_; ++a) {
      for (int i = 0; i < in_dim_; ++i) {
        v(a * in_dim_ + i) = k(a, i);
      }
    }
    choi += v * v.adjoint();
  }
  return choi;
}

bool KrausMap::is_deterministic(double tolerance) const {
  const CMatrix s = kraus_sum();
  return herm_norm(s - CMatrix::Identity(in_dim_, in_dim_)) <= tolerance;
}

QState::QState(CMatrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw DimensionError("state matrix must be square and nonempty");
  }
  if (!approx_hermitian(rho_, tolerance)) {
    throw Error("state matrix is not Hermitian");
  }
  const CMatrix herm = 0.5 * (rho_ + rho_.adjoint());
  if (min_eigenvalue(herm) < -tolerance) {
    throw Error("state matrix is not positive semidefinite");
  }
  if (trace() > 1.0 + tolerance) {
    throw Error("state trace exceeds 1");
  }
}

bool QState::is_deterministic(double tolerance) const {
  return std::abs(trace() - 1.0) <= tolerance;
}

QEffect::QEffect(CMatrix e, double tolerance) : e_(std::move(e)) {
  if (e_.rows() != e_.cols() || e_.rows() < 1) {
    throw DimensionError("effect matrix must be square and nonempty");
  }
  if (!approx_hermitian(e_, tolerance)) {
    throw Error("effect matrix is not Hermitian");
  }
  const CMatrix herm = 0.5 * (e_ + e_.adjoint());
  if (min_eigenvalue(herm) < -tolerance) {
    throw Error("effect is not positive semidefinite");
  }
  if (max_eigenvalue(herm) > 1.0 + tolerance) {
    throw Error("effect exceeds the identity");
  }
}

QState apply(const KrausMap& map, const QState& state) {
  if (map.in_dim() != state.dim()) {
    throw DimensionError("apply: map expects dimension " + std::to_string(map.in_dim()) +
                         ", state has " + std::to_string(state.dim()));
  }
  CMatrix out = CMatrix::Zero(map.out_dim(), map.out_dim());
  for (const auto& k : map.kraus()) {
    out += k * state.matrix() * k.adjoint();
  }
  return QState(std::move(out));
}

double probability(const QEffect& effect, const QState& state, double tolerance) {
  if (effect.dim() != state.dim()) {
    throw DimensionError("probability: effect dimension " + std::to_string(effect.dim()) +
                         ", state dimension " + std::to_string(state.dim()));
  }
  const double p = (effect.matrix() * state.matrix()).trace().real();
  if (p < -tolerance || p > 1.0 + tolerance) {
    throw Error("probability " + std::to_string(p) + " outside [0,1]: invalid inputs");
  }
  return std::clamp(p, 0.0, 1.0);
}

KrausMap compose_seq(const KrausMap& f, const KrausMap& g) {
  if (f.out_dim() != g.in_dim()) {
    throw DimensionError("compose_seq: inner dimensions differ (" +
                         std::to_string(f.out_dim()) + " vs " + std::to_string(g.in_dim()) + ")");
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(f.kraus().size() * g.kraus().size());
  for (const auto& gk : g.kraus()) {
    for (const auto& fk : f.kraus()) {
      kraus.push_back(gk * fk);
    }
  }
  return KrausMap(f.in_dim(), g.out_dim(), std::move(kraus));
}

KrausMap compose_par(const KrausMap& f, const KrausMap& g) {
  const long in = static_cast<long>(f.in_dim()) * g.in_dim();
  const long out = static_cast<long>(f.out_dim()) * g.out_dim();
  if (in > kMaxCompositeDimension || out > kMaxCompositeDimension) {
    throw DimensionError("compose_par: composite dimension exceeds cap of " +
                         std::to_string(kMaxCompositeDimension));
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(f.kraus().size() * g.kraus().size());
  for (const auto& fk : f.kraus()) {
    for (const auto& gk : g.kraus()) {
      kraus.push_back(kron(fk, gk));
    }
  }
  return KrausMap(static_cast<int>(in), static_cast<int>(out), std::move(kraus));
}

KrausMap coarse_grain(const std::vector<KrausMap>& maps) {
  if (maps.empty()) {
    throw Error("coarse_grain needs at least one map");
  }
  const int in = maps.front().in_dim();
  const int out = maps.front().out_dim();
  std::vector<CMatrix> kraus;
  for (const auto& m : maps) {
    if (m.in_dim() != in || m.out_dim() != out) {
      throw DimensionError("coarse_grain: maps have mismatched dimensions");
    }
    kraus.insert(kraus.end(), m.kraus().begin(), m.kraus().end());
  }
  return KrausMap(in, out, std::move(kraus));
}

bool is_deterministic(const KrausMap& map, double tolerance) {
  return map.is_deterministic(tolerance);
}

QEffect deterministic_effect(QSystem system) {
  return QEffect(CMatrix::Identity(system.dim, system.dim));
}

// ---------------------------------------------------------------------------

QState basis_state(int dim, int k) {
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(k, k) = 1.0;
  return QState(std::move(rho));
}

QState pure_state(const CVector& amplitudes) {
  return QState(amplitudes * amplitudes.adjoint());
}

QState maximally_mixed(int dim) {
  return QState(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

QTest basis_test(int dim) {
  QTest test;
  for (int i = 0; i < dim; ++i) {
    CMatrix k = CMatrix::Zero(dim, dim);
    k(i, i) = 1.0;
    test.events.emplace_back(dim, dim, std::vector<CMatrix>{std::move(k)});
  }
  return test;
}

QTest fourier_test(int dim) {
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
  QTest test;
  for (int j = 0; j < dim; ++j) {
    CVector f(dim);
    for (int k = 0; k < dim; ++k) {
      const double phase = 2.0 * std::numbers::pi * j * k / dim;
      f(k) = Complex(std::cos(phase), std::sin(phase)) * inv_sqrt;
    }
    CMatrix proj = f * f.adjoint();
    test.events.emplace_back(dim, dim, std::vector<CMatrix>{std::move(proj)});
  }
  return test;
}

QTest tilted_test(double theta) {
  CVector plus(2), minus(2);
  plus << std::cos(theta / 2), std::sin(theta / 2);
  minus << -std::sin(theta / 2), std::cos(theta / 2);
  QTest test;
  test.events.emplace_back(2, 2, std::vector<CMatrix>{plus * plus.adjoint()});
  test.events.emplace_back(2, 2, std::vector<CMatrix>{minus * minus.adjoint()});
  return test;
}

QTest deterministic_test(int in_dim, int out_dim) {
  if (in_dim == out_dim) {
    return QTest{{KrausMap::identity(in_dim)}};
  }
  // Replace-with-maximally-mixed channel: ρ ↦ Tr[ρ] I / out_dim.
  const double scale = 1.0 / std::sqrt(static_cast<double>(out_dim));
  std::vector<CMatrix> kraus;
  for (int j = 0; j < out_dim; ++j) {
    for (int k = 0; k < in_dim; ++k) {
      CMatrix op = CMatrix::Zero(out_dim, in_dim);
      op(j, k) = scale;
      kraus.push_back(std::move(op));
    }
  }
  return QTest{{KrausMap(in_dim, out_dim, std::move(kraus))}};
}

QTest measure_prepare_test(int in_dim, int out_dim) {
  QTest test;
  for (int i = 0; i < in_dim; ++i) {
    CMatrix k = CMatrix::Zero(out_dim, in_dim);
    k(0, i) = 1.0;
    test.events.emplace_back(in_dim, out_dim, std::vector<CMatrix>{std::move(k)});
  }
  return test;
}

CMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  // Fix the phase ambiguity so the distribution does not favor R's signs.
  CMatrix r = q.adjoint() * g;
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

QState random_state(int dim, std::mt19937_64& rng, bool deterministic) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  if (!deterministic) {
    std::uniform_real_distribution<double> mass(0.2, 1.0);
    rho *= mass(rng);
  }
  return QState(std::move(rho));
}

QTest random_preparation_test(int dim, int outcomes, std::mt19937_64& rng) {
  return random_complete_test(1, dim, outcomes, rng);
}

QTest random_complete_test(int in_dim, int out_dim, int outcomes, std::mt19937_64& rng) {
  if (outcomes < 1) {
    throw Error("random_complete_test needs at least one outcome");
  }
  // Random isometry V : in → out ⊗ env, then split the env branches
  // K_e = (I ⊗ ⟨e|) V into `outcomes` groups. The coarse graining is the
  // channel itself, so the test is complete by construction.
  const int min_env = (in_dim + out_dim - 1) / out_dim;
  const int env = std::max(outcomes, min_env);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(out_dim * env, in_dim);
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix v = qr.householderQ() * CMatrix::Identity(out_dim * env, in_dim);

  // Random partition of the env branches into non-empty consecutive groups.
  std::vector<int> cuts{0, env};
  std::uniform_int_distribution<int> pick(1, env - 1);
  while (static_cast<int>(cuts.size()) < outcomes + 1) {
    int c = pick(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());

  QTest test;
  for (int x = 0; x < outcomes; ++x) {
    std::vector<CMatrix> kraus;
    for (int e = cuts[x]; e < cuts[x + 1]; ++e) {
      kraus.push_back(v.middleRows(e * out_dim, out_dim));
    }
    test.events.emplace_back(in_dim, out_dim, std::move(kraus));
  }
  return test;
}

}  // namespace optcirc
