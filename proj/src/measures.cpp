// Copyright 2026 The qcoh Authors
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

#include "qcoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcoh {

namespace {

void require_two_qubit(const CMatrixd& rho, const char* what) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionMismatch(std::string(what) + ": two-qubit (4x4) state required");
}

CMatrixd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  CMatrixd out(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  return out;
}

double collapse_distance(const CMatrixd& m, const Eigen::Vector3d& a) {
  return (m - projective_collapse(m, MeasurementDirection(a))).squaredNorm();
}

// Orthonormal pair spanning the tangent plane at unit vector a.
std::array<Eigen::Vector3d, 2> tangent_frame(const Eigen::Vector3d& a) {
  const Eigen::Vector3d seed = std::abs(a.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - a * a.dot(seed)).normalized();
  return {e1, a.cross(e1)};
}

}  // namespace

CorrelationMatrix correlation_matrix(const CMatrixd& rho) {
  require_two_qubit(rho, "correlation_matrix");
  CorrelationMatrix out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      out.t3(i - 1, j - 1) = (rho * kron2(pauli_matrix(i), pauli_matrix(j))).trace().real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(out.t3.transpose() * out.t3, Eigen::EigenvaluesOnly);
  for (int k = 0; k < 3; ++k) out.eigs[static_cast<std::size_t>(k)] = std::max(0.0, es.eigenvalues()(2 - k));
  return out;
}

CorrelationMeasures correlation_measures(const CMatrixd& rho) {
  const auto [e1, e2, e3] = correlation_matrix(rho).eigs;
  CorrelationMeasures out;
  out.bell_max = 2.0 * std::sqrt(e1 + e2);
  out.rsp_fidelity = (e2 + e3) / 2.0;
  out.teleport_n = std::sqrt(e1 + e2 + e3);
  out.teleport_fidelity = 0.5 + out.teleport_n / 6.0;
  return out;
}

std::array<Eigen::Vector3d, 2> local_bloch_vectors(const CMatrixd& rho) {
  require_two_qubit(rho, "local_bloch_vectors");
  std::array<Eigen::Vector3d, 2> out;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  for (int i = 1; i <= 3; ++i) {
    out[0](i - 1) = (rho * kron2(pauli_matrix(i), id)).trace().real();
    out[1](i - 1) = (rho * kron2(id, pauli_matrix(i))).trace().real();
  }
  return out;
}

MeasurementDirection::MeasurementDirection(const Eigen::Vector3d& a) {
  const double n = a.norm();
  if (n < 1e-12) throw Error("measurement direction must be nonzero");
  a_ = a / n;
}

MeasurementDirection MeasurementDirection::from_angles(double theta, double phi) {
  return MeasurementDirection(Eigen::Vector3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
}

std::array<Eigen::Matrix2cd, 2> MeasurementDirection::projectors() const {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  for (int i = 1; i <= 3; ++i) s += a_(i - 1) * pauli_matrix(i);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return {(id + s) / 2.0, (id - s) / 2.0};
}

CMatrixd projective_collapse(const CMatrixd& rho, const MeasurementDirection& dir) {
  require_two_qubit(rho, "projective_collapse");
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  CMatrixd out = CMatrixd::Zero(4, 4);
  for (const auto& p : dir.projectors()) {
    const CMatrixd big = kron2(p, id);
    out += big * rho * big;
  }
  return out;
}

DirectionOptimum optimize_collapse_distance(const CMatrixd& m, bool maximize, const SphereSearch& search) {
  require_two_qubit(m, "optimize_collapse_distance");
  const double sign = maximize ? -1.0 : 1.0;
  auto cost = [&](const Eigen::Vector3d& a) { return sign * collapse_distance(m, a); };

  // The objective is even in a, so the upper hemisphere suffices.
  const double pi = std::numbers::pi;
  Eigen::Vector3d best = Eigen::Vector3d::UnitZ();
  double best_cost = cost(best);
  for (int i = 0; i < search.theta_steps; ++i) {
    const double theta = (i + 0.5) * (pi / 2) / search.theta_steps;
    for (int j = 0; j < search.phi_steps; ++j) {
      const double phi = j * 2 * pi / search.phi_steps;
      const Eigen::Vector3d a = MeasurementDirection::from_angles(theta, phi).vector();
      const double c = cost(a);
      if (c < best_cost) {
        best_cost = c;
        best = a;
      }
    }
  }

  // Compass search on the tangent plane, halving the step until it drops below tolerance.
  double step = pi / search.phi_steps;
  while (step > search.direction_tol) {
    bool moved = false;
    const auto frame = tangent_frame(best);
    for (const auto& e : frame) {
      for (double s : {1.0, -1.0}) {
        const Eigen::Vector3d trial = (best + s * step * e).normalized();
        const double c = cost(trial);
        if (c < best_cost) {
          best_cost = c;
          best = trial;
          moved = true;
        }
      }
    }
    if (!moved) step /= 2;
  }
  return {sign * best_cost, best};
}

double geometric_discord2(const CMatrixd& rho, const SphereSearch& search) {
  return 2.0 * optimize_collapse_distance(rho, false, search).value;
}

double min2(const CMatrixd& rho, const SphereSearch& search) {
  return 2.0 * optimize_collapse_distance(rho, true, search).value;
}

double hellinger_discord(const CMatrixd& rho, const SphereSearch& search) {
  return optimize_collapse_distance(hermitian_sqrt(rho), false, search).value;
}

CMatrixd hermitian_sqrt(const CMatrixd& m) {
  const CMatrixd h = (m + m.adjoint()) / Complex(2, 0);
  Eigen::SelfAdjointEigenSolver<CMatrixd> es(h);
  RVectord lam = es.eigenvalues();
  if (lam.minCoeff() < tol::psd) throw UnphysicalState("hermitian_sqrt: matrix is not positive semidefinite", lam.minCoeff());
  lam = lam.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qcoh
