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

#ifndef QCOH_MEASURES_HPP
#define QCOH_MEASURES_HPP

#include <array>

#include "qcoh/state.hpp"

namespace qcoh {

/// l1 norm of coherence: sum of |rho_ij| over i != j in the computational basis.
template <typename Derived>
auto l1_from_density(const Eigen::MatrixBase<Derived>& rho) {
  return rho.cwiseAbs().sum() - rho.diagonal().cwiseAbs().sum();
}

/// l1 norm of coherence from Bloch coordinates. Diagonal generators do not contribute.
template <typename Real>
Real l1_from_bloch(const BlochVector<Real>& v) {
  return coherence_weight(v.x, v.d);
}

/// Tr(rho^2) - 1/d.
template <typename Derived>
auto purity_measure(const Eigen::MatrixBase<Derived>& rho) {
  using RealScalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return (rho * rho).trace().real() - RealScalar(1) / RealScalar(rho.rows());
}

/// |x|^2 / 2; equal to purity_measure of the composed state.
template <typename Real>
Real purity_from_bloch(const BlochVector<Real>& v) {
  return v.x.squaredNorm() / Real(2);
}

// ---------------------------------------------------------------------------
// Two-qubit measures. States are 4x4 in the qubit-A (x) qubit-B ordering.

struct CorrelationMatrix {
  Eigen::Matrix3d t3;
  /// Eigenvalues of T^T T, descending.
  std::array<double, 3> eigs{};
};

struct CorrelationMeasures {
  double bell_max = 0;
  double rsp_fidelity = 0;
  double teleport_n = 0;
  double teleport_fidelity = 0;
};

CorrelationMatrix correlation_matrix(const CMatrixd& rho);
CorrelationMeasures correlation_measures(const CMatrixd& rho);

/// Local Bloch vectors a_i = Tr(rho sigma_i (x) I) and b_j = Tr(rho I (x) sigma_j).
std::array<Eigen::Vector3d, 2> local_bloch_vectors(const CMatrixd& rho);

/// Unit direction on the Bloch sphere of subsystem A.
class MeasurementDirection {
 public:
  explicit MeasurementDirection(const Eigen::Vector3d& a);
  static MeasurementDirection from_angles(double theta, double phi);
  const Eigen::Vector3d& vector() const { return a_; }
  /// Projectors (I + a.sigma)/2 and (I - a.sigma)/2.
  std::array<Eigen::Matrix2cd, 2> projectors() const;

 private:
  Eigen::Vector3d a_;
};

/// sum_k (Pi_k (x) I) rho (Pi_k (x) I) for the two-outcome measurement along `dir`.
CMatrixd projective_collapse(const CMatrixd& rho, const MeasurementDirection& dir);

/// Spherical grid resolution and refinement target for the measurement optimizers.
struct SphereSearch {
  int theta_steps = 32;
  int phi_steps = 64;
  double direction_tol = 1e-6;
};

struct DirectionOptimum {
  double value = 0;
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
};

/// min or max over measurement directions of ||m - Pi(m)||_2^2.
DirectionOptimum optimize_collapse_distance(const CMatrixd& m, bool maximize, const SphereSearch& search = {});

/// 2 min ||rho - Pi(rho)||_2^2
double geometric_discord2(const CMatrixd& rho, const SphereSearch& search = {});
/// 2 max ||rho - Pi(rho)||_2^2
double min2(const CMatrixd& rho, const SphereSearch& search = {});
/// min ||sqrt(rho) - Pi(sqrt(rho))||_2^2
double hellinger_discord(const CMatrixd& rho, const SphereSearch& search = {});

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything more negative throws UnphysicalState.
CMatrixd hermitian_sqrt(const CMatrixd& m);

}  // namespace qcoh

#endif  // QCOH_MEASURES_HPP
