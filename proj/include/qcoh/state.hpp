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

#ifndef QCOH_STATE_HPP
#define QCOH_STATE_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Eigenvalues>

#include "qcoh/basis.hpp"

namespace qcoh {

/// Bloch coordinates x_i = Tr(rho X_i) of a d-level state, i = 1 .. d^2 - 1
/// stored 0-based. Coordinates 0 .. d^2 - d - 1 pair up as (u, v) per
/// off-diagonal index pair; the trailing d - 1 are diagonal.
template <typename Real>
struct BlochVector {
  Index d = 0;
  RVector<Real> x;
};

using BlochVectord = BlochVector<double>;

/// Family rho^n = I/d + (chi/2) n.X of states sharing a Bloch direction.
template <typename Real>
struct StateFamily {
  Index d = 0;
  RVector<Real> n;
  Real chi = 0;
};

using StateFamilyd = StateFamily<double>;

/// Member of a family with unit l1 coherence. The state may be formal
/// (not positive semidefinite); `physical` records the PSD check.
template <typename Real>
struct ProbeState {
  RVector<Real> n;
  Real chi_p = 0;
  CMatrix<Real> state;
  bool physical = false;
  Real min_eigenvalue = 0;
};

using ProbeStated = ProbeState<double>;

/// g(n) = sum_r sqrt(n_{2r}^2 + n_{2r+1}^2) over the off-diagonal pairs.
template <typename Derived>
typename Derived::Scalar coherence_weight(const Eigen::MatrixBase<Derived>& v, Index d) {
  using Real = typename Derived::Scalar;
  if (v.size() != d * d - 1) throw DimensionMismatch("coherence_weight: vector length must be d^2 - 1");
  Real g = 0;
  for (Index r = 0; r < pair_count(d); ++r) g += std::hypot(v(2 * r), v(2 * r + 1));
  return g;
}

/// Smallest eigenvalue of the Hermitian part of m.
template <typename Derived>
auto min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Plain = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Plain h = (m + m.adjoint()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<Plain> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Throws unless rho is Hermitian, unit trace, and PSD within tolerance.
template <typename Derived>
void validate_density(const Eigen::MatrixBase<Derived>& rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) throw InvalidDimension("density matrix must be square with d >= 2");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::hermitian) throw NonHermitian("density matrix is not Hermitian");
  if (std::abs(rho.trace() - typename Derived::Scalar(1)) > tol::hermitian)
    throw UnphysicalState("density matrix trace differs from 1", 0.0);
  const double lam = static_cast<double>(min_eigenvalue(rho));
  if (lam < tol::psd) throw UnphysicalState("density matrix is not positive semidefinite", lam);
}

template <typename Derived>
bool is_density(const Eigen::MatrixBase<Derived>& rho) {
  try {
    validate_density(rho);
  } catch (const Error&) {
    return false;
  }
  return true;
}

template <typename Derived, typename Real>
BlochVector<Real> bloch_decompose(const Eigen::MatrixBase<Derived>& rho, const GeneratorBasis<Real>& basis) {
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim())
    throw DimensionMismatch("bloch_decompose: state and basis dimensions differ");
  BlochVector<Real> out{basis.dim(), RVector<Real>(basis.size())};
  for (Index i = 0; i < basis.size(); ++i) {
    // Tr(rho X) without forming the product.
    const std::complex<Real> t = rho.cwiseProduct(basis[i].transpose()).sum();
    if (std::abs(t.imag()) > Real(tol::hermitian)) throw NonHermitian("bloch_decompose: input is not Hermitian");
    out.x(i) = t.real();
  }
  return out;
}

/// rho = I/d + (1/2) sum_i x_i X_i. With `validate`, a non-PSD result throws
/// UnphysicalState carrying the most negative eigenvalue.
template <typename Derived, typename Real>
CMatrix<Real> bloch_compose(const Eigen::MatrixBase<Derived>& x, const GeneratorBasis<Real>& basis, bool validate = false) {
  if (x.size() != basis.size()) throw DimensionMismatch("bloch_compose: vector length must be d^2 - 1");
  const Index d = basis.dim();
  CMatrix<Real> rho = CMatrix<Real>::Identity(d, d) / std::complex<Real>(Real(d), 0);
  for (Index i = 0; i < basis.size(); ++i)
    if (x(i) != Real(0)) rho += basis[i] * std::complex<Real>(x(i) / Real(2), 0);
  if (validate) {
    const Real lam = min_eigenvalue(rho);
    if (lam < Real(tol::psd)) throw UnphysicalState("bloch_compose: state is not positive semidefinite", double(lam));
  }
  return rho;
}

template <typename Real>
CMatrix<Real> bloch_compose(const BlochVector<Real>& v, const GeneratorBasis<Real>& basis, bool validate = false) {
  if (v.d != basis.dim()) throw DimensionMismatch("bloch_compose: vector and basis dimensions differ");
  return bloch_compose(v.x, basis, validate);
}

/// Upper bound on |chi| for physical family members, sqrt(2(d-1)/d).
inline double max_family_chi(Index d) { return std::sqrt(2.0 * double(d - 1) / double(d)); }

template <typename Real>
void check_family(const StateFamily<Real>& fam) {
  if (fam.d < 2) throw InvalidDimension("state family: dimension must be >= 2");
  if (fam.n.size() != fam.d * fam.d - 1) throw DimensionMismatch("state family: direction length must be d^2 - 1");
  if (std::abs(fam.n.norm() - Real(1)) > Real(tol::construction)) throw Error("state family: direction is not a unit vector");
}

template <typename Real>
CMatrix<Real> family_member(const StateFamily<Real>& fam, const GeneratorBasis<Real>& basis, bool validate = false) {
  check_family(fam);
  if (validate && std::abs(double(fam.chi)) > max_family_chi(fam.d) + tol::construction)
    throw UnphysicalState("family_member: |chi| exceeds the purity bound", 0.0);
  return bloch_compose(RVector<Real>(fam.chi * fam.n), basis, validate);
}

template <typename Derived, typename Real>
ProbeState<Real> probe_state(const Eigen::MatrixBase<Derived>& n, const GeneratorBasis<Real>& basis) {
  if (n.size() != basis.size()) throw DimensionMismatch("probe_state: direction length must be d^2 - 1");
  const Real g = coherence_weight(n, basis.dim());
  if (g <= Real(1e-12)) throw NoProbe("probe_state: direction carries no coherence");
  ProbeState<Real> p;
  p.n = n;
  p.chi_p = Real(1) / g;
  p.state = bloch_compose(RVector<Real>(p.chi_p * p.n), basis);
  p.min_eigenvalue = min_eigenvalue(p.state);
  p.physical = p.min_eigenvalue >= Real(tol::psd);
  return p;
}

// Sampling with deterministic seeds; defined in state.cpp.
CMatrixd random_state(Index d, std::uint64_t seed);
StateFamilyd random_family(Index d, std::uint64_t seed);

}  // namespace qcoh

#endif  // QCOH_STATE_HPP
