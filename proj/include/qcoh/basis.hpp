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

#ifndef QCOH_BASIS_HPP
#define QCOH_BASIS_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcoh/core.hpp"

namespace qcoh {

/// Number of off-diagonal index pairs j < k of a d-level system.
inline Index pair_count(Index d) { return (d * d - d) / 2; }

/// Position r (0-based) of the pair (j, k), 0 <= j < k < d, in lexicographic
/// order. The Bloch coordinates 2r and 2r + 1 hold the u/v components of
/// that pair.
inline Index pair_index(Index j, Index k, Index d) {
  if (j < 0 || k >= d || j >= k) throw InvalidDimension("pair_index: require 0 <= j < k < d");
  // pairs before row j: sum_{a<j} (d - 1 - a)
  return j * (2 * d - j - 1) / 2 + (k - j - 1);
}

/// Inverse of pair_index.
inline std::pair<Index, Index> pair_of(Index r, Index d) {
  if (r < 0 || r >= pair_count(d)) throw InvalidDimension("pair_of: pair index out of range");
  Index j = 0;
  Index row = d - 1;
  while (r >= row) {
    r -= row;
    ++j;
    --row;
  }
  return {j, j + 1 + r};
}

/// Generalized Gell-Mann generators of SU(d), normalized to Tr(X_i X_j) = 2 delta_ij.
///
/// Ordering: u_12, v_12, u_13, v_13, ..., u_{d-1,d}, v_{d-1,d}, w_1, ..., w_{d-1}.
/// The first d^2 - d elements are off-diagonal; the last d - 1 are diagonal.
template <typename Real>
class GeneratorBasis {
 public:
  using Matrix = CMatrix<Real>;

  explicit GeneratorBasis(Index d) : d_(d) {
    if (d < 2) throw InvalidDimension("gellmann_basis: dimension must be >= 2");
    using C = std::complex<Real>;
    elements_.reserve(static_cast<std::size_t>(d * d - 1));
    for (Index j = 0; j < d; ++j) {
      for (Index k = j + 1; k < d; ++k) {
        Matrix u = Matrix::Zero(d, d);
        u(j, k) = u(k, j) = C(1, 0);
        Matrix v = Matrix::Zero(d, d);
        v(j, k) = C(0, -1);
        v(k, j) = C(0, 1);
        elements_.push_back(std::move(u));
        elements_.push_back(std::move(v));
      }
    }
    for (Index l = 1; l < d; ++l) {
      const Real scale = std::sqrt(Real(2) / Real(l * (l + 1)));
      Matrix w = Matrix::Zero(d, d);
      for (Index j = 0; j < l; ++j) w(j, j) = C(scale, 0);
      w(l, l) = C(-scale * Real(l), 0);
      elements_.push_back(std::move(w));
    }
    identity_ = Matrix::Identity(d, d) * C(std::sqrt(Real(2) / Real(d)), 0);
  }

  Index dim() const { return d_; }
  /// d^2 - 1
  Index size() const { return static_cast<Index>(elements_.size()); }
  /// d^2 - d, the number of coordinates that carry coherence.
  Index coherent_size() const { return d_ * d_ - d_; }
  Index pairs() const { return pair_count(d_); }

  /// Generator X_{i+1}; i is 0-based over the d^2 - 1 traceless elements.
  const Matrix& operator[](Index i) const { return elements_[static_cast<std::size_t>(i)]; }

  /// X_0 = sqrt(2/d) I.
  const Matrix& identity_element() const { return identity_; }

  /// Element of the augmented basis {X_0, X_1, ..., X_{d^2-1}}.
  const Matrix& augmented(Index i) const { return i == 0 ? identity_ : (*this)[i - 1]; }

  bool is_off_diagonal(Index i) const { return i < coherent_size(); }

  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  Index d_;
  std::vector<Matrix> elements_;
  Matrix identity_;
};

using GeneratorBasisd = GeneratorBasis<double>;

template <typename Real = double>
GeneratorBasis<Real> gellmann_basis(Index d) {
  return GeneratorBasis<Real>(d);
}

namespace detail {

template <typename Real>
CMatrix<Real> pauli(int k) {
  using C = std::complex<Real>;
  CMatrix<Real> s(2, 2);
  switch (k) {
    case 0: s << C(1), C(0), C(0), C(1); break;
    case 1: s << C(0), C(1), C(1), C(0); break;
    case 2: s << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: s << C(1), C(0), C(0), C(-1); break;
    default: throw InvalidDimension("pauli index must be in 0..3");
  }
  return s;
}

template <typename Real>
CMatrix<Real> kron(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

/// Pauli matrix sigma_k, k in 0..3 with sigma_0 = I.
template <typename Real = double>
CMatrix<Real> pauli_matrix(int k) {
  return detail::pauli<Real>(k);
}

/// N-qubit Pauli tensor basis Y_j = 2^{(1-N)/2} sigma_{j1} (x) ... (x) sigma_{jN}.
///
/// Elements are stored for j = 1 .. 4^N - 1 in numeric order of the base-4
/// digit string j1 j2 ... jN (j1 most significant, acting on the first
/// tensor factor).
template <typename Real>
class PauliTensorBasis {
 public:
  using Matrix = CMatrix<Real>;
  static constexpr int kMaxQubits = 6;

  explicit PauliTensorBasis(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) throw InvalidDimension("pauli_tensor_basis: qubit count must be in 1..6");
    const Index count = Index(1) << (2 * n);
    const Real scale = std::pow(Real(2), Real(1 - n) / Real(2));
    elements_.reserve(static_cast<std::size_t>(count - 1));
    digits_.reserve(static_cast<std::size_t>(count - 1));
    for (Index j = 1; j < count; ++j) {
      std::vector<int> dig(static_cast<std::size_t>(n));
      Index rest = j;
      for (int k = n - 1; k >= 0; --k) {
        dig[static_cast<std::size_t>(k)] = static_cast<int>(rest % 4);
        rest /= 4;
      }
      Matrix m = detail::pauli<Real>(dig[0]);
      for (int k = 1; k < n; ++k) m = detail::kron<Real>(m, detail::pauli<Real>(dig[static_cast<std::size_t>(k)]));
      elements_.push_back(m * std::complex<Real>(scale, 0));
      digits_.push_back(std::move(dig));
    }
    const Index dim = Index(1) << n;
    identity_ = Matrix::Identity(dim, dim) * std::complex<Real>(scale, 0);
  }

  int qubits() const { return n_; }
  Index dim() const { return Index(1) << n_; }
  /// 4^N - 1
  Index size() const { return static_cast<Index>(elements_.size()); }

  /// Y_{i+1}; i is 0-based over the traceless elements.
  const Matrix& operator[](Index i) const { return elements_[static_cast<std::size_t>(i)]; }
  /// Y_0 = sqrt(2^{1-N}) I.
  const Matrix& identity_element() const { return identity_; }
  const Matrix& augmented(Index mu) const { return mu == 0 ? identity_ : (*this)[mu - 1]; }

  /// Base-4 digits (j1 .. jN) of Y_{i+1}.
  const std::vector<int>& digits(Index i) const { return digits_[static_cast<std::size_t>(i)]; }

  /// Digits of the augmented index mu (mu = 0 gives all zeros).
  std::vector<int> augmented_digits(Index mu) const {
    return mu == 0 ? std::vector<int>(static_cast<std::size_t>(n_), 0) : digits(mu - 1);
  }

 private:
  int n_;
  std::vector<Matrix> elements_;
  std::vector<std::vector<int>> digits_;
  Matrix identity_;
};

using PauliTensorBasisd = PauliTensorBasis<double>;

template <typename Real = double>
PauliTensorBasis<Real> pauli_tensor_basis(int n) {
  return PauliTensorBasis<Real>(n);
}

/// Real orthogonal change of basis X_i = sum_j a_ij Y_j between the
/// Gell-Mann basis of d = 2^N and the N-qubit Pauli tensor basis.
template <typename Real>
struct BasisTransform {
  int qubits = 0;
  RMatrix<Real> a;
};

template <typename Real = double>
BasisTransform<Real> y_to_x_transform(int n) {
  if (n < 1 || n > 3) throw InvalidDimension("y_to_x_transform: qubit count must be in 1..3");
  const PauliTensorBasis<Real> y(n);
  const GeneratorBasis<Real> x(y.dim());
  BasisTransform<Real> out;
  out.qubits = n;
  out.a.resize(x.size(), y.size());
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < y.size(); ++j)
      out.a(i, j) = (x[i] * y[j]).trace().real() / Real(2);
  return out;
}

}  // namespace qcoh

#endif  // QCOH_BASIS_HPP
