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

#ifndef QCOH_CORE_HPP
#define QCOH_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcoh {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrixd = CMatrix<double>;
using RMatrixd = RMatrix<double>;
using RVectord = RVector<double>;

using Index = Eigen::Index;

// Tolerances shared across modules.
namespace tol {
inline constexpr double construction = 1e-12;
inline constexpr double identity = 1e-11;
inline constexpr double factorization = 1e-9;
inline constexpr double condition = 1e-10;
inline constexpr double completeness = 1e-10;
inline constexpr double hermitian = 1e-10;
inline constexpr double psd = -1e-9;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonHermitian : public Error {
 public:
  using Error::Error;
};

class UnphysicalState : public Error {
 public:
  UnphysicalState(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class NoProbe : public Error {
 public:
  using Error::Error;
};

class InvalidChannel : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

// Raised by the auxiliary-channel construction when a target coordinate
// is nonzero over a vanishing source coordinate.
class UnreachableTarget : public Error {
 public:
  UnreachableTarget(const std::string& what, Index nu) : Error(what), nu_(nu) {}
  Index index() const noexcept { return nu_; }

 private:
  Index nu_;
};

class NotAChannel : public Error {
 public:
  NotAChannel(const std::string& what, Index mu) : Error(what), mu_(mu) {}
  Index index() const noexcept { return mu_; }

 private:
  Index mu_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcoh

#endif  // QCOH_CORE_HPP
