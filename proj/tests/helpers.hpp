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

// Test-only helpers. Nothing here calls into the code paths it is used to check.

#ifndef QCOH_TESTS_HELPERS_HPP
#define QCOH_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace testing {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline double max_abs(const M& m) { return m.cwiseAbs().maxCoeff(); }

inline M sx() { M s(2, 2); s << 0, 1, 1, 0; return s; }
inline M sy() { M s(2, 2); s << 0, C(0, -1), C(0, 1), 0; return s; }
inline M sz() { M s(2, 2); s << 1, 0, 0, -1; return s; }
inline M id2() { return M::Identity(2, 2); }

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

inline M bell_phi_plus() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return projector(v);
}

/// Random Hermitian matrix with Gaussian entries.
inline M random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  M g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = C(n(rng), n(rng));
  return (g + g.adjoint()) / 2.0;
}

/// Random density matrix built locally (independent of the library sampler).
inline M random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  M g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = C(n(rng), n(rng));
  M rho = g * g.adjoint();
  return rho / rho.trace();
}

/// Sum of moduli of off-diagonal entries by explicit double loop.
inline double l1_loop(const M& rho) {
  double s = 0;
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = 0; j < rho.cols(); ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

}  // namespace testing

#endif
