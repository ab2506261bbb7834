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

#include "qcoh/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace qcoh {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrixd ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrixd g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

CMatrixd haar_unitary(Index d, Rng& rng) {
  const CMatrixd g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrixd> qr(g);
  CMatrixd q = qr.householderQ();
  const CMatrixd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

CMatrixd haar_isometry(Index rows, Index cols, Rng& rng) {
  return haar_unitary(rows, rng).leftCols(cols);
}

RVectord random_unit_vector(Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RVectord v(n);
  do {
    for (Index i = 0; i < n; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

RVectord random_simplex(Index n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RVectord p(n);
  for (Index i = 0; i < n; ++i) p(i) = expo(rng);
  return p / p.sum();
}

}  // namespace qcoh
