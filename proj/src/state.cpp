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

#include "qcoh/state.hpp"

#include "qcoh/random.hpp"

namespace qcoh {

CMatrixd random_state(Index d, std::uint64_t seed) {
  if (d < 2) throw InvalidDimension("random_state: dimension must be >= 2");
  Rng rng(seed);
  const CMatrixd g = ginibre(d, d, rng);
  CMatrixd rho = g * g.adjoint();
  rho /= rho.trace();
  // exact Hermiticity after the division
  return (rho + rho.adjoint()) / Complex(2, 0);
}

StateFamilyd random_family(Index d, std::uint64_t seed) {
  if (d < 2) throw InvalidDimension("random_family: dimension must be >= 2");
  Rng rng(seed);
  const GeneratorBasisd basis(d);
  StateFamilyd fam;
  fam.d = d;
  fam.n = random_unit_vector(d * d - 1, rng);
  std::uniform_real_distribution<double> unif(0.0, max_family_chi(d));
  for (;;) {
    fam.chi = unif(rng);
    if (min_eigenvalue(bloch_compose(RVectord(fam.chi * fam.n), basis)) >= tol::psd) break;
  }
  return fam;
}

}  // namespace qcoh
