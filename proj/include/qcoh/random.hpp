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

#ifndef QCOH_RANDOM_HPP
#define QCOH_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qcoh/core.hpp"

namespace qcoh {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream index so that trial i of a batch gets an
/// independent, reproducible generator.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Matrix with i.i.d. standard complex Gaussian entries.
CMatrixd ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the R-diagonal phases removed).
CMatrixd haar_unitary(Index d, Rng& rng);

/// First `cols` columns of a Haar unitary on `rows` dimensions.
CMatrixd haar_isometry(Index rows, Index cols, Rng& rng);

/// Uniform direction on the unit sphere in R^n.
RVectord random_unit_vector(Index n, Rng& rng);

/// Uniform point of the probability simplex with `n` vertices.
RVectord random_simplex(Index n, Rng& rng);

}  // namespace qcoh

#endif  // QCOH_RANDOM_HPP
