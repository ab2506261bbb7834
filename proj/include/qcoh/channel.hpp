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

#ifndef QCOH_CHANNEL_HPP
#define QCOH_CHANNEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcoh/basis.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// CPTP map rho -> sum_mu E_mu rho E_mu^dagger. Construction enforces
/// completeness sum_mu E_mu^dagger E_mu = I to 1e-10.
class KrausChannel {
 public:
  using Params = std::map<std::string, double>;

  KrausChannel(std::vector<CMatrixd> kraus, std::string label = "kraus", Params params = {});

  Index dim() const { return d_; }
  const std::vector<CMatrixd>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }
  const Params& params() const { return params_; }

  /// max |sum E^dagger E - I|
  double completeness_error() const;

 private:
  Index d_ = 0;
  std::vector<CMatrixd> kraus_;
  std::string label_;
  Params params_;
};

CMatrixd apply(const KrausChannel& ch, const CMatrixd& rho);

/// Heisenberg-picture action sum_mu E_mu^dagger O E_mu.
CMatrixd dual_apply(const KrausChannel& ch, const CMatrixd& obs);

/// A = sum_mu E_mu E_mu^dagger
CMatrixd kraus_outer_sum(const KrausChannel& ch);

/// Channel `after` applied to the output of `before`.
KrausChannel compose(const KrausChannel& after, const KrausChannel& before);

/// Heisenberg transfer matrix T_ij = Tr[E^dagger(X_i) X_j] / 2 over the
/// augmented basis {X_0 = sqrt(2/d) I, X_1, ..., X_{d^2-1}}. Index 0 is X_0.
struct TransferMatrix {
  Index d = 0;
  RMatrixd t;

  /// Rows 1 .. d^2-d, columns 1 .. d^2-1.
  RMatrixd coherent_block() const { return t.block(1, 1, d * d - d, d * d - 1); }
  /// 2x2 diagonal block of the coherent rows for pair r (0-based).
  Eigen::Matrix2d pair_block(Index r) const { return t.block(2 * r + 1, 2 * r + 1, 2, 2); }
};

TransferMatrix transfer_matrix(const KrausChannel& ch, const GeneratorBasisd& basis);
TransferMatrix transfer_matrix(const KrausChannel& ch);

/// Bloch vector of the output, x'_i = sum_{j>=0} T_ij x_j with x_0 = sqrt(2/d).
RVectord transfer_apply(const TransferMatrix& t, const RVectord& x);

/// |T_k0| <= 1e-10 for every off-diagonal generator row k = 1 .. d^2 - d.
bool theorem1_condition(const TransferMatrix& t);

/// All T_k0 vanish for k >= 1, i.e. the channel is unital.
bool unital_condition(const TransferMatrix& t);

/// Off-diagonal entries of A = sum E E^dagger are below 1e-10.
bool corollary1_check(const KrausChannel& ch);

/// q such that row k of T equals q e_k for every k in `rows` (augmented
/// indices, each in 1 .. d^2 - d), or nullopt.
std::optional<double> scalar_action_detect(const TransferMatrix& t, std::span<const Index> rows);

/// Scalar action on all off-diagonal generator rows.
std::optional<double> scalar_action_detect(const TransferMatrix& t);

/// Block-orthogonality test for frozen l1 coherence. Without a family the
/// coherent block must be block diagonal with orthogonal 2x2 blocks. With a
/// family, blocks whose pair has one vanishing coordinate only need the
/// surviving column to have unit norm, and blocks with both coordinates
/// vanishing are skipped. Throws NotApplicable when theorem1_condition fails.
bool frozen_condition_check(const TransferMatrix& t, const std::optional<StateFamilyd>& fam = std::nullopt);

// ---------------------------------------------------------------------------
// Named channels.

struct ChannelSpec {
  std::string name;
  Index d = 2;
  KrausChannel::Params params;
};

/// Builds one of the named channels:
///   identity                       any d
///   bit_flip, phase_flip,
///   bit_phase_flip                 q in [-1, 1], qubit
///   phase_damping                  q in [0, 1], qubit; off-diagonals scale by q
///   amplitude_damping              gamma in [0, 1], qubit
///   amplitude_damping_x            gamma in [0, 1], qubit; damps toward |+>
///   generalized_amplitude_damping  gamma, p in [0, 1], qubit
///   pauli                          p0 .. p3 >= 0 summing to 1, qubit
///   depolarizing                   p in [0, d^2/(d^2-1)], any d; shrink q = 1 - p
///   gell_mann_G                    q, q0 inside the Kraus-positivity region, any d
///   frozen_xy, frozen_z            q in [0, 1], sign = +1 or -1, qubit
/// Throws InvalidChannel naming the violated range.
KrausChannel make_named(const ChannelSpec& spec);

std::vector<std::string> named_channels();

enum class FrozenVariant { xy, z };

/// Single-Kraus qubit channel that freezes l1 coherence:
/// xy: E = q sigma_x + sign q' sigma_y;  z: E = q I + sign i q' sigma_z;  q' = sqrt(1 - q^2).
KrausChannel make_frozen_qubit(FrozenVariant variant, double q, int sign = 1);

/// Checks the two admissible coefficient patterns for a qubit channel
/// E_i = sum_j eps(i, j) sigma_j to freeze l1 coherence. Throws
/// InvalidChannel if the Kraus set is incomplete.
bool validate_frozen_coefficients(const Eigen::Matrix4cd& eps);

/// Pauli coefficients eps(i, j) = Tr(E_i sigma_j) / 2 of a qubit channel
/// with at most four Kraus operators.
Eigen::Matrix4cd pauli_coefficients(const KrausChannel& ch);

// ---------------------------------------------------------------------------
// Auxiliary channel mapping an N-qubit state onto a chosen family member.

struct AuxSolve {
  int qubits = 0;
  RMatrixd c;       ///< 4^N x 4^N sign matrix 2^{1-N} (-1)^{sum_k xi_k}
  RVectord q;       ///< per-coordinate factors, q_0 = 1
  RVectord eps;     ///< solution of c eps = q, before clamping
  RVectord source;  ///< y_nu = Tr(rho Y_nu), nu = 1 .. 4^N - 1
  bool nonnegative() const;
  /// First index with eps below -1e-10, or -1.
  Index first_negative() const;
};

/// Coefficient matrix c_{nu mu} for N qubits.
RMatrixd aux_coefficients(int qubits);

/// Solves for the Pauli-diagonal channel whose output has coordinates
/// chi m_nu. Throws UnreachableTarget when m_nu != 0 over y_nu ~ 0; does not
/// check the sign of eps.
AuxSolve solve_aux(const CMatrixd& rho, const RVectord& m, double chi, const PauliTensorBasisd& basis);

struct AuxChannel {
  KrausChannel channel;
  AuxSolve solve;
};

/// solve_aux followed by the Kraus realization E_mu = sqrt(eps_mu) Y_mu.
/// Throws NotAChannel if some eps_mu < -1e-10; values in (-1e-10, 0) clamp to 0.
AuxChannel aux_channel(const CMatrixd& rho, const RVectord& m, double chi, const PauliTensorBasisd& basis);

/// Target (m, chi) that the auxiliary channel can reach from rho with a
/// nonnegative eps: eps is drawn uniformly from the simplex scaled to
/// sum eps = 2^{N-1}, and the target coordinates are q_nu y_nu with q = c eps.
struct AuxTarget {
  RVectord m;
  double chi = 0;
  RVectord eps;
};

AuxTarget random_reachable_target(const CMatrixd& rho, const PauliTensorBasisd& basis, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Random channels for property tests.

/// Kraus operators cut from a Haar isometry C^d -> C^{d k}; k defaults to d^2.
KrausChannel random_channel(Index d, std::uint64_t seed, Index kraus_count = 0);

/// Convex mixture of Haar unitaries with uniform simplex weights; k defaults to d^2.
KrausChannel random_unital_channel(Index d, std::uint64_t seed, Index kraus_count = 0);

/// Random unital channel followed by a random classical stochastic channel
/// E_ij = sqrt(P_ij)|i><j|. Non-unital in general, with diagonal A.
KrausChannel random_diagonal_outer_channel(Index d, std::uint64_t seed);

}  // namespace qcoh

#endif  // QCOH_CHANNEL_HPP
