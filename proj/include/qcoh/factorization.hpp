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

#ifndef QCOH_FACTORIZATION_HPP
#define QCOH_FACTORIZATION_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcoh/channel.hpp"
#include "qcoh/measures.hpp"

namespace qcoh {

/// C_l1(rho^n) = f(chi) g(n) with f(chi) = chi.
struct FamilyDecomposition {
  double f_chi = 0;
  double g_n = 0;
};

FamilyDecomposition decompose_family(const StateFamilyd& fam);

struct FactorizationReport {
  double lhs = 0;
  double rhs = 0;
  double abs_err = 0;
  bool probe_physical = false;
  /// Whether the channel met the sufficient condition for the relation checked.
  bool condition_held = false;
  /// Scalar factor, reported by the scalar-action check only.
  std::optional<double> q;
};

/// Quantities Q(rho) that are homogeneous in the Bloch vector, Q(chi n) = chi^k Q(n).
enum class Measure { l1, purity, geometric_discord2, min2, bell_max, rsp_fidelity, teleport_n };

Measure parse_measure(const std::string& name);
std::string to_string(Measure m);
/// Degree k of homogeneity in chi.
int homogeneity_degree(Measure m);
double evaluate(Measure m, const CMatrixd& rho);

/// Caches probe states by direction, keyed at 1e-12 resolution.
class ProbeCache {
 public:
  const ProbeStated& get(const RVectord& n, const GeneratorBasisd& basis);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<std::vector<long long>, ProbeStated> cache_;
};

/// lhs = C_l1(E(rho^n)), rhs = C_l1(rho^n) C_l1(E(rho_p^n)). Never throws on
/// condition failure; the report carries condition_held instead.
FactorizationReport verify_theorem1(const KrausChannel& ch, const StateFamilyd& fam);
FactorizationReport verify_theorem1(const KrausChannel& ch, const StateFamilyd& fam, ProbeCache& cache);

/// Factorization Q(E(rho^n)) = Q(rho^n) Q(E(rho_p)) for a homogeneous measure,
/// with the probe scaled so that Q(rho_p) = 1. For l1 the condition is
/// theorem1_condition; every other measure depends on all coordinates and
/// needs a unital channel.
FactorizationReport verify_lemma1(Measure measure, const KrausChannel& ch, const StateFamilyd& fam);

/// C_l1(E(rho)) = |q| C_l1(rho) when E^dagger acts as q on the populated
/// off-diagonal generators. Throws NotApplicable if there is no such q;
/// condition_held is false if the channel feeds coherence into unpopulated
/// off-diagonal coordinates.
FactorizationReport verify_corollary2(const KrausChannel& ch, const CMatrixd& rho);

/// Cascaded relation for N qubits:
/// C_l1(E_F(E_aux(rho))) = C_l1(E_aux(rho)) C_l1(E_F(rho_p^m)).
FactorizationReport verify_cascade(const KrausChannel& ch_f, const CMatrixd& rho, const RVectord& m, double chi);

struct TrajectoryPoint {
  double param = 0;
  double c_l1 = 0;
  double purity = 0;
};

struct FreezeTrajectory {
  std::vector<TrajectoryPoint> points;
  double spread = 0;  ///< max - min of c_l1
  bool frozen = false;
};

/// Evolves `state` through the named channel for each value of `param` in `grid`.
FreezeTrajectory freeze_trajectory(const ChannelSpec& base, const std::string& param, std::span<const double> grid,
                                   const CMatrixd& state);

/// Shared read-only Gell-Mann basis per dimension.
const GeneratorBasisd& shared_basis(Index d);

}  // namespace qcoh

#endif  // QCOH_FACTORIZATION_HPP
