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

#include "qcoh/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

namespace qcoh {

const GeneratorBasisd& shared_basis(Index d) {
  static std::mutex mu;
  static std::map<Index, std::unique_ptr<GeneratorBasisd>> bases;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = bases[d];
  if (!slot) slot = std::make_unique<GeneratorBasisd>(d);
  return *slot;
}

FamilyDecomposition decompose_family(const StateFamilyd& fam) {
  check_family(fam);
  return {fam.chi, coherence_weight(fam.n, fam.d)};
}

Measure parse_measure(const std::string& name) {
  if (name == "l1") return Measure::l1;
  if (name == "purity") return Measure::purity;
  if (name == "geometric_discord2" || name == "d2") return Measure::geometric_discord2;
  if (name == "min2" || name == "n2") return Measure::min2;
  if (name == "bell_max") return Measure::bell_max;
  if (name == "rsp_fidelity") return Measure::rsp_fidelity;
  if (name == "teleport_n") return Measure::teleport_n;
  throw Error("unknown measure '" + name + "'");
}

std::string to_string(Measure m) {
  switch (m) {
    case Measure::l1: return "l1";
    case Measure::purity: return "purity";
    case Measure::geometric_discord2: return "geometric_discord2";
    case Measure::min2: return "min2";
    case Measure::bell_max: return "bell_max";
    case Measure::rsp_fidelity: return "rsp_fidelity";
    case Measure::teleport_n: return "teleport_n";
  }
  return "?";
}

int homogeneity_degree(Measure m) {
  switch (m) {
    case Measure::l1:
    case Measure::bell_max:
    case Measure::teleport_n: return 1;
    default: return 2;
  }
}

double evaluate(Measure m, const CMatrixd& rho) {
  switch (m) {
    case Measure::l1: return l1_from_density(rho);
    case Measure::purity: return purity_measure(rho);
    case Measure::geometric_discord2: return geometric_discord2(rho);
    case Measure::min2: return min2(rho);
    case Measure::bell_max: return correlation_measures(rho).bell_max;
    case Measure::rsp_fidelity: return correlation_measures(rho).rsp_fidelity;
    case Measure::teleport_n: return correlation_measures(rho).teleport_n;
  }
  return 0;
}

const ProbeStated& ProbeCache::get(const RVectord& n, const GeneratorBasisd& basis) {
  std::vector<long long> key(static_cast<std::size_t>(n.size()));
  for (Index i = 0; i < n.size(); ++i) key[static_cast<std::size_t>(i)] = std::llround(n(i) * 1e12);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), probe_state(n, basis)).first;
  return it->second;
}

FactorizationReport verify_theorem1(const KrausChannel& ch, const StateFamilyd& fam) {
  ProbeCache cache;
  return verify_theorem1(ch, fam, cache);
}

FactorizationReport verify_theorem1(const KrausChannel& ch, const StateFamilyd& fam, ProbeCache& cache) {
  check_family(fam);
  if (fam.d != ch.dim()) throw DimensionMismatch("verify_theorem1: family and channel dimensions differ");
  const GeneratorBasisd& basis = shared_basis(fam.d);
  const ProbeStated& probe = cache.get(fam.n, basis);
  const CMatrixd member = family_member(fam, basis);

  FactorizationReport r;
  r.lhs = l1_from_density(qcoh::apply(ch, member));
  r.rhs = l1_from_density(member) * l1_from_density(qcoh::apply(ch, probe.state));
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.probe_physical = probe.physical;
  r.condition_held = theorem1_condition(transfer_matrix(ch, basis));
  return r;
}

FactorizationReport verify_lemma1(Measure measure, const KrausChannel& ch, const StateFamilyd& fam) {
  if (measure == Measure::l1) return verify_theorem1(ch, fam);
  check_family(fam);
  if (fam.d != ch.dim()) throw DimensionMismatch("verify_lemma1: family and channel dimensions differ");
  const GeneratorBasisd& basis = shared_basis(fam.d);

  // Q at unit chi fixes g; the probe solves chi_p^k g = 1.
  const CMatrixd unit = bloch_compose(fam.n, basis);
  const double g = evaluate(measure, unit);
  if (g <= 1e-12) throw NoProbe("verify_lemma1: measure vanishes along the family direction");
  const double chi_p = std::pow(1.0 / g, 1.0 / homogeneity_degree(measure));
  const CMatrixd probe = bloch_compose(RVectord(chi_p * fam.n), basis);
  const CMatrixd member = family_member(fam, basis);

  FactorizationReport r;
  r.lhs = evaluate(measure, qcoh::apply(ch, member));
  r.rhs = evaluate(measure, member) * evaluate(measure, qcoh::apply(ch, probe));
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.probe_physical = min_eigenvalue(probe) >= tol::psd;
  r.condition_held = unital_condition(transfer_matrix(ch, basis));
  return r;
}

FactorizationReport verify_corollary2(const KrausChannel& ch, const CMatrixd& rho) {
  if (rho.rows() != ch.dim()) throw DimensionMismatch("verify_corollary2: state and channel dimensions differ");
  const GeneratorBasisd& basis = shared_basis(ch.dim());
  const TransferMatrix t = transfer_matrix(ch, basis);
  const RVectord x = bloch_decompose(rho, basis).x;
  const Index coherent = basis.coherent_size();

  std::vector<Index> populated;
  for (Index k = 0; k < coherent; ++k)
    if (std::abs(x(k)) > 1e-12) populated.push_back(k + 1);
  const auto q = scalar_action_detect(t, populated);
  if (!q) throw NotApplicable("verify_corollary2: channel has no common scalar action on the populated coordinates");

  FactorizationReport r;
  r.q = *q;
  r.lhs = l1_from_density(qcoh::apply(ch, rho));
  r.rhs = std::abs(*q) * l1_from_density(rho);
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.probe_physical = true;
  // Unpopulated off-diagonal coordinates must stay empty.
  const RVectord out = transfer_apply(t, x);
  r.condition_held = true;
  for (Index k = 0; k < coherent; ++k)
    if (std::abs(x(k)) <= 1e-12 && std::abs(out(k)) > tol::condition) r.condition_held = false;
  return r;
}

FactorizationReport verify_cascade(const KrausChannel& ch_f, const CMatrixd& rho, const RVectord& m, double chi) {
  const Index d = rho.rows();
  int n = 0;
  while ((Index(1) << n) < d) ++n;
  if ((Index(1) << n) != d || n < 1 || n > 3) throw InvalidDimension("verify_cascade: state must be an N-qubit state, N in 1..3");
  if (ch_f.dim() != d) throw DimensionMismatch("verify_cascade: channel and state dimensions differ");

  const PauliTensorBasisd ybasis(n);
  const GeneratorBasisd& xbasis = shared_basis(d);
  const AuxChannel aux = aux_channel(rho, m, chi, ybasis);
  const CMatrixd generated = qcoh::apply(aux.channel, rho);

  const RVectord mbar = y_to_x_transform(n).a * m;
  const ProbeStated probe = probe_state(mbar, xbasis);

  FactorizationReport r;
  r.lhs = l1_from_density(qcoh::apply(ch_f, generated));
  r.rhs = l1_from_density(generated) * l1_from_density(qcoh::apply(ch_f, probe.state));
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.probe_physical = probe.physical;
  r.condition_held = theorem1_condition(transfer_matrix(ch_f, xbasis));
  return r;
}

FreezeTrajectory freeze_trajectory(const ChannelSpec& base, const std::string& param, std::span<const double> grid,
                                   const CMatrixd& state) {
  FreezeTrajectory out;
  ChannelSpec spec = base;
  for (const double v : grid) {
    spec.params[param] = v;
    const CMatrixd evolved = qcoh::apply(make_named(spec), state);
    out.points.push_back({v, l1_from_density(evolved), purity_measure(evolved)});
  }
  if (!out.points.empty()) {
    const auto [lo, hi] = std::minmax_element(out.points.begin(), out.points.end(),
                                              [](const auto& a, const auto& b) { return a.c_l1 < b.c_l1; });
    out.spread = hi->c_l1 - lo->c_l1;
  }
  out.frozen = out.spread <= tol::factorization;
  return out;
}

}  // namespace qcoh
