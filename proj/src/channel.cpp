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

#include "qcoh/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "qcoh/random.hpp"

namespace qcoh {

namespace {

constexpr double kParamTol = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double param(const ChannelSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) throw InvalidChannel(spec.name + ": missing parameter '" + key + "'");
  return it->second;
}

double param_or(const ChannelSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

void require_range(const ChannelSpec& spec, const std::string& key, double v, double lo, double hi) {
  if (v < lo - kParamTol || v > hi + kParamTol)
    throw InvalidChannel(spec.name + ": parameter " + key + " = " + fmt(v) + " violates " + fmt(lo) + " <= " + key +
                         " <= " + fmt(hi));
}

void require_qubit(const ChannelSpec& spec) {
  if (spec.d != 2) throw InvalidChannel(spec.name + ": defined for qubits only (d = 2)");
}

double safe_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

CMatrixd ket_bra(Index d, Index i, Index j) {
  CMatrixd m = CMatrixd::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

// Pauli-diagonal channel sum_k w_k sigma_k rho sigma_k written with
// shrink factor q on the chosen axis pair.
KrausChannel pauli_flip(const ChannelSpec& spec, int axis) {
  require_qubit(spec);
  const double q = param(spec, "q");
  require_range(spec, "q", q, -1.0, 1.0);
  return KrausChannel({safe_sqrt((1 + q) / 2) * pauli_matrix(0), safe_sqrt((1 - q) / 2) * pauli_matrix(axis)}, spec.name,
                      spec.params);
}

std::vector<CMatrixd> amplitude_damping_kraus(double gamma) {
  CMatrixd e0 = CMatrixd::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = safe_sqrt(1 - gamma);
  return {e0, safe_sqrt(gamma) * ket_bra(2, 0, 1)};
}

}  // namespace

KrausChannel::KrausChannel(std::vector<CMatrixd> kraus, std::string label, Params params)
    : kraus_(std::move(kraus)), label_(std::move(label)), params_(std::move(params)) {
  if (kraus_.empty()) throw InvalidChannel("channel needs at least one Kraus operator");
  d_ = kraus_.front().rows();
  if (d_ < 2) throw InvalidDimension("channel dimension must be >= 2");
  for (const auto& e : kraus_)
    if (e.rows() != d_ || e.cols() != d_) throw InvalidChannel("Kraus operators must be square and of equal size");
  const double err = completeness_error();
  if (err > tol::completeness)
    throw InvalidChannel("Kraus set violates completeness sum E^dagger E = I (max deviation " + fmt(err) + ")");
}

double KrausChannel::completeness_error() const {
  CMatrixd s = CMatrixd::Zero(d_, d_);
  for (const auto& e : kraus_) s.noalias() += e.adjoint() * e;
  return (s - CMatrixd::Identity(d_, d_)).cwiseAbs().maxCoeff();
}

CMatrixd apply(const KrausChannel& ch, const CMatrixd& rho) {
  if (rho.rows() != ch.dim() || rho.cols() != ch.dim()) throw DimensionMismatch("apply: state and channel dimensions differ");
  CMatrixd out = CMatrixd::Zero(ch.dim(), ch.dim());
  for (const auto& e : ch.kraus()) out.noalias() += e * rho * e.adjoint();
  return out;
}

CMatrixd dual_apply(const KrausChannel& ch, const CMatrixd& obs) {
  if (obs.rows() != ch.dim() || obs.cols() != ch.dim())
    throw DimensionMismatch("dual_apply: observable and channel dimensions differ");
  CMatrixd out = CMatrixd::Zero(ch.dim(), ch.dim());
  for (const auto& e : ch.kraus()) out.noalias() += e.adjoint() * obs * e;
  return out;
}

CMatrixd kraus_outer_sum(const KrausChannel& ch) {
  CMatrixd a = CMatrixd::Zero(ch.dim(), ch.dim());
  for (const auto& e : ch.kraus()) a.noalias() += e * e.adjoint();
  return a;
}

KrausChannel compose(const KrausChannel& after, const KrausChannel& before) {
  if (after.dim() != before.dim()) throw DimensionMismatch("compose: channel dimensions differ");
  std::vector<CMatrixd> kraus;
  kraus.reserve(after.kraus().size() * before.kraus().size());
  for (const auto& a : after.kraus())
    for (const auto& b : before.kraus()) kraus.push_back(a * b);
  return KrausChannel(std::move(kraus), after.label() + "*" + before.label());
}

TransferMatrix transfer_matrix(const KrausChannel& ch, const GeneratorBasisd& basis) {
  if (basis.dim() != ch.dim()) throw DimensionMismatch("transfer_matrix: basis and channel dimensions differ");
  const Index n = basis.size() + 1;
  TransferMatrix out{ch.dim(), RMatrixd(n, n)};
  for (Index i = 0; i < n; ++i) {
    const CMatrixd dual = dual_apply(ch, basis.augmented(i));
    for (Index j = 0; j < n; ++j) out.t(i, j) = dual.cwiseProduct(basis.augmented(j).transpose()).sum().real() / 2.0;
  }
  return out;
}

TransferMatrix transfer_matrix(const KrausChannel& ch) { return transfer_matrix(ch, GeneratorBasisd(ch.dim())); }

RVectord transfer_apply(const TransferMatrix& t, const RVectord& x) {
  const Index n = t.t.rows();
  if (x.size() != n - 1) throw DimensionMismatch("transfer_apply: Bloch vector length must be d^2 - 1");
  RVectord aug(n);
  aug(0) = std::sqrt(2.0 / double(t.d));
  aug.tail(n - 1) = x;
  return (t.t * aug).tail(n - 1);
}

bool theorem1_condition(const TransferMatrix& t) {
  const Index rows = t.d * t.d - t.d;
  return t.t.col(0).segment(1, rows).cwiseAbs().maxCoeff() <= tol::condition;
}

bool unital_condition(const TransferMatrix& t) {
  return t.t.col(0).tail(t.t.rows() - 1).cwiseAbs().maxCoeff() <= tol::condition;
}

bool corollary1_check(const KrausChannel& ch) {
  CMatrixd a = kraus_outer_sum(ch);
  a.diagonal().setZero();
  return a.cwiseAbs().maxCoeff() <= tol::condition;
}

std::optional<double> scalar_action_detect(const TransferMatrix& t, std::span<const Index> rows) {
  const Index coherent = t.d * t.d - t.d;
  if (rows.empty()) return std::nullopt;
  std::optional<double> q;
  for (const Index k : rows) {
    if (k < 1 || k > coherent) throw DimensionMismatch("scalar_action_detect: row outside 1 .. d^2 - d");
    const double qk = t.t(k, k);
    for (Index j = 0; j < t.t.cols(); ++j)
      if (j != k && std::abs(t.t(k, j)) > tol::condition) return std::nullopt;
    if (!q) q = qk;
    else if (std::abs(*q - qk) > tol::condition) return std::nullopt;
  }
  return q;
}

std::optional<double> scalar_action_detect(const TransferMatrix& t) {
  std::vector<Index> rows(static_cast<std::size_t>(t.d * t.d - t.d));
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = static_cast<Index>(k) + 1;
  return scalar_action_detect(t, rows);
}

bool frozen_condition_check(const TransferMatrix& t, const std::optional<StateFamilyd>& fam) {
  if (!theorem1_condition(t)) throw NotApplicable("frozen_condition_check: T_k0 != 0 for some off-diagonal row");
  if (fam) {
    check_family(*fam);
    if (fam->d != t.d) throw DimensionMismatch("frozen_condition_check: family and channel dimensions differ");
  }
  constexpr double eps = tol::condition;
  const Index cols = t.t.cols();
  for (Index r = 0; r < pair_count(t.d); ++r) {
    const Index r0 = 2 * r + 1;
    for (Index row = r0; row <= r0 + 1; ++row)
      for (Index j = 1; j < cols; ++j)
        if ((j < r0 || j > r0 + 1) && std::abs(t.t(row, j)) > eps) return false;

    const Eigen::Matrix2d b = t.pair_block(r);
    const bool first_zero = fam && std::abs(fam->n(2 * r)) <= 1e-12;
    const bool second_zero = fam && std::abs(fam->n(2 * r + 1)) <= 1e-12;
    if (first_zero && second_zero) continue;
    if (first_zero) {
      if (std::abs(b.col(1).squaredNorm() - 1.0) > eps) return false;
    } else if (second_zero) {
      if (std::abs(b.col(0).squaredNorm() - 1.0) > eps) return false;
    } else if ((b.transpose() * b - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() > eps) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> named_channels() {
  return {"identity",
          "bit_flip",
          "phase_flip",
          "bit_phase_flip",
          "phase_damping",
          "amplitude_damping",
          "amplitude_damping_x",
          "generalized_amplitude_damping",
          "pauli",
          "depolarizing",
          "gell_mann_G",
          "frozen_xy",
          "frozen_z"};
}

KrausChannel make_named(const ChannelSpec& spec) {
  const Index d = spec.d;
  if (d < 2) throw InvalidDimension(spec.name + ": dimension must be >= 2");
  const std::string& name = spec.name;

  if (name == "identity") return KrausChannel({CMatrixd::Identity(d, d)}, name, spec.params);
  if (name == "bit_flip") return pauli_flip(spec, 1);
  if (name == "bit_phase_flip") return pauli_flip(spec, 2);
  if (name == "phase_flip") return pauli_flip(spec, 3);

  if (name == "phase_damping") {
    require_qubit(spec);
    const double q = param(spec, "q");
    require_range(spec, "q", q, 0.0, 1.0);
    CMatrixd e0 = CMatrixd::Zero(2, 2);
    e0(0, 0) = 1.0;
    e0(1, 1) = q;
    CMatrixd e1 = CMatrixd::Zero(2, 2);
    e1(1, 1) = safe_sqrt(1 - q * q);
    return KrausChannel({e0, e1}, name, spec.params);
  }

  if (name == "amplitude_damping" || name == "amplitude_damping_x") {
    require_qubit(spec);
    const double gamma = param(spec, "gamma");
    require_range(spec, "gamma", gamma, 0.0, 1.0);
    auto kraus = amplitude_damping_kraus(gamma);
    if (name == "amplitude_damping_x") {
      const CMatrixd h = (pauli_matrix(1) + pauli_matrix(3)) / std::sqrt(2.0);
      for (auto& e : kraus) e = h * e * h;
    }
    return KrausChannel(std::move(kraus), name, spec.params);
  }

  if (name == "generalized_amplitude_damping") {
    require_qubit(spec);
    const double gamma = param(spec, "gamma");
    const double p = param(spec, "p");
    require_range(spec, "gamma", gamma, 0.0, 1.0);
    require_range(spec, "p", p, 0.0, 1.0);
    CMatrixd e0 = CMatrixd::Zero(2, 2);
    e0(0, 0) = 1.0;
    e0(1, 1) = safe_sqrt(1 - gamma);
    CMatrixd e2 = CMatrixd::Zero(2, 2);
    e2(0, 0) = safe_sqrt(1 - gamma);
    e2(1, 1) = 1.0;
    return KrausChannel({safe_sqrt(p) * e0, safe_sqrt(p * gamma) * ket_bra(2, 0, 1), safe_sqrt(1 - p) * e2,
                         safe_sqrt((1 - p) * gamma) * ket_bra(2, 1, 0)},
                        name, spec.params);
  }

  if (name == "pauli") {
    require_qubit(spec);
    std::vector<CMatrixd> kraus;
    double total = 0;
    for (int k = 0; k < 4; ++k) {
      const std::string key = "p" + std::to_string(k);
      const double p = param(spec, key);
      require_range(spec, key, p, 0.0, 1.0);
      total += p;
      kraus.push_back(safe_sqrt(p) * pauli_matrix(k));
    }
    if (std::abs(total - 1.0) > kParamTol) throw InvalidChannel("pauli: p0 + p1 + p2 + p3 = " + fmt(total) + " violates sum = 1");
    return KrausChannel(std::move(kraus), name, spec.params);
  }

  if (name == "depolarizing") {
    const double p = param(spec, "p");
    const double dd = double(d * d);
    require_range(spec, "p", p, 0.0, dd / (dd - 1));
    const GeneratorBasisd basis(d);
    std::vector<CMatrixd> kraus{safe_sqrt(1 - p + p / dd) * CMatrixd::Identity(d, d)};
    const double w = safe_sqrt(p / (2.0 * double(d)));
    for (const auto& x : basis.elements()) kraus.push_back(w * x);
    return KrausChannel(std::move(kraus), name, spec.params);
  }

  if (name == "gell_mann_G") {
    const double q = param(spec, "q");
    const double q0 = param(spec, "q0");
    const double dd = double(d);
    const double w0 = 1 + (dd * dd - dd) * q + (dd - 1) * q0;
    const double wk = 1 - q0;
    const double wl = 1 - dd * q + (dd - 1) * q0;
    if (wk < -kParamTol) throw InvalidChannel("gell_mann_G: violates 1 - q0 >= 0");
    if (wl < -kParamTol) throw InvalidChannel("gell_mann_G: violates 1 - d q + (d-1) q0 >= 0");
    if (w0 < -kParamTol) throw InvalidChannel("gell_mann_G: violates 1 + (d^2-d) q + (d-1) q0 >= 0");
    const GeneratorBasisd basis(d);
    std::vector<CMatrixd> kraus{safe_sqrt(w0) / dd * CMatrixd::Identity(d, d)};
    for (Index k = 0; k < basis.size(); ++k)
      kraus.push_back(safe_sqrt((basis.is_off_diagonal(k) ? wk : wl) / (2 * dd)) * basis[k]);
    return KrausChannel(std::move(kraus), name, spec.params);
  }

  if (name == "frozen_xy" || name == "frozen_z") {
    require_qubit(spec);
    const double q = param(spec, "q");
    const double sign = param_or(spec, "sign", 1.0);
    require_range(spec, "q", q, 0.0, 1.0);
    if (sign != 1.0 && sign != -1.0) throw InvalidChannel(name + ": sign must be +1 or -1");
    auto ch = make_frozen_qubit(name == "frozen_xy" ? FrozenVariant::xy : FrozenVariant::z, q, sign > 0 ? 1 : -1);
    return KrausChannel(ch.kraus(), name, spec.params);
  }

  throw InvalidChannel("unknown channel '" + name + "'");
}

KrausChannel make_frozen_qubit(FrozenVariant variant, double q, int sign) {
  if (q < -kParamTol || q > 1 + kParamTol) throw InvalidChannel("frozen qubit channel: q must lie in [0, 1]");
  if (sign != 1 && sign != -1) throw InvalidChannel("frozen qubit channel: sign must be +1 or -1");
  q = std::clamp(q, 0.0, 1.0);
  const double qp = std::sqrt(1 - q * q);
  const double s = sign;
  KrausChannel::Params params{{"q", q}, {"sign", s}};
  if (variant == FrozenVariant::xy) return KrausChannel({q * pauli_matrix(1) + s * qp * pauli_matrix(2)}, "frozen_xy", params);
  return KrausChannel({q * pauli_matrix(0) + Complex(0, s * qp) * pauli_matrix(3)}, "frozen_z", params);
}

Eigen::Matrix4cd pauli_coefficients(const KrausChannel& ch) {
  if (ch.dim() != 2) throw DimensionMismatch("pauli_coefficients: qubit channel required");
  if (ch.kraus().size() > 4) throw InvalidChannel("pauli_coefficients: at most four Kraus operators supported");
  Eigen::Matrix4cd eps = Eigen::Matrix4cd::Zero();
  for (std::size_t i = 0; i < ch.kraus().size(); ++i)
    for (int j = 0; j < 4; ++j) eps(static_cast<Index>(i), j) = (ch.kraus()[i] * pauli_matrix(j)).trace() / 2.0;
  return eps;
}

bool validate_frozen_coefficients(const Eigen::Matrix4cd& eps) {
  std::vector<CMatrixd> kraus;
  for (Index i = 0; i < 4; ++i) {
    CMatrixd e = CMatrixd::Zero(2, 2);
    for (int j = 0; j < 4; ++j) e += eps(i, j) * pauli_matrix(j);
    kraus.push_back(e);
  }
  KrausChannel ch(std::move(kraus), "coefficients");  // throws on incompleteness

  constexpr double t = tol::condition;
  const Complex I(0, 1);
  auto near = [](double a, double b) { return std::abs(a - b) <= t; };

  // Quadratic sums that must vanish for T_10 = T_20 = 0 and a block-diagonal T^S.
  double re1 = 0, re2 = 0, im1 = 0, im2 = 0;
  for (Index i = 0; i < 4; ++i) {
    const Complex a = (eps(i, 0) + eps(i, 3)) * (std::conj(eps(i, 1)) - I * std::conj(eps(i, 2)));
    const Complex b = (std::conj(eps(i, 0)) - std::conj(eps(i, 3))) * (eps(i, 1) - I * eps(i, 2));
    re1 += a.real();
    im1 += a.imag();
    re2 += b.real();
    im2 += b.imag();
  }
  if (!(near(re1, 0) && near(re2, 0) && near(im1, 0) && near(im2, 0))) return false;

  auto zero_columns = [&](int j1, int j2) { return eps.col(j1).cwiseAbs().maxCoeff() <= t && eps.col(j2).cwiseAbs().maxCoeff() <= t; };

  // Pattern with only sigma_x, sigma_y components.
  if (zero_columns(0, 3)) {
    double plus = 0, minus = 0, diff = 0, cross = 0;
    for (Index i = 0; i < 4; ++i) {
      plus += std::norm(eps(i, 1) + I * eps(i, 2));
      minus += std::norm(eps(i, 1) - I * eps(i, 2));
      diff += std::norm(eps(i, 1)) - std::norm(eps(i, 2));
      cross += (std::conj(eps(i, 1)) * eps(i, 2)).real();
    }
    if (near(plus, 1) && near(minus, 1) && near(diff * diff + 4 * cross * cross, 1)) return true;
  }
  // Pattern with only I, sigma_z components.
  if (zero_columns(1, 2)) {
    double plus = 0, minus = 0, diff = 0, cross = 0;
    for (Index i = 0; i < 4; ++i) {
      plus += std::norm(eps(i, 0) + eps(i, 3));
      minus += std::norm(eps(i, 0) - eps(i, 3));
      diff += std::norm(eps(i, 0)) - std::norm(eps(i, 3));
      cross += (std::conj(eps(i, 3)) * eps(i, 0)).imag();
    }
    if (near(plus, 1) && near(minus, 1) && near(diff * diff + 4 * cross * cross, 1)) return true;
  }
  return false;
}

bool AuxSolve::nonnegative() const { return first_negative() < 0; }

Index AuxSolve::first_negative() const {
  for (Index mu = 0; mu < eps.size(); ++mu)
    if (eps(mu) < -1e-10) return mu;
  return -1;
}

RMatrixd aux_coefficients(int qubits) {
  const PauliTensorBasisd basis(qubits);
  const Index n = basis.size() + 1;
  const double scale = std::pow(2.0, 1 - qubits);
  RMatrixd c(n, n);
  for (Index nu = 0; nu < n; ++nu) {
    const auto dn = basis.augmented_digits(nu);
    for (Index mu = 0; mu < n; ++mu) {
      const auto dm = basis.augmented_digits(mu);
      int parity = 0;
      for (int k = 0; k < qubits; ++k) {
        const int a = dn[static_cast<std::size_t>(k)];
        const int b = dm[static_cast<std::size_t>(k)];
        if (a * b * (a - b) != 0) parity ^= 1;
      }
      c(nu, mu) = parity ? -scale : scale;
    }
  }
  return c;
}

AuxSolve solve_aux(const CMatrixd& rho, const RVectord& m, double chi, const PauliTensorBasisd& basis) {
  if (basis.qubits() > 3) throw InvalidDimension("aux_channel: at most 3 qubits supported");
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim()) throw DimensionMismatch("aux_channel: state dimension must be 2^N");
  if (m.size() != basis.size()) throw DimensionMismatch("aux_channel: target direction length must be 4^N - 1");

  AuxSolve out;
  out.qubits = basis.qubits();
  out.c = aux_coefficients(basis.qubits());
  out.source.resize(basis.size());
  out.q = RVectord::Zero(basis.size() + 1);
  out.q(0) = 1.0;
  for (Index nu = 0; nu < basis.size(); ++nu) {
    const double y = rho.cwiseProduct(basis[nu].transpose()).sum().real();
    out.source(nu) = y;
    if (std::abs(m(nu)) <= 1e-12) continue;  // annihilate coordinates absent from the target
    if (std::abs(y) <= 1e-10)
      throw UnreachableTarget("aux_channel: unreachable coordinate nu = " + std::to_string(nu + 1) +
                                  " (target nonzero, source coordinate vanishes)",
                              nu + 1);
    out.q(nu + 1) = chi * m(nu) / y;
  }
  out.eps = out.c.partialPivLu().solve(out.q);
  return out;
}

AuxChannel aux_channel(const CMatrixd& rho, const RVectord& m, double chi, const PauliTensorBasisd& basis) {
  AuxSolve s = solve_aux(rho, m, chi, basis);
  const Index bad = s.first_negative();
  if (bad >= 0)
    throw NotAChannel("aux_channel: eps_" + std::to_string(bad) + " = " + fmt(s.eps(bad)) + " < 0, no Kraus realization", bad);
  std::vector<CMatrixd> kraus;
  kraus.reserve(static_cast<std::size_t>(s.eps.size()));
  for (Index mu = 0; mu < s.eps.size(); ++mu) kraus.push_back(std::sqrt(std::max(0.0, s.eps(mu))) * basis.augmented(mu));
  KrausChannel ch(std::move(kraus), "aux", {{"chi", chi}});
  return {std::move(ch), std::move(s)};
}

AuxTarget random_reachable_target(const CMatrixd& rho, const PauliTensorBasisd& basis, std::uint64_t seed) {
  if (rho.rows() != basis.dim()) throw DimensionMismatch("random_reachable_target: state dimension must be 2^N");
  Rng rng(seed);
  AuxTarget out;
  out.eps = random_simplex(basis.size() + 1, rng) * std::pow(2.0, basis.qubits() - 1);
  const RVectord q = aux_coefficients(basis.qubits()) * out.eps;
  RVectord t(basis.size());
  for (Index nu = 0; nu < basis.size(); ++nu) t(nu) = q(nu + 1) * rho.cwiseProduct(basis[nu].transpose()).sum().real();
  out.chi = t.norm();
  if (out.chi <= 1e-12) throw UnreachableTarget("random_reachable_target: generated target is the maximally mixed state", 0);
  out.m = t / out.chi;
  return out;
}

KrausChannel random_channel(Index d, std::uint64_t seed, Index kraus_count) {
  if (d < 2) throw InvalidDimension("random_channel: dimension must be >= 2");
  const Index k = kraus_count > 0 ? kraus_count : d * d;
  Rng rng(seed);
  const CMatrixd v = haar_isometry(d * k, d, rng);
  std::vector<CMatrixd> kraus;
  for (Index mu = 0; mu < k; ++mu) kraus.push_back(v.block(mu * d, 0, d, d));
  return KrausChannel(std::move(kraus), "random");
}

KrausChannel random_unital_channel(Index d, std::uint64_t seed, Index kraus_count) {
  if (d < 2) throw InvalidDimension("random_unital_channel: dimension must be >= 2");
  const Index k = kraus_count > 0 ? kraus_count : d * d;
  Rng rng(seed);
  const RVectord w = random_simplex(k, rng);
  std::vector<CMatrixd> kraus;
  for (Index mu = 0; mu < k; ++mu) kraus.push_back(std::sqrt(w(mu)) * haar_unitary(d, rng));
  return KrausChannel(std::move(kraus), "random_unital");
}

KrausChannel random_diagonal_outer_channel(Index d, std::uint64_t seed) {
  if (d < 2) throw InvalidDimension("random_diagonal_outer_channel: dimension must be >= 2");
  Rng rng(seed);
  const KrausChannel unital = random_unital_channel(d, derive_seed(seed, 1), d);
  std::vector<CMatrixd> stochastic;
  for (Index j = 0; j < d; ++j) {
    const RVectord col = random_simplex(d, rng);
    for (Index i = 0; i < d; ++i) stochastic.push_back(std::sqrt(col(i)) * ket_bra(d, i, j));
  }
  KrausChannel out = compose(KrausChannel(std::move(stochastic), "stochastic"), unital);
  return KrausChannel(out.kraus(), "random_diagonal_outer");
}

}  // namespace qcoh
