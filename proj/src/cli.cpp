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

#include "qcoh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "qcoh/io.hpp"
#include "qcoh/random.hpp"

namespace qcoh::cli {

namespace {

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  double tol = -1;  // < 0 selects the per-command default
  std::string out_path;
  std::string format = "jsonl";
};

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParseError("cannot open output '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string default_sweep_param(const std::string& name) {
  if (name == "depolarizing" || name == "pauli") return "p";
  if (name == "amplitude_damping" || name == "amplitude_damping_x" || name == "generalized_amplitude_damping") return "gamma";
  return "q";
}

int cmd_coherence(const std::string& state_src, std::ostream& out) {
  const CMatrixd rho = io::state_from_json(io::load_json(state_src));
  out << "C_l1 = " << fixed12(l1_from_density(rho)) << '\n';
  out << "purity = " << fixed12(purity_measure(rho)) << '\n';
  if (rho.rows() == 4) {
    const auto cm = correlation_measures(rho);
    out << "bell_max = " << fixed12(cm.bell_max) << '\n';
    out << "rsp_fidelity = " << fixed12(cm.rsp_fidelity) << '\n';
    out << "teleport_n = " << fixed12(cm.teleport_n) << '\n';
    out << "teleport_fidelity = " << fixed12(cm.teleport_fidelity) << '\n';
    out << "geometric_discord2 = " << fixed12(geometric_discord2(rho)) << '\n';
    out << "min2 = " << fixed12(min2(rho)) << '\n';
    out << "hellinger_discord = " << fixed12(hellinger_discord(rho)) << '\n';
  }
  return kPass;
}

void write_report(std::ostream& os, const io::ReportRecord& rec, const std::string& format, bool header) {
  if (format == "jsonl") {
    os << io::report_to_json(rec).dump() << '\n';
    return;
  }
  if (header) os << "kind,seed,trial,d,channel,lhs,rhs,abs_err,probe_physical,condition_held,q\n";
  os << rec.kind << ',' << rec.seed << ',' << rec.trial << ',' << rec.d << ',' << rec.channel << ','
     << io::format12(rec.report.lhs) << ',' << io::format12(rec.report.rhs) << ',' << io::format12(rec.report.abs_err) << ','
     << (rec.report.probe_physical ? "true" : "false") << ',' << (rec.report.condition_held ? "true" : "false") << ','
     << (rec.report.q ? io::format12(*rec.report.q) : std::string()) << '\n';
}

int cmd_verify(const std::string& kind, const std::string& channel_src, const std::string& measure_name, bool expect_violation,
               const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const KrausChannel ch = io::channel_from_json(io::load_json(channel_src));
  const Index d = ch.dim();
  const double tol = cfg.tol >= 0 ? cfg.tol : (kind == "corollary2" ? tol::condition : tol::factorization);
  const Measure measure = parse_measure(measure_name);

  std::unique_ptr<PauliTensorBasisd> ybasis;
  if (kind == "cascade") {
    int n = 0;
    while ((Index(1) << n) < d) ++n;
    if ((Index(1) << n) != d || n > 3) throw InvalidDimension("cascade: channel dimension must be 2^N with N <= 3");
    ybasis = std::make_unique<PauliTensorBasisd>(n);
  } else if (kind != "theorem1" && kind != "lemma1" && kind != "corollary2") {
    throw ParseError("unknown verification kind '" + kind + "'");
  }

  Sink sink(cfg.out_path, out);
  ProbeCache cache;
  std::size_t violations = 0;
  double max_err = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t s = derive_seed(cfg.seed, trial);
    io::ReportRecord rec{kind, cfg.seed, trial, d, ch.label(), {}};
    if (kind == "theorem1") {
      rec.report = verify_theorem1(ch, random_family(d, s), cache);
    } else if (kind == "lemma1") {
      rec.report = verify_lemma1(measure, ch, random_family(d, s));
      rec.kind = "lemma1:" + to_string(measure);
    } else if (kind == "corollary2") {
      rec.report = verify_corollary2(ch, random_state(d, s));
    } else {
      const CMatrixd rho = random_state(d, s);
      const AuxTarget target = random_reachable_target(rho, *ybasis, derive_seed(s, 1));
      rec.report = verify_cascade(ch, rho, target.m, target.chi);
    }
    max_err = std::max(max_err, rec.report.abs_err);
    if (rec.report.abs_err > tol) ++violations;
    write_report(sink.get(), rec, cfg.format, trial == 0);
  }
  err << "verify " << kind << ": trials=" << cfg.trials << " max_abs_err=" << io::format12(max_err) << " violations=" << violations
      << " tol=" << io::format12(tol) << '\n';
  if (expect_violation) return violations > 0 ? kPass : kFail;
  return violations == 0 ? kPass : kFail;
}

int cmd_sweep(const std::string& name, const std::string& range, const std::string& state_src, std::string param, Index d,
              const std::vector<std::string>& sets, const RunConfig& cfg, std::ostream& out) {
  ChannelSpec spec{name, d, {}};
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("--set expects key=value");
    try {
      spec.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("--set value for '" + kv.substr(0, eq) + "' is not a number");
    }
  }
  if (param.empty()) param = default_sweep_param(name);
  const std::vector<double> grid = io::parse_range(range);
  const CMatrixd rho = io::state_from_json(io::load_json(state_src));
  const FreezeTrajectory traj = freeze_trajectory(spec, param, grid, rho);

  Sink sink(cfg.out_path, out);
  if (cfg.format == "jsonl") {
    for (const auto& p : traj.points)
      sink.get() << io::Json{{"param", io::round12(p.param)}, {"c_l1", io::round12(p.c_l1)}, {"purity", io::round12(p.purity)}}.dump()
                 << '\n';
    sink.get() << io::Json{{"frozen", traj.frozen}, {"spread", io::round12(traj.spread)}}.dump() << '\n';
  } else {
    io::write_sweep_csv(sink.get(), traj);
  }
  return kPass;
}

int cmd_construct_aux(const std::string& state_src, const std::string& target, double chi, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  const CMatrixd rho = io::state_from_json(io::load_json(state_src));
  int n = 0;
  while ((Index(1) << n) < rho.rows()) ++n;
  if ((Index(1) << n) != rho.rows() || n > 3) throw InvalidDimension("construct-aux: state must be an N-qubit state, N <= 3");
  const PauliTensorBasisd basis(n);

  std::vector<double> values;
  std::stringstream ss(target);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError("--target must be a comma-separated list of numbers");
    }
  }
  RVectord m = Eigen::Map<RVectord>(values.data(), static_cast<Index>(values.size()));
  if (m.size() != basis.size()) throw ParseError("--target needs 4^N - 1 = " + std::to_string(basis.size()) + " components");
  if (m.norm() <= 1e-12) throw ParseError("--target must be nonzero");
  m /= m.norm();

  AuxSolve solve;
  try {
    solve = solve_aux(rho, m, chi, basis);
  } catch (const UnreachableTarget& e) {
    err << "error: unreachable coordinate nu=" << e.index() << '\n';
    return kFail;
  }
  out << "eps =";
  for (Index mu = 0; mu < solve.eps.size(); ++mu) out << ' ' << io::format12(io::round12(solve.eps(mu)));
  out << '\n' << "nonnegative = " << (solve.nonnegative() ? "true" : "false") << '\n';
  if (!solve.nonnegative()) {
    err << "error: eps_" << solve.first_negative() << " is negative, no Kraus realization at mu=" << solve.first_negative() << '\n';
    return kFail;
  }
  const AuxChannel aux = aux_channel(rho, m, chi, basis);
  if (cfg.out_path.empty()) {
    out << io::channel_to_json(aux.channel).dump() << '\n';
  } else {
    Sink sink(cfg.out_path, out);
    sink.get() << io::channel_to_json(aux.channel).dump(2) << '\n';
  }
  return kPass;
}

int cmd_transfer(const std::string& channel_src, const RunConfig& cfg, std::ostream& out) {
  const KrausChannel ch = io::channel_from_json(io::load_json(channel_src));
  Sink sink(cfg.out_path, out);
  sink.get() << io::transfer_to_json(transfer_matrix(ch)).dump() << '\n';
  return kPass;
}

int cmd_freeze_check(const std::string& channel_src, const std::string& family_src, std::ostream& out) {
  const KrausChannel ch = io::channel_from_json(io::load_json(channel_src));
  const TransferMatrix t = transfer_matrix(ch);
  std::optional<StateFamilyd> fam;
  if (!family_src.empty()) fam = io::family_from_json(io::load_json(family_src));
  const bool cond = theorem1_condition(t);
  out << "theorem1_condition = " << (cond ? "true" : "false") << '\n';
  if (!cond) throw NotApplicable("freeze-check: channel has T_k0 != 0 on an off-diagonal row");
  const bool frozen = frozen_condition_check(t, fam);
  out << "frozen = " << (frozen ? "true" : "false") << '\n';
  return frozen ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence evolution toolkit: l1 coherence, channel transfer matrices, factorization checks", "qcoh"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "base RNG seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "number of random trials")->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance override");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));

  std::string state_src, channel_src, family_src, kind, measure = "l1", range, param, target;
  bool expect_violation = false;
  Index dim = 2;
  double chi = 0;
  std::vector<std::string> sets;

  auto* coherence = app.add_subcommand("coherence", "print coherence and state measures");
  coherence->add_option("state", state_src, "state JSON file or inline JSON")->required();

  auto* verify = app.add_subcommand("verify", "batch-verify a factorization relation on random inputs");
  verify->add_option("kind", kind, "theorem1 | lemma1 | corollary2 | cascade")
      ->required()
      ->check(CLI::IsMember({"theorem1", "lemma1", "corollary2", "cascade"}));
  verify->add_option("--channel", channel_src, "channel JSON file or inline JSON")->required();
  verify->add_option("--measure", measure, "measure for lemma1")->capture_default_str();
  verify->add_flag("--expect-violation", expect_violation, "succeed iff some trial violates the relation");

  auto* sweep = app.add_subcommand("sweep", "coherence along a channel parameter");
  sweep->add_option("channel", channel_src, "named channel")->required();
  sweep->add_option("range", range, "a:b:step")->required();
  sweep->add_option("state", state_src, "state JSON file or inline JSON")->required();
  sweep->add_option("--param", param, "swept parameter (default depends on channel)");
  sweep->add_option("--dim", dim, "channel dimension")->capture_default_str();
  sweep->add_option("--set", sets, "fixed parameter key=value");

  auto* aux = app.add_subcommand("construct-aux", "build the auxiliary channel onto a target family member");
  aux->add_option("state", state_src, "N-qubit state JSON file or inline JSON")->required();
  aux->add_option("--target", target, "comma-separated direction m (normalized)")->required();
  aux->add_option("--chi", chi, "target length chi")->required();

  auto* transfer = app.add_subcommand("transfer", "dump the transfer matrix T of a channel");
  transfer->add_option("channel", channel_src, "channel JSON file or inline JSON")->required();

  auto* freeze = app.add_subcommand("freeze-check", "decide the block-orthogonality freezing condition");
  freeze->add_option("channel", channel_src, "channel JSON file or inline JSON")->required();
  freeze->add_option("--family", family_src, "family JSON {d, n, chi} enabling the relaxed test");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (sweep->parsed() && app.count("--format") == 0) cfg.format = "csv";

  try {
    if (coherence->parsed()) return cmd_coherence(state_src, out);
    if (verify->parsed()) return cmd_verify(kind, channel_src, measure, expect_violation, cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(channel_src, range, state_src, param, dim, sets, cfg, out);
    if (aux->parsed()) return cmd_construct_aux(state_src, target, chi, cfg, out, err);
    if (transfer->parsed()) return cmd_transfer(channel_src, cfg, out);
    if (freeze->parsed()) return cmd_freeze_check(channel_src, family_src, out);
  } catch (const UnreachableTarget& e) {
    err << "error: unreachable coordinate nu=" << e.index() << ": " << e.what() << '\n';
    return kFail;
  } catch (const NotAChannel& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qcoh::cli
