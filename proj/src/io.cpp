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

#include "qcoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qcoh::io {

namespace {

Complex entry_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("matrix entry must be a number or [re, im]");
}

CMatrixd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const Index n = static_cast<Index>(j.size());
  CMatrixd m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) throw ParseError("matrix must be square");
    for (Index c = 0; c < n; ++c) m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json matrix_to_json(const CMatrixd& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({round12(m(r, c).real()), round12(m(r, c).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  return std::stod(format12(v));
}

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json load_json(const std::string& source) {
  try {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return Json::parse(source);
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open '" + source + "'");
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

CMatrixd state_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("state must be a JSON object");
    if (j.contains("matrix")) {
      CMatrixd rho = matrix_from_json(j.at("matrix"));
      if (j.contains("d") && j.at("d").get<Index>() != rho.rows()) throw ParseError("state: 'd' does not match matrix size");
      validate_density(rho);
      return rho;
    }
    if (j.contains("bloch")) {
      const Index d = j.at("d").get<Index>();
      if (d < 2) throw ParseError("state: 'd' must be >= 2");
      const auto& arr = j.at("bloch");
      RVectord x(static_cast<Index>(arr.size()));
      for (std::size_t i = 0; i < arr.size(); ++i) x(static_cast<Index>(i)) = arr[i].get<double>();
      return bloch_compose(x, GeneratorBasisd(d), true);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("state: ") + e.what());
  }
  throw ParseError("state needs a 'matrix' or 'bloch' field");
}

Json state_to_json(const CMatrixd& rho) { return {{"d", rho.rows()}, {"matrix", matrix_to_json(rho)}}; }

Json state_to_bloch_json(const CMatrixd& rho) {
  const auto v = bloch_decompose(rho, GeneratorBasisd(rho.rows()));
  Json arr = Json::array();
  for (Index i = 0; i < v.x.size(); ++i) arr.push_back(round12(v.x(i)));
  return {{"d", rho.rows()}, {"bloch", arr}};
}

KrausChannel channel_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("channel must be a JSON object");
    if (j.contains("kraus")) {
      std::vector<CMatrixd> kraus;
      for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
      if (kraus.empty()) throw ParseError("channel: 'kraus' is empty");
      if (j.contains("d") && j.at("d").get<Index>() != kraus.front().rows()) throw ParseError("channel: 'd' does not match Kraus size");
      return KrausChannel(std::move(kraus), j.value("label", std::string("kraus")));
    }
    if (j.contains("name")) {
      ChannelSpec spec;
      spec.name = j.at("name").get<std::string>();
      spec.d = j.value("d", Index(2));
      if (j.contains("params"))
        for (const auto& [key, value] : j.at("params").items()) spec.params[key] = value.get<double>();
      return make_named(spec);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("channel: ") + e.what());
  }
  throw ParseError("channel needs a 'name' or 'kraus' field");
}

Json channel_to_json(const KrausChannel& ch) {
  Json kraus = Json::array();
  for (const auto& e : ch.kraus()) kraus.push_back(matrix_to_json(e));
  Json params = Json::object();
  for (const auto& [k, v] : ch.params()) params[k] = round12(v);
  return {{"label", ch.label()}, {"d", ch.dim()}, {"params", params}, {"kraus", kraus}};
}

StateFamilyd family_from_json(const Json& j) {
  try {
    StateFamilyd fam;
    fam.d = j.at("d").get<Index>();
    const auto& arr = j.at("n");
    fam.n.resize(static_cast<Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) fam.n(static_cast<Index>(i)) = arr[i].get<double>();
    fam.chi = j.value("chi", 1.0);
    check_family(fam);
    return fam;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("family: ") + e.what());
  }
}

Json family_to_json(const StateFamilyd& fam) {
  Json n = Json::array();
  for (Index i = 0; i < fam.n.size(); ++i) n.push_back(round12(fam.n(i)));
  return {{"d", fam.d}, {"n", n}, {"chi", round12(fam.chi)}};
}

Json transfer_to_json(const TransferMatrix& t) {
  Json rows = Json::array();
  for (Index r = 0; r < t.t.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < t.t.cols(); ++c) row.push_back(round12(t.t(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"d", t.d}, {"t", rows}};
}

TransferMatrix transfer_from_json(const Json& j) {
  try {
    TransferMatrix t;
    t.d = j.at("d").get<Index>();
    const auto& rows = j.at("t");
    const Index n = t.d * t.d;
    if (static_cast<Index>(rows.size()) != n) throw ParseError("transfer: expected d^2 rows");
    t.t.resize(n, n);
    for (Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Index>(row.size()) != n) throw ParseError("transfer: expected d^2 columns");
      for (Index c = 0; c < n; ++c) t.t(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("transfer: ") + e.what());
  }
}

Json report_to_json(const ReportRecord& rec) {
  Json j = {{"kind", rec.kind},
            {"seed", rec.seed},
            {"trial", rec.trial},
            {"d", rec.d},
            {"channel", rec.channel},
            {"lhs", round12(rec.report.lhs)},
            {"rhs", round12(rec.report.rhs)},
            {"abs_err", round12(rec.report.abs_err)},
            {"probe_physical", rec.report.probe_physical},
            {"condition_held", rec.report.condition_held}};
  if (rec.report.q) j["q"] = round12(*rec.report.q);
  return j;
}

ReportRecord report_from_json(const Json& j) {
  try {
    ReportRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.trial = j.at("trial").get<std::uint64_t>();
    rec.d = j.at("d").get<Index>();
    rec.channel = j.at("channel").get<std::string>();
    rec.report.lhs = j.at("lhs").get<double>();
    rec.report.rhs = j.at("rhs").get<double>();
    rec.report.abs_err = j.at("abs_err").get<double>();
    rec.report.probe_physical = j.at("probe_physical").get<bool>();
    rec.report.condition_held = j.at("condition_held").get<bool>();
    if (j.contains("q")) rec.report.q = j.at("q").get<double>();
    return rec;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::vector<ReportRecord> read_reports_jsonl(std::istream& in) {
  std::vector<ReportRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(report_from_json(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("report line: ") + e.what());
    }
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const FreezeTrajectory& traj) {
  out << "param,c_l1,purity\n";
  for (const auto& p : traj.points) out << format12(p.param) << ',' << format12(p.c_l1) << ',' << format12(p.purity) << '\n';
  out << "# frozen=" << (traj.frozen ? "true" : "false") << ",spread=" << format12(traj.spread) << '\n';
}

FreezeTrajectory read_sweep_csv(std::istream& in) {
  FreezeTrajectory traj;
  std::string line;
  if (!std::getline(in, line) || line != "param,c_l1,purity") throw ParseError("sweep csv: missing header");
  bool summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto f = line.find("frozen=");
      const auto s = line.find("spread=");
      if (f == std::string::npos || s == std::string::npos) throw ParseError("sweep csv: malformed summary row");
      traj.frozen = line.compare(f + 7, 4, "true") == 0;
      traj.spread = std::stod(line.substr(s + 7));
      summary = true;
      continue;
    }
    std::istringstream row(line);
    TrajectoryPoint p;
    char c1 = 0, c2 = 0;
    if (!(row >> p.param >> c1 >> p.c_l1 >> c2 >> p.purity) || c1 != ',' || c2 != ',') throw ParseError("sweep csv: malformed row '" + line + "'");
    traj.points.push_back(p);
  }
  if (!summary) throw ParseError("sweep csv: missing summary row");
  return traj;
}

std::vector<double> parse_range(const std::string& range) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(range);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw ParseError("range must look like a:b:step");
  if (!(step > 0) || b < a) throw ParseError("range needs step > 0 and b >= a");
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((b - a) / step + 1e-6));
  for (long long i = 0; i <= count; ++i) out.push_back(a + double(i) * step);
  return out;
}

}  // namespace qcoh::io
