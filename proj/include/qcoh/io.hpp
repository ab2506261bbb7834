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

#ifndef QCOH_IO_HPP
#define QCOH_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcoh/factorization.hpp"

namespace qcoh::io {

using Json = nlohmann::json;

/// Rounds to 12 significant digits, the precision of every number written out.
double round12(double v);

/// Parses inline JSON when `source` starts with '{', otherwise reads the file.
Json load_json(const std::string& source);

/// {"d": int, "matrix": [[[re, im], ...], ...]} or {"d": int, "bloch": [...]}.
/// The result is validated as a density matrix.
CMatrixd state_from_json(const Json& j);
Json state_to_json(const CMatrixd& rho);
Json state_to_bloch_json(const CMatrixd& rho);

/// {"name": ..., "d": int, "params": {...}} or {"kraus": [matrix, ...]}.
KrausChannel channel_from_json(const Json& j);
Json channel_to_json(const KrausChannel& ch);

/// {"d": int, "n": [...], "chi": real}
StateFamilyd family_from_json(const Json& j);
Json family_to_json(const StateFamilyd& fam);

/// {"d": int, "t": [[row 0], [row 1], ...]} with row 0 for X_0.
Json transfer_to_json(const TransferMatrix& t);
TransferMatrix transfer_from_json(const Json& j);

struct ReportRecord {
  std::string kind;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  Index d = 0;
  std::string channel;
  FactorizationReport report;
};

Json report_to_json(const ReportRecord& rec);
ReportRecord report_from_json(const Json& j);
std::vector<ReportRecord> read_reports_jsonl(std::istream& in);

/// Sweep output: header "param,c_l1,purity", one row per point, then a
/// comment row "# frozen=<bool>,spread=<value>".
void write_sweep_csv(std::ostream& out, const FreezeTrajectory& traj);
FreezeTrajectory read_sweep_csv(std::istream& in);

/// "a:b:step" -> a, a+step, ..., up to b inclusive (within step/1e6).
std::vector<double> parse_range(const std::string& range);

/// %.12g formatting.
std::string format12(double v);

}  // namespace qcoh::io

#endif  // QCOH_IO_HPP
