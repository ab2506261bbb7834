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

#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "qcoh/io.hpp"

using namespace qcoh;
using namespace qcoh::io;
using testing::max_abs;
using M = Eigen::MatrixXcd;

TEST_CASE("round12 and format12") {
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(format12(1.0 / 3.0) == "0.333333333333");
  CHECK(format12(2.0) == "2");
  CHECK(round12(0.0) == 0.0);
}

TEST_CASE("state JSON") {
  SUBCASE("matrix form with complex and plain entries") {
    const auto j = Json::parse(R"({"d": 2, "matrix": [[0.5, [0.0, -0.5]], [[0.0, 0.5], 0.5]]})");
    const M rho = state_from_json(j);
    CHECK(rho(0, 1) == std::complex<double>(0, -0.5));
    CHECK(rho(1, 1) == std::complex<double>(0.5, 0));
  }
  SUBCASE("bloch form") {
    const M rho = state_from_json(Json::parse(R"({"d": 2, "bloch": [1, 0, 0]})"));
    CHECK(max_abs(rho - M::Constant(2, 2, 0.5)) < 1e-15);
  }
  SUBCASE("round trips") {
    const M rho = random_state(3, 5);
    CHECK(max_abs(state_from_json(state_to_json(rho)) - rho) < 1e-11);
    CHECK(max_abs(state_from_json(state_to_bloch_json(rho)) - rho) < 1e-11);
    CHECK(max_abs(state_from_json(Json::parse(state_to_json(rho).dump())) - rho) < 1e-11);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"d": 2})")), ParseError);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"d": 2, "bloch": [1, 0]})")), DimensionMismatch);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"d": 2, "bloch": [2, 0, 0]})")), UnphysicalState);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"d": 3, "matrix": [[1, 0], [0, 0]]})")), Error);
  }
}

TEST_CASE("load_json") {
  CHECK(load_json(R"({"d": 2})").at("d") == 2);
  CHECK_THROWS_AS(load_json("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(load_json("{not json"), ParseError);
}

TEST_CASE("channel JSON") {
  SUBCASE("named") {
    const auto ch = channel_from_json(Json::parse(R"({"name": "gell_mann_G", "d": 3, "params": {"q": 0.2, "q0": 0.5}})"));
    CHECK(ch.dim() == 3);
    CHECK(ch.label() == "gell_mann_G");
    CHECK(ch.params().at("q0") == 0.5);
  }
  SUBCASE("explicit Kraus set round trip") {
    const auto ch = random_channel(2, 3);
    const auto back = channel_from_json(Json::parse(channel_to_json(ch).dump()));
    REQUIRE(back.kraus().size() == ch.kraus().size());
    for (std::size_t i = 0; i < ch.kraus().size(); ++i) CHECK(max_abs(back.kraus()[i] - ch.kraus()[i]) < 1e-11);
  }
  CHECK_THROWS_AS(channel_from_json(Json::parse(R"({"d": 2})")), ParseError);
  CHECK_THROWS_AS(channel_from_json(Json::parse(R"({"kraus": [[[0.5, 0], [0, 0.5]]]})")), InvalidChannel);
}

TEST_CASE("family JSON") {
  const auto fam = random_family(3, 2);
  const auto back = family_from_json(Json::parse(family_to_json(fam).dump()));
  CHECK(back.d == 3);
  CHECK((back.n - fam.n).cwiseAbs().maxCoeff() < 1e-11);
  CHECK(std::abs(back.chi - fam.chi) < 1e-11);
}

TEST_CASE("transfer JSON") {
  const auto t = transfer_matrix(random_channel(3, 1));
  const auto j = transfer_to_json(t);
  CHECK(j.at("t").size() == 9);
  CHECK(j.at("t")[0][0] == 1.0);
  const auto back = transfer_from_json(Json::parse(j.dump()));
  CHECK((back.t - t.t).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("report JSONL round trip") {
  std::stringstream ss;
  std::vector<ReportRecord> recs;
  for (std::uint64_t i = 0; i < 3; ++i) {
    ReportRecord r{"theorem1", 42, i, 3, "depolarizing", {}};
    r.report.lhs = 0.1 * double(i);
    r.report.rhs = 0.1 * double(i) + 1e-13;
    r.report.abs_err = 1e-13;
    r.report.condition_held = true;
    if (i == 1) r.report.q = 0.25;
    recs.push_back(r);
    ss << report_to_json(r).dump() << "\n";
  }
  const auto back = read_reports_jsonl(ss);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back[i].kind == "theorem1");
    CHECK(back[i].trial == i);
    CHECK(back[i].d == 3);
    CHECK(back[i].report.lhs == round12(recs[i].report.lhs));
    CHECK(back[i].report.condition_held);
  }
  CHECK(back[1].report.q.value() == 0.25);
  CHECK_FALSE(back[0].report.q.has_value());
}

TEST_CASE("sweep CSV round trip") {
  FreezeTrajectory tr;
  tr.points = {{0.0, 0.5, 0.1}, {0.5, 0.5, 0.2}, {1.0, 0.5, 0.3}};
  tr.spread = 0;
  tr.frozen = true;
  std::stringstream ss;
  write_sweep_csv(ss, tr);
  const std::string text = ss.str();
  CHECK(text.rfind("param,c_l1,purity\n", 0) == 0);
  CHECK(text.find("# frozen=true") != std::string::npos);
  const auto back = read_sweep_csv(ss);
  REQUIRE(back.points.size() == 3);
  CHECK(back.points[2].purity == 0.3);
  CHECK(back.frozen);
}

TEST_CASE("parse_range") {
  const auto r = parse_range("0:1:0.25");
  REQUIRE(r.size() == 5);
  CHECK(r.back() == 1.0);
  CHECK(parse_range("0:1:0.01").size() == 101);
  CHECK(parse_range("0.5:0.5:0.1").size() == 1);
  CHECK_THROWS_AS(parse_range("0:1"), ParseError);
  CHECK_THROWS_AS(parse_range("0:1:0"), ParseError);
  CHECK_THROWS_AS(parse_range("1:0:0.1"), ParseError);
  CHECK_THROWS_AS(parse_range("a:b:c"), ParseError);
}
