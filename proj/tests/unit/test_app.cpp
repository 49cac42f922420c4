// Copyright 2026 The Tycoon Simulator Authors.
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tycoon/app/config.hpp"
#include "tycoon/app/csv.hpp"
#include "tycoon/app/experiment.hpp"
#include "tycoon/common/error.hpp"

using namespace tycoon;
using namespace tycoon::app;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("tycoon_unit_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("csv formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.333333");
  CHECK(format_double(123456789.0) == "1.23457e+08");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

  CsvTable empty{{"a", "b"}, {}};
  CHECK(to_csv(empty) == "a,b\n");
  CsvTable one{{"x", "y"}, {{"1", "2"}}};
  CHECK(to_csv(one, {"config-hash: 00"}) == "# config-hash: 00\nx,y\n1,2\n");
}

TEST_CASE("one host record is a two-line table") {
  host::HostSimConfig c;
  const host::HostMetrics m = host::run_host_sim(c);
  const std::string text = to_csv(host_metrics_table({c}, {m}));
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind("scheduler,web_share,yields,error,mean_latency_ms,utilization,seed\n", 0) == 0);
}

TEST_CASE("csv round trip") {
  CsvTable t{{"name", "value"}, {}};
  for (double v : {0.5, 1.0 / 7.0, 2.5e-9, 1234567.0}) {
    t.rows.push_back({"v,\"" + format_double(v) + "\"", format_double(v)});
  }
  const CsvTable back = parse_csv(to_csv(t, {"skipped"}));
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(back.rows[i] == t.rows[i]);
    CHECK(std::stod(back.rows[i][1]) == doctest::Approx(std::stod(t.rows[i][1])).epsilon(1e-6));
  }
  const fs::path dir = scratch("csv");
  fs::create_directories(dir);
  emit_csv(t, dir / "t.csv");
  CHECK(parse_csv(slurp(dir / "t.csv")).rows == t.rows);
  CHECK_THROWS_AS(emit_csv(t, dir / "missing" / "t.csv"), Error);
  fs::remove_all(dir);
}

TEST_CASE("config parsing") {
  const ExperimentConfig c =
      parse_config(R"({"experiment":"host","seeds":"3..5","host":{"scheduler":"auction_share"}})");
  CHECK(c.experiment == ExperimentKind::host);
  CHECK(c.resolved_seeds() == std::vector<std::uint64_t>{3, 4, 5});
  CHECK(c.host.scheduler == host::SchedulerKind::auction_share);

  auto code = [](const char* text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  CHECK(code(R"({"experiment":"table1","bogus":1})") == Errc::invalid_config);
  CHECK(code(R"({"host":{"weights":"heavy"}})") == Errc::invalid_config);
  CHECK(code(R"({"experiment":"nope"})") == Errc::invalid_config);
  CHECK(code("{not json") == Errc::invalid_config);
  CHECK(code(R"({"host":{"num_timeslices":0}})") == Errc::invalid_config);
}

TEST_CASE("seed defaults and ranges") {
  ExperimentConfig c;
  CHECK(c.resolved_seeds().size() == 30);
  c.experiment = ExperimentKind::figure1;
  CHECK(c.resolved_seeds().size() == 10);
  c.experiment = ExperimentKind::host;
  CHECK(c.resolved_seeds() == std::vector<std::uint64_t>{42});
  c.seeds = {7};
  c.repetitions = 3;
  CHECK(c.resolved_seeds() == std::vector<std::uint64_t>{7, 8, 9});
  CHECK(parse_seed_range("1..3") == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(parse_seed_range("9") == std::vector<std::uint64_t>{9});
  CHECK_THROWS_AS(parse_seed_range("5..1"), Error);
  CHECK_THROWS_AS(parse_seed_range("x"), Error);
}

TEST_CASE("overrides and hashing") {
  ExperimentConfig c;
  const std::string h0 = config_hash(c);
  apply_override(c, "host.request_probability=0.2");
  CHECK(c.host.request_probability == 0.2);
  apply_override(c, "market.behavior=strategic_market");
  CHECK(c.market.behavior == market::Behavior::strategic_market);
  CHECK(config_hash(c) != h0);
  CHECK_THROWS_AS(apply_override(c, "host.bogus=1"), Error);
  CHECK_THROWS_AS(apply_override(c, "novalue"), Error);

  // Runtime-only settings do not change the hash; the file round trip does not either.
  ExperimentConfig d = c;
  d.output_dir = "elsewhere";
  d.threads = 3;
  CHECK(config_hash(d) == config_hash(c));
  CHECK(config_hash(parse_config(canonical_json(c))) == config_hash(c));
}

TEST_CASE("table1 experiment writes five rows deterministically") {
  ExperimentConfig c;
  c.seeds = {1, 2};
  const fs::path a = scratch("t1a");
  const fs::path b = scratch("t1b");
  run_experiment(c, a);
  c.threads = 1;
  run_experiment(c, b);
  const std::string text = slurp(a / "table1.csv");
  CHECK(text.rfind("# config-hash: " + config_hash(c), 0) == 0);
  CHECK(parse_csv(text).rows.size() == 5);
  CHECK(text == slurp(b / "table1.csv"));
  CHECK(slurp(a / "table1_runs.csv") == slurp(b / "table1_runs.csv"));
  CHECK(table1_rows().size() == 5);
  fs::remove_all(a);
  fs::remove_all(b);
}
