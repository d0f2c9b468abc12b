// Copyright 2026 The Boxwell Authors
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

#include <json.hpp>

#include <string>

#include "process.hpp"

using boxwell::testing::run_process;

namespace {

const std::string cli = BOXWELL_CLI_PATH;

}  // namespace

TEST_CASE("shift prints one row") {
  const auto r = run_process(cli + " shift --k 3 --n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3.00000e+00,0,even,") != std::string::npos);
  CHECK(r.out.find(",3.9108") != std::string::npos);

  const auto r2 = run_process(cli + " shift --k 6 --n 2 --format json");
  REQUIRE(r2.exit_code == 0);
  const auto json = nlohmann::json::parse(r2.out);
  CHECK(json[0]["shift_exact"].get<double>() == doctest::Approx(3.67e-12).epsilon(2e-3));
  CHECK(json[0]["method"] == "delta-iteration");
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run_process(cli + " shift --k -1 --n 0").exit_code == 2);
  CHECK(run_process(cli + " shift --k 3").exit_code == 2);
  CHECK(run_process(cli + " shift --k 3 --n -2").exit_code == 2);
  CHECK(run_process(cli + " shift --k 3 --n 0 --format xml").exit_code == 2);
  CHECK(run_process(cli + " spectrum --k 3 --levels 0").exit_code == 2);
  CHECK(run_process(cli + " bogus").exit_code == 2);
  CHECK(run_process(cli).exit_code == 2);
  CHECK(run_process("BOXWELL_MAX_TERMS=abc " + cli + " shift --k 3 --n 0").exit_code == 2);
}

TEST_CASE("numerical failure exits with 3") {
  CHECK(run_process("BOXWELL_MAX_TERMS=20 " + cli + " shift --k 8 --n 0").exit_code == 3);
  // an explicit flag beats the environment
  CHECK(run_process("BOXWELL_MAX_TERMS=20 " + cli + " shift --k 8 --n 0 --max-terms 2000").exit_code == 0);
}

TEST_CASE("tables") {
  const auto t1 = run_process(cli + " table1");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out.find("7.83") != std::string::npos);
  CHECK(t1.out.find("note:") == std::string::npos);  // data stream only

  const auto t2 = run_process(cli + " table2 --format json");
  REQUIRE(t2.exit_code == 0);
  const auto json = nlohmann::json::parse(t2.out);
  CHECK(json.size() == 8);
  CHECK(json[2]["shift_exact"].get<double>() == doctest::Approx(3.672e-9).epsilon(2e-3));

  const auto md = run_process(cli + " table2 --format markdown");
  CHECK(md.out.find("published C = 0.892") != std::string::npos);
}

TEST_CASE("spectrum with oracle") {
  const auto r = run_process(cli + " spectrum --k 8 --levels 3 --oracle --format json");
  REQUIRE(r.exit_code == 0);
  const auto json = nlohmann::json::parse(r.out);
  REQUIRE(json.size() == 3);
  for (const auto& row : json) {
    CHECK(std::abs(row["energy_fd"].get<double>() - row["energy_confined"].get<double>()) < 1e-8);
  }
  const auto one = run_process(cli + " spectrum --k 1 --levels 1");
  CHECK(one.out.find("1.29846e+00") != std::string::npos);
}
