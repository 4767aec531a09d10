// Copyright 2026 The mpsprep Authors
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

#include <sys/wait.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "mpsprep/serialize.hpp"

using mpsprep::json;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("mpsprep_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter));
  const fs::path err = dir / ("err" + std::to_string(counter++));
  const std::string cmd =
      std::string(MPSPREP_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

// Structural equality with a numeric tolerance, so last-bit noise does not break goldens.
void expect_json_near(const json& a, const json& b, const std::string& path = "$") {
  if (a.is_number() && b.is_number()) {
    EXPECT_NEAR(a.get<double>(), b.get<double>(), 1e-9) << path;
    return;
  }
  ASSERT_EQ(a.type(), b.type()) << path;
  if (a.is_object()) {
    ASSERT_EQ(a.size(), b.size()) << path;
    for (auto it = a.begin(); it != a.end(); ++it) {
      ASSERT_TRUE(b.contains(it.key())) << path << "." << it.key();
      expect_json_near(it.value(), b.at(it.key()), path + "." + it.key());
    }
  } else if (a.is_array()) {
    ASSERT_EQ(a.size(), b.size()) << path;
    for (std::size_t k = 0; k < a.size(); ++k) expect_json_near(a[k], b[k], path + "[" + std::to_string(k) + "]");
  } else {
    EXPECT_EQ(a, b) << path;
  }
}

void expect_golden(const std::string& args, const std::string& file) {
  const auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const json golden = json::parse(slurp(fs::path(MPSPREP_GOLDEN_DIR) / file));
  expect_json_near(json::parse(r.out), golden);
}

TEST(CliGolden, VerifyAklt) {
  expect_golden("verify --gallery aklt --n 3 --basis pauli2 --all-branches", "verify_aklt_n3.json");
}

TEST(CliGolden, SpectrumZ2) {
  expect_golden("spectrum --gallery z2_family --param g=-0.5", "spectrum_z2_g-0.5.json");
}

TEST(CliGolden, PushingGhz) {
  expect_golden("analyze-pushing --gallery ghz --d 2 --basis pauli2", "pushing_ghz_d2.json");
}

TEST(Cli, SeededRunsAreByteIdentical) {
  for (const std::string args : {"simulate --gallery a4_family --n 3 --seed 11",
                                 "sample --kind random --d 2 --D 2 --n 3 --seed 4 --count 2",
                                 "sample --kind spt --junk 2 --n 3 --seed 9"}) {
    const auto a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.code, 0) << args << a.err;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, SimulateReportsFidelity) {
  const auto r = run_cli("simulate --gallery z2_family --param g=0.3 --n 4 --seed 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("reports").size(), 1u);
  const json& rep = j.at("reports")[0];
  EXPECT_NEAR(rep.at("fidelity").get<double>(), 1.0, 1e-9);
  EXPECT_EQ(rep.at("wall_time_ms").get<double>(), 0.0);
  EXPECT_EQ(j.at("summary").at("branch_count").get<int>(), 1);
}

TEST(Cli, VerifyCsv) {
  const auto r = run_cli("verify --gallery ghz --d 3 --n 2 --all-branches --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = mpsprep::read_csv(r.out);
  ASSERT_GE(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"key", "value"}));
  bool saw_count = false;
  for (const auto& row : rows)
    if (row.size() == 2 && row[0] == "branch_count") {
      saw_count = true;
      EXPECT_EQ(row[1], "9");
    }
  EXPECT_TRUE(saw_count);
}

TEST(Cli, ProtocolTwoFromGallery) {
  const auto r = run_cli("verify --gallery majumdar_ghosh --n 2 --all-branches");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("summary").at("branch_count").get<int>(), 16);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Cli, ConstructAndGallery) {
  auto r = run_cli("construct --rep pauli2 --select 1,2,3 --phase 1=1.5707963267948966 --phase 2=3.141592653589793");
  ASSERT_EQ(r.code, 0) << r.err;
  const json c = json::parse(r.out);
  EXPECT_TRUE(c.at("constructed").at("certificate").at("pass").get<bool>());
  EXPECT_TRUE(c.at("pushing_complete").get<bool>());
  r = run_cli("gallery list --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(mpsprep::read_csv(r.out).size(), 9u);
  r = run_cli("gallery show z4xz2");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("name").get<std::string>(), "z4xz2");
}

TEST(Cli, WritesOutFile) {
  const fs::path path = fs::temp_directory_path() / ("mpsprep_cli_out_" + std::to_string(::getpid()) + ".json");
  const auto r = run_cli("spectrum --gallery aklt --out " + path.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(slurp(path));
  EXPECT_NEAR(j.at("xi").get<double>(), 1.0 / std::log(3.0), 1e-12);
  fs::remove(path);
}

TEST(Cli, ExitCodes) {
  auto r = run_cli("verify --bogus");
  EXPECT_EQ(r.code, 3);
  r = run_cli("");
  EXPECT_EQ(r.code, 3);
  r = run_cli("spectrum --gallery nope");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.err).at("error").get<std::string>(), "invalid_argument");
  r = run_cli("verify --gallery su3 --q 1 --n 2");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err).at("error").get<std::string>(), "invariant_violation");
  r = run_cli("spectrum --gallery aklt --out /nonexistent-dir/x/report.json");
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(json::parse(r.err).contains("message"));
  r = run_cli("verify --gallery aklt --n 6 --all-branches --budget 64");
  EXPECT_NE(r.code, 0);
}

}  // namespace
