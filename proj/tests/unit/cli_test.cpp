// Copyright 2026 The boxdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "canonical_json.hpp"
#include "commands.hpp"

namespace boxdm::cli {
namespace {

int run_tool(const std::string& args) {
  const std::string cmd = std::string(BOXDM_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

RunConfig small_config() {
  RunConfig cfg;
  cfg.cutoff = 12;
  cfg.samples = 33;
  return cfg;
}

TEST(FormatDoubleTest, SeventeenDigitsAndRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(3.14159e-5), "3.1415899999999999e-05");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mantissa(rng), exponent(rng));
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
}

TEST(CanonicalJsonTest, ReportsRoundTripByteIdentical) {
  const RunConfig cfg = small_config();
  for (const std::string& text : {cmd_scenario(cfg), cmd_spectrum(cfg), cmd_momentum(cfg)}) {
    const Json parsed = Json::parse(text);
    EXPECT_EQ(dump_canonical(parsed), text);
    EXPECT_EQ(text.back(), '\n');
  }
}

TEST(CanonicalJsonTest, NonFiniteBecomesNull) {
  const Json doc{{"x", std::numeric_limits<double>::infinity()}, {"y", 1.5}};
  EXPECT_EQ(dump_canonical(doc), "{\n  \"x\": null,\n  \"y\": 1.5\n}\n");
}

TEST(ScenarioCommandTest, DefaultsGiveHalfAndUnchangedBoxOne) {
  const Json doc = scenario_document(small_config());
  EXPECT_NEAR(doc["probabilities"]["box2_occupied"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(doc["probabilities"]["detector_yes"].get<double>(), 0.5, 1e-12);
  EXPECT_LE(doc["box1_comparison"]["max_abs_deviation"].get<double>(), 1e-12);
  EXPECT_TRUE(doc["box1_comparison"]["unchanged"].get<bool>());
  const Json& box1 = doc["states"]["box1_before"];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(box1["re"][i][j].get<double>(), i == j ? 0.5 : 0.0, 1e-12);
      EXPECT_NEAR(box1["im"][i][j].get<double>(), 0.0, 1e-12);
    }
  }
  EXPECT_NEAR(doc["purity"]["box1_before"].get<double>(), 0.5, 1e-12);
}

TEST(ScenarioCommandTest, UnequalAmplitudes) {
  RunConfig cfg = small_config();
  cfg.alpha = 0.6;
  cfg.beta = 0.8;
  cfg.validate();
  const Json doc = scenario_document(cfg);
  EXPECT_NEAR(doc["probabilities"]["box2_occupied"].get<double>(), 0.64, 1e-12);
  EXPECT_NEAR(doc["probabilities"]["box2_empty"].get<double>(), 0.36, 1e-12);
  // Tr rho_1^2 = |alpha|^4 + |beta|^4 for the reduced box state.
  EXPECT_NEAR(doc["purity"]["box1_before"].get<double>(), 0.36 * 0.36 + 0.64 * 0.64, 1e-12);
}

TEST(ScenarioCommandTest, ParticleCertainlyInBoxOne) {
  RunConfig cfg = small_config();
  cfg.alpha = 1.0;
  cfg.beta = 0.0;
  cfg.validate();
  const Json doc = scenario_document(cfg);
  for (const auto& [key, value] : doc["purity"].items()) {
    EXPECT_NEAR(value.get<double>(), 1.0, 1e-12) << key;
  }
  EXPECT_NEAR(doc["probabilities"]["detector_yes"].get<double>(), 0.0, 1e-12);
  for (const Json& entry : doc["conditional"]) {
    const std::string sel = entry["selection"].get<std::string>();
    if (sel == "box2_occupied" || sel == "detector_yes") {
      EXPECT_TRUE(entry.contains("error")) << sel;
      EXPECT_FALSE(entry.contains("state")) << sel;
    } else {
      EXPECT_NEAR(entry["probability"].get<double>(), 1.0, 1e-12) << sel;
    }
  }
}

TEST(ScenarioCommandTest, CsvIsFlattenedDocument) {
  RunConfig cfg = small_config();
  cfg.format = Format::kCsv;
  const auto lines = lines_of(cmd_scenario(cfg));
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(), "key,value");
  bool found = false;
  for (const auto& line : lines) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 1) << line;
    if (line.rfind("probabilities.box2_occupied,", 0) == 0) {
      found = true;
      EXPECT_NEAR(std::stod(line.substr(line.find(',') + 1)), 0.5, 1e-12);
    }
  }
  EXPECT_TRUE(found);
}

TEST(SpectrumCommandTest, RowsForFirstHalfBoxState) {
  RunConfig cfg = small_config();
  const auto rows = spectrum_rows(cfg);
  ASSERT_EQ(rows.size(), 12U);
  double running = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, static_cast<int>(i) + 1);
    running += rows[i].weight;
    EXPECT_NEAR(rows[i].partial_sum, running, 1e-15);
    EXPECT_NEAR(rows[i].weight, rows[i].weight_grid, 1e-8);
    ASSERT_TRUE(rows[i].closed_form_n_minus_1.has_value());
    EXPECT_EQ(rows[i].closed_form_odd_l.has_value(), rows[i].n % 2 == 1);
  }
  EXPECT_NEAR(rows[1].weight, 0.5, 1e-10);
  EXPECT_NEAR(rows[0].weight, 0.36025309739497874, 1e-12);
  // N = 3 is not empty: 32 / (25 pi^2).
  EXPECT_NEAR(rows[2].weight, 0.12969111506219236, 1e-12);
}

TEST(SpectrumCommandTest, CsvHeaderAndDecimalPoint) {
  RunConfig cfg = small_config();
  cfg.k = 2;
  cfg.format = Format::kCsv;
  const auto lines = lines_of(cmd_spectrum(cfg));
  ASSERT_EQ(lines.size(), 13U);
  EXPECT_EQ(lines[0],
            "N,energy,weight,weight_grid,partial_sum,closed_form_l_eq_N_minus_1,"
            "closed_form_l_eq_half_N_minus_1");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 6);
    // Closed-form columns only exist for k = 1.
    EXPECT_EQ(lines[i].substr(lines[i].size() - 2), ",,");
  }
  EXPECT_EQ(lines[4].rfind("4,19.739208802178716,", 0), 0U) << lines[4];
}

TEST(SpectrumCommandTest, CutoffBelowTwoKIsRejected) {
  RunConfig cfg;
  cfg.k = 3;
  cfg.cutoff = 5;
  EXPECT_THROW(cfg.validate(), UsageError);
}

TEST(RunConfigTest, AmplitudeNormalization) {
  RunConfig near;
  near.alpha = 0.6 + 1e-10;
  near.beta = 0.8;
  EXPECT_NO_THROW(near.validate());
  EXPECT_NEAR(std::norm(near.alpha) + std::norm(near.beta), 1.0, 1e-15);

  RunConfig off;
  off.alpha = 0.6;
  off.beta = 0.81;
  EXPECT_THROW(off.validate(), UsageError);
}

TEST(MomentumCommandTest, SymmetricRowsAndFooter) {
  RunConfig cfg = small_config();
  cfg.pmax = 12.0;
  const MomentumTable t = momentum_table(cfg);
  ASSERT_EQ(t.rows.size(), 33U);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[t.rows.size() - 1 - i];
    EXPECT_EQ(a.p, -b.p);
    EXPECT_NEAR(a.oracle, b.oracle, 1e-10);
    EXPECT_GE(a.oracle, 0.0);
  }
  EXPECT_EQ(t.rows[16].p, 0.0);

  cfg.format = Format::kCsv;
  const auto lines = lines_of(cmd_momentum(cfg));
  ASSERT_EQ(lines.size(), 35U);
  EXPECT_EQ(lines.front(), "p,paper,oracle,abs_diff");
  EXPECT_EQ(lines.back(), "summary,," + format_double(t.oracle_normalization) + "," +
                              format_double(t.max_abs_diff));
}

TEST(MomentumCommandTest, DefaultRangeNormalizesWithZeroMean) {
  const MomentumTable t = momentum_table(RunConfig{});
  EXPECT_NEAR(t.oracle_normalization, 1.0, 1e-3);
  double mean = 0.0;
  for (const auto& r : t.rows) mean += r.p * r.oracle;
  EXPECT_NEAR(mean, 0.0, 1e-12);
}

TEST(CheckSuiteTest, LinesAndExitStatus) {
  std::vector<CheckResult> results{{"a", 1e-14, 1e-12, true, true},
                                   {"b", 0.3, 1e-12, false, false}};
  EXPECT_EQ(check_exit_status(results), kExitOk);
  EXPECT_EQ(format_checks(results),
            "PASS a deviation=1.000e-14 tol=1.000e-12\n"
            "INFO b measured=3.000e-01 reference=1.000e-12\n"
            "1/1 invariants passed\n");
  results.push_back({"c", 2e-3, 1e-3, false, true});
  EXPECT_EQ(check_exit_status(results), kExitCheckFailed);
}

TEST(ExecutableTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_tool("scenario --alpha-re 0.9"), kExitUsage);
  EXPECT_EQ(run_tool("spectrum --k 3 --cutoff 4"), kExitUsage);
  EXPECT_EQ(run_tool("momentum --samples 4"), kExitUsage);
  EXPECT_EQ(run_tool("scenario --format xml"), kExitUsage);
  EXPECT_EQ(run_tool("frobnicate"), kExitUsage);
  EXPECT_EQ(run_tool(""), kExitUsage);
}

TEST(ExecutableTest, OutFileMatchesLibraryOutput) {
  const auto path = std::filesystem::temp_directory_path() / "boxdm_cli_test_spectrum.csv";
  std::filesystem::remove(path);
  ASSERT_EQ(run_tool("spectrum --cutoff 12 --format csv --out " + path.string()), kExitOk);
  RunConfig cfg = small_config();
  cfg.format = Format::kCsv;
  EXPECT_EQ(slurp(path), cmd_spectrum(cfg));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace boxdm::cli
