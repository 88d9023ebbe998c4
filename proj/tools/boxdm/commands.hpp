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

#ifndef BOXDM_TOOLS_COMMANDS_HPP_
#define BOXDM_TOOLS_COMMANDS_HPP_

#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "boxdm/errors.hpp"
#include "canonical_json.hpp"

namespace boxdm::cli {

using Complex = std::complex<double>;

enum class Format { kJson, kCsv };

/// Exit statuses of the boxdm tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad command-line input; maps to kExitUsage.
class UsageError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

struct RunConfig {
  int k = 1;
  Complex alpha{1.0 / std::numbers::sqrt2, 0.0};
  Complex beta{-1.0 / std::numbers::sqrt2, 0.0};
  int cutoff = 201;
  std::size_t grid = 4096;
  double pmax = 40.0;
  std::size_t samples = 801;
  Format format = Format::kJson;
  std::string out;  // empty: standard output

  /// Throws UsageError for out-of-range fields. Amplitudes within 1e-9 of
  /// unit norm are rescaled to unit norm; anything further off is rejected.
  void validate();
};

/// Scenario report document (see README for the field list).
Json scenario_document(const RunConfig& cfg);
std::string cmd_scenario(const RunConfig& cfg);

struct SpectrumRow {
  int n;
  double energy;
  double weight;
  double weight_grid;
  double partial_sum;
  // k = 1 only: quoted closed form at l = N - 1, and at l = (N - 1)/2 for odd N.
  std::optional<double> closed_form_n_minus_1;
  std::optional<double> closed_form_odd_l;
};
std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg);
std::string cmd_spectrum(const RunConfig& cfg);

struct MomentumRow {
  double p;
  double paper;
  double oracle;
  double abs_diff;
};
struct MomentumTable {
  std::vector<MomentumRow> rows;
  double oracle_normalization;  // trapezoid over the sampled range
  double max_abs_diff;          // over rows with a finite paper value
};
MomentumTable momentum_table(const RunConfig& cfg);
std::string cmd_momentum(const RunConfig& cfg);

struct CheckResult {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
  // Informational lines record a measurement without gating the exit status.
  bool gating = true;
};

/// The cross-module invariant suite.
std::vector<CheckResult> run_checks();
std::string format_checks(const std::vector<CheckResult>& results);
/// kExitOk iff every gating check passed.
int check_exit_status(const std::vector<CheckResult>& results);

}  // namespace boxdm::cli

#endif  // BOXDM_TOOLS_COMMANDS_HPP_
