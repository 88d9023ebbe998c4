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

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using boxdm::cli::Format;
using boxdm::cli::RunConfig;

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return boxdm::cli::kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "boxdm: cannot write " << path << "\n";
    return boxdm::cli::kExitUsage;
  }
  return boxdm::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix analysis of a particle split between two boxes", "boxdm"};
  app.require_subcommand(1);

  RunConfig cfg;
  double alpha_re = cfg.alpha.real();
  double alpha_im = cfg.alpha.imag();
  double beta_re = cfg.beta.real();
  double beta_im = cfg.beta.imag();
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"csv", Format::kCsv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Half-box index: the well starts in Psi_2k");
    sub->add_option("--alpha-re", alpha_re, "Real part of the box S1 amplitude");
    sub->add_option("--alpha-im", alpha_im, "Imaginary part of the box S1 amplitude");
    sub->add_option("--beta-re", beta_re, "Real part of the box S2 amplitude");
    sub->add_option("--beta-im", beta_im, "Imaginary part of the box S2 amplitude");
    sub->add_option("--cutoff", cfg.cutoff, "Largest level N in spectra");
    sub->add_option("--grid", cfg.grid, "Grid intervals for sampled wavefunctions");
    sub->add_option("--pmax", cfg.pmax, "Momentum range is [-pmax, pmax]");
    sub->add_option("--samples", cfg.samples, "Number of momentum samples");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Write to PATH instead of standard output");
  };

  CLI::App* scenario = app.add_subcommand("scenario", "Full boxes-plus-detector report");
  CLI::App* spectrum = app.add_subcommand("spectrum", "Energy distribution after recombination");
  CLI::App* momentum = app.add_subcommand("momentum", "Momentum density: formula vs transform");
  CLI::App* check = app.add_subcommand("check", "Run the invariant suite");
  for (CLI::App* sub : {scenario, spectrum, momentum}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? boxdm::cli::kExitOk : boxdm::cli::kExitUsage;
  }

  try {
    if (check->parsed()) {
      const auto results = boxdm::cli::run_checks();
      std::cout << boxdm::cli::format_checks(results);
      return boxdm::cli::check_exit_status(results);
    }
    cfg.alpha = {alpha_re, alpha_im};
    cfg.beta = {beta_re, beta_im};
    cfg.validate();
    if (scenario->parsed()) return emit(boxdm::cli::cmd_scenario(cfg), cfg.out);
    if (spectrum->parsed()) return emit(boxdm::cli::cmd_spectrum(cfg), cfg.out);
    return emit(boxdm::cli::cmd_momentum(cfg), cfg.out);
  } catch (const boxdm::cli::UsageError& e) {
    std::cerr << "boxdm: " << e.what() << "\n";
    return boxdm::cli::kExitUsage;
  } catch (const boxdm::ArgumentError& e) {
    std::cerr << "boxdm: " << e.what() << "\n";
    return boxdm::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "boxdm: " << e.what() << "\n";
    return boxdm::cli::kExitCheckFailed;
  }
}
