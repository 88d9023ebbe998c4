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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boxdm/boxwell.hpp"
#include "boxdm/density.hpp"
#include "boxdm/scenario.hpp"

namespace boxdm::cli {
namespace {

constexpr double kAmplitudeTolerance = 1e-9;

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_json(const hilbert::ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json weights_json(const boxwell::SpectralDistribution& d) {
  Json out = Json::array();
  for (int n = 1; n <= d.cutoff(); ++n) out.push_back(d.weight(n));
  return out;
}

std::string render(const Json& doc, Format format) {
  return format == Format::kJson ? dump_canonical(doc) : flatten_csv(doc);
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

void RunConfig::validate() {
  if (k < 1) throw UsageError("--k must be >= 1");
  if (cutoff < 2 * k) {
    throw UsageError("--cutoff must be >= 2k (" + std::to_string(2 * k) + ")");
  }
  if (grid < boxwell::kMinGridIntervals || grid % 2 != 0) {
    throw UsageError("--grid must be an even number >= 64");
  }
  if (!(std::isfinite(pmax) && pmax > 0.0)) throw UsageError("--pmax must be > 0");
  if (samples < 16) throw UsageError("--samples must be >= 16");
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kAmplitudeTolerance) {
    throw UsageError("amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 (got " +
                     format_double(norm) + ")");
  }
  const double scale = 1.0 / std::sqrt(norm);
  alpha *= scale;
  beta *= scale;
}

Json scenario_document(const RunConfig& cfg) {
  const scenario::Scenario s({cfg.alpha, cfg.beta});
  const scenario::ScenarioReport r = s.report(cfg.k, cfg.cutoff);
  using density::purity;

  Json conditional = Json::array();
  for (const auto& sel : r.selections) {
    Json entry{{"selection", scenario::to_string(sel.selection)}};
    if (sel.result) {
      entry["probability"] = sel.result->probability;
      entry["purity"] = purity(sel.result->state);
      entry["state"] = matrix_json(sel.result->state.matrix());
    } else {
      entry["error"] = sel.error;
    }
    conditional.push_back(std::move(entry));
  }

  return Json{
      {"command", "scenario"},
      {"amplitudes", {{"alpha", complex_json(r.amplitudes.alpha)},
                      {"beta", complex_json(r.amplitudes.beta)}}},
      {"gamma", r.gamma},
      {"hbar", r.hbar},
      {"pulse_time", r.pulse_time},
      {"probabilities", {{"box2_empty", r.p_box2_empty},
                         {"box2_occupied", r.p_box2_occupied},
                         {"detector_no", r.p_detector_no},
                         {"detector_yes", r.p_detector_yes}}},
      {"purity", {{"composite_before", purity(r.composite_before)},
                  {"box1_before", purity(r.box1_before)},
                  {"box2_before", purity(r.box2_before)},
                  {"composite_after", purity(r.composite_after)},
                  {"system_after", purity(r.system_after)},
                  {"box1_after", purity(r.box1_after)},
                  {"box2_after", purity(r.box2_after)},
                  {"detector_after", purity(r.detector_after)}}},
      {"box1_comparison", {{"max_abs_deviation", r.box1_max_deviation},
                           {"tolerance", hilbert::kTolerance},
                           {"unchanged", r.box1_max_deviation <= hilbert::kTolerance}}},
      {"states", {{"composite_before", matrix_json(r.composite_before.matrix())},
                  {"box1_before", matrix_json(r.box1_before.matrix())},
                  {"box2_before", matrix_json(r.box2_before.matrix())},
                  {"system_after", matrix_json(r.system_after.matrix())},
                  {"box1_after", matrix_json(r.box1_after.matrix())},
                  {"box2_after", matrix_json(r.box2_after.matrix())},
                  {"detector_after", matrix_json(r.detector_after.matrix())}}},
      {"conditional", std::move(conditional)},
      {"spectrum", {{"k", r.k},
                    {"cutoff", r.cutoff},
                    {"partial_sums", {{"pure", r.spectrum_pure.partial_sum()},
                                      {"mixed", r.spectrum_mixed.partial_sum()},
                                      {"postselected", r.spectrum_postselected.partial_sum()}}},
                    {"pure", weights_json(r.spectrum_pure)},
                    {"mixed", weights_json(r.spectrum_mixed)},
                    {"postselected", weights_json(r.spectrum_postselected)}}},
  };
}

std::string cmd_scenario(const RunConfig& cfg) {
  return render(scenario_document(cfg), cfg.format);
}

std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg) {
  const boxwell::WellConfig well{};
  const boxwell::SpectralDistribution d = boxwell::spectral_distribution(well, cfg.k, cfg.cutoff);
  std::vector<SpectrumRow> rows;
  double running = 0.0;
  for (const auto& [n, w] : d.weights()) {
    running += w;
    SpectrumRow row{n, boxwell::energy(well, n), w,
                    boxwell::half_box_weight_grid(well, cfg.k, n, cfg.grid), running,
                    std::nullopt, std::nullopt};
    if (cfg.k == 1) {
      row.closed_form_n_minus_1 = boxwell::overlap_closed_form_k1(n - 1);
      if (n % 2 == 1) row.closed_form_odd_l = boxwell::overlap_closed_form_k1((n - 1) / 2);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string cmd_spectrum(const RunConfig& cfg) {
  const auto rows = spectrum_rows(cfg);
  if (cfg.format == Format::kCsv) {
    std::ostringstream os;
    os << "N,energy,weight,weight_grid,partial_sum,closed_form_l_eq_N_minus_1,"
          "closed_form_l_eq_half_N_minus_1\n";
    for (const auto& r : rows) {
      os << r.n << "," << format_double(r.energy) << "," << format_double(r.weight) << ","
         << format_double(r.weight_grid) << "," << format_double(r.partial_sum) << ","
         << optional_field(r.closed_form_n_minus_1) << ","
         << optional_field(r.closed_form_odd_l) << "\n";
    }
    return os.str();
  }
  Json jrows = Json::array();
  for (const auto& r : rows) {
    Json row{{"N", r.n},
             {"energy", r.energy},
             {"weight", r.weight},
             {"weight_grid", r.weight_grid},
             {"partial_sum", r.partial_sum}};
    if (r.closed_form_n_minus_1) row["closed_form_l_eq_N_minus_1"] = *r.closed_form_n_minus_1;
    if (r.closed_form_odd_l) row["closed_form_l_eq_half_N_minus_1"] = *r.closed_form_odd_l;
    jrows.push_back(std::move(row));
  }
  return dump_canonical(Json{{"command", "spectrum"},
                             {"k", cfg.k},
                             {"cutoff", cfg.cutoff},
                             {"grid", cfg.grid},
                             {"partial_sum", rows.empty() ? 0.0 : rows.back().partial_sum},
                             {"rows", std::move(jrows)}});
}

MomentumTable momentum_table(const RunConfig& cfg) {
  const boxwell::WellConfig well{};
  const std::size_t n = cfg.samples;
  const double denom = static_cast<double>(n - 1);
  std::vector<double> ps(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Written so that ps[n-1-i] == -ps[i] exactly.
    ps[i] = cfg.pmax * (2.0 * static_cast<double>(i) - denom) / denom;
  }
  const auto oracle = boxwell::momentum_density_oracle(well, cfg.k, ps);
  const auto paper = boxwell::momentum_density_paper(well, cfg.k);

  MomentumTable table{{}, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double pv = paper(ps[i]);
    const double diff = std::abs(pv - oracle[i]);
    table.rows.push_back({ps[i], pv, oracle[i], diff});
    if (std::isfinite(pv)) table.max_abs_diff = std::max(table.max_abs_diff, diff);
  }
  const double h = 2.0 * cfg.pmax / denom;
  double sum = 0.5 * (oracle.front() + oracle.back());
  for (std::size_t i = 1; i + 1 < n; ++i) sum += oracle[i];
  table.oracle_normalization = sum * h;
  return table;
}

std::string cmd_momentum(const RunConfig& cfg) {
  const MomentumTable t = momentum_table(cfg);
  if (cfg.format == Format::kCsv) {
    std::ostringstream os;
    os << "p,paper,oracle,abs_diff\n";
    for (const auto& r : t.rows) {
      os << format_double(r.p) << "," << format_double(r.paper) << ","
         << format_double(r.oracle) << "," << format_double(r.abs_diff) << "\n";
    }
    os << "summary,," << format_double(t.oracle_normalization) << ","
       << format_double(t.max_abs_diff) << "\n";
    return os.str();
  }
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back(Json{{"p", r.p}, {"paper", r.paper}, {"oracle", r.oracle},
                        {"abs_diff", r.abs_diff}});
  }
  return dump_canonical(Json{{"command", "momentum"},
                             {"k", cfg.k},
                             {"pmax", cfg.pmax},
                             {"samples", cfg.samples},
                             {"oracle_normalization", t.oracle_normalization},
                             {"max_abs_diff", t.max_abs_diff},
                             {"rows", std::move(rows)}});
}

}  // namespace boxdm::cli
