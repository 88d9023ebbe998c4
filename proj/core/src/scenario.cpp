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

#include "boxdm/scenario.hpp"

#include <cmath>
#include <numbers>

#include "boxdm/errors.hpp"

namespace boxdm::scenario {
namespace {

KetVector basis_ket(std::size_t index) { return KetVector::basis(2, index); }

ComplexMatrix occupation_projector() {
  return ComplexMatrix::diagonal({0.0, 1.0});
}

KetVector probe_for(Selection s) {
  switch (s) {
    case Selection::kBox2Empty: return basis_ket(kEmpty);
    case Selection::kBox2Occupied: return basis_ket(kOccupied);
    case Selection::kDetectorNo: return basis_ket(kDetectorNo);
    case Selection::kDetectorYes: return basis_ket(kDetectorYes);
  }
  throw ArgumentError("unknown selection");
}

bool is_detector_selection(Selection s) {
  return s == Selection::kDetectorNo || s == Selection::kDetectorYes;
}

}  // namespace

SpaceLayout boxes_layout() { return SpaceLayout{2, 2}; }
SpaceLayout boxes_with_detector_layout() { return SpaceLayout{2, 2, 2}; }

Amplitudes Amplitudes::standard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {h, -h};
}

void Amplitudes::validate(double tol) const {
  const double n = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
    throw NormalizationError("amplitudes: |alpha|^2 + |beta|^2 = " +
                             std::to_string(n) + ", expected 1");
  }
}

KetVector entangled_ket(Complex alpha, Complex beta) {
  Amplitudes{alpha, beta}.validate();
  const KetVector in_box1 = hilbert::kron(basis_ket(kOccupied), basis_ket(kEmpty));
  const KetVector in_box2 = hilbert::kron(basis_ket(kEmpty), basis_ket(kOccupied));
  return KetVector(alpha * in_box1.eigen() + beta * in_box2.eigen());
}

DensityMatrix build_entangled(Complex alpha, Complex beta) {
  return density::from_pure(entangled_ket(alpha, beta), boxes_layout());
}

ComplexMatrix number_operator(Box box, const SpaceLayout& layout) {
  if (layout != boxes_layout() && layout != boxes_with_detector_layout()) {
    throw DimensionError("number_operator: layout must be (2,2) or (2,2,2)");
  }
  const std::size_t factor = box == Box::kS1 ? kBox1Factor : kBox2Factor;
  return hilbert::embed(occupation_projector(), layout, factor);
}

KetVector attach_detector(const KetVector& boxes_ket) {
  if (boxes_ket.dim() != 4) {
    throw DimensionError("attach_detector: expected a (2,2) ket");
  }
  if (!boxes_ket.is_normalized()) {
    throw NormalizationError("attach_detector: input ket is not normalized");
  }
  return hilbert::kron(boxes_ket, basis_ket(kDetectorNo));
}

ComplexMatrix interaction_hamiltonian(double gamma) {
  const ComplexMatrix n2 = number_operator(Box::kS2, boxes_layout());
  return Complex(gamma) * hilbert::kron(n2, hilbert::pauli_x());
}

ComplexMatrix interaction_unitary(double gamma, double t, double hbar) {
  if (!(gamma > 0.0)) throw ArgumentError("interaction_unitary: gamma must be > 0");
  if (!(t >= 0.0)) throw ArgumentError("interaction_unitary: t must be >= 0");
  if (!(hbar > 0.0)) throw ArgumentError("interaction_unitary: hbar must be > 0");
  return hilbert::matexp_antihermitian(interaction_hamiltonian(gamma), t / hbar);
}

double pulse_duration(double gamma, double hbar) {
  if (!(gamma > 0.0)) throw ArgumentError("pulse_duration: gamma must be > 0");
  return std::numbers::pi * hbar / (2.0 * gamma);
}

std::string to_string(Selection s) {
  switch (s) {
    case Selection::kBox2Empty: return "box2_empty";
    case Selection::kBox2Occupied: return "box2_occupied";
    case Selection::kDetectorNo: return "detector_no";
    case Selection::kDetectorYes: return "detector_yes";
  }
  return "unknown";
}

std::string to_string(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::kPure: return "pure";
    case SpectrumSource::kMixed: return "mixed";
    case SpectrumSource::kPostSelected: return "postselected";
  }
  return "unknown";
}

Scenario::Scenario(Amplitudes amplitudes, double gamma, boxwell::WellConfig well)
    : amplitudes_(amplitudes),
      gamma_(gamma),
      well_(well),
      ket_(entangled_ket(amplitudes.alpha, amplitudes.beta)) {
  if (!(gamma_ > 0.0)) throw ArgumentError("Scenario: gamma must be > 0");
  well_.validate();
}

DensityMatrix Scenario::initial_state() const {
  return density::from_pure(ket_, boxes_layout());
}

Measurement Scenario::evolve(double t) const {
  const KetVector theta0 = attach_detector(ket_);
  const KetVector theta = interaction_unitary(gamma_, t, well_.hbar) * theta0;
  DensityMatrix composite = density::from_pure(theta, boxes_with_detector_layout());
  DensityMatrix system = density::reduce(composite, {kBox1Factor, kBox2Factor});
  DensityMatrix detector = density::reduce(composite, {kDetectorFactor});
  return {theta, std::move(composite), std::move(system), std::move(detector)};
}

Measurement Scenario::measure_and_decohere() const {
  return evolve(pulse_duration(gamma_, well_.hbar));
}

ConditionalResult Scenario::post_select(Selection selection, Stage stage) const {
  const KetVector probe = probe_for(selection);
  if (!is_detector_selection(selection)) {
    const DensityMatrix rho = stage == Stage::kBeforeMeasurement
                                  ? initial_state()
                                  : measure_and_decohere().system;
    return density::conditional(rho, probe, kBox2Factor);
  }
  const DensityMatrix composite =
      stage == Stage::kBeforeMeasurement
          ? density::from_pure(attach_detector(ket_), boxes_with_detector_layout())
          : measure_and_decohere().composite_state;
  const ConditionalResult boxes =
      density::conditional(composite, probe, kDetectorFactor);
  return {density::reduce(boxes.state, {kBox1Factor}), boxes.probability};
}

boxwell::SpectralDistribution Scenario::recombine_spectrum(SpectrumSource source,
                                                           int k,
                                                           int cutoff) const {
  if (source == SpectrumSource::kPostSelected) {
    return boxwell::spectral_distribution(well_, k, cutoff);
  }
  if (cutoff < 2 * k) {
    throw ArgumentError("recombine_spectrum: cutoff " + std::to_string(cutoff) +
                        " < 2k = " + std::to_string(2 * k));
  }
  using boxwell::Half;
  std::map<int, double> weights;
  for (int n = 1; n <= cutoff; ++n) {
    const double cl = boxwell::half_box_amplitude(well_, k, n, Half::kLeft);
    const double cr = boxwell::half_box_amplitude(well_, k, n, Half::kRight);
    if (source == SpectrumSource::kPure) {
      weights[n] = std::norm(amplitudes_.alpha * cl + amplitudes_.beta * cr);
    } else {
      weights[n] = std::norm(amplitudes_.alpha) * cl * cl +
                   std::norm(amplitudes_.beta) * cr * cr;
    }
  }
  return boxwell::SpectralDistribution(std::move(weights), cutoff);
}

ScenarioReport Scenario::report(int k, int cutoff) const {
  const DensityMatrix before = initial_state();
  const Measurement after = measure_and_decohere();
  DensityMatrix box1_before = density::reduce(before, {kBox1Factor});
  DensityMatrix box1_after = density::reduce(after.system, {kBox1Factor});
  const double deviation =
      hilbert::max_abs_diff(box1_before.matrix(), box1_after.matrix());

  const ComplexMatrix n2 = number_operator(Box::kS2);
  const double p_occupied = density::expectation(n2, after.system).real();
  const double p_empty =
      density::expectation(ComplexMatrix::identity(4) - n2, after.system).real();
  const ComplexMatrix yes = ComplexMatrix::diagonal({0.0, 1.0});
  const double p_yes = density::expectation(yes, after.detector).real();
  const double p_no =
      density::expectation(ComplexMatrix::identity(2) - yes, after.detector).real();

  std::vector<SelectionOutcome> selections;
  for (Selection s : {Selection::kBox2Empty, Selection::kBox2Occupied,
                      Selection::kDetectorNo, Selection::kDetectorYes}) {
    try {
      selections.push_back({s, post_select(s), {}});
    } catch (const ConditioningError& e) {
      selections.push_back({s, std::nullopt, e.what()});
    }
  }

  return ScenarioReport{
      .amplitudes = amplitudes_,
      .gamma = gamma_,
      .hbar = well_.hbar,
      .pulse_time = pulse_duration(gamma_, well_.hbar),
      .k = k,
      .cutoff = cutoff,
      .composite_before = before,
      .box1_before = std::move(box1_before),
      .box2_before = density::reduce(before, {kBox2Factor}),
      .composite_after = after.composite_state,
      .system_after = after.system,
      .box1_after = std::move(box1_after),
      .box2_after = density::reduce(after.system, {kBox2Factor}),
      .detector_after = after.detector,
      .box1_max_deviation = deviation,
      .p_box2_empty = p_empty,
      .p_box2_occupied = p_occupied,
      .p_detector_no = p_no,
      .p_detector_yes = p_yes,
      .selections = std::move(selections),
      .spectrum_pure = recombine_spectrum(SpectrumSource::kPure, k, cutoff),
      .spectrum_mixed = recombine_spectrum(SpectrumSource::kMixed, k, cutoff),
      .spectrum_postselected =
          recombine_spectrum(SpectrumSource::kPostSelected, k, cutoff),
  };
}

}  // namespace boxdm::scenario
