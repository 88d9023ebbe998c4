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

#ifndef BOXDM_SCENARIO_HPP_
#define BOXDM_SCENARIO_HPP_

// Two boxes S1, S2 holding one particle between them, plus an optional
// two-position detector coupled to S2.
//
// Basis order (public contract):
//   factor 0  box S1    {|0>_1, |Psi^(1)>_1}
//   factor 1  box S2    {|0>_2, |Psi^(2)>_2}
//   factor 2  detector  {|no>, |yes>}
//
// The unmeasured state is alpha |Psi^(1)>_1 |0>_2 + beta |0>_1 |Psi^(2)>_2.
// The detector couples through H_I = gamma N_2 sigma_1; a pulse of length
// pi hbar / (2 gamma) maps |no> to -i |yes> exactly when box S2 is occupied.

#include <optional>
#include <string>
#include <vector>

#include "boxdm/boxwell.hpp"
#include "boxdm/density.hpp"
#include "boxdm/hilbert.hpp"

namespace boxdm::scenario {

using density::ConditionalResult;
using density::DensityMatrix;
using hilbert::Complex;
using hilbert::ComplexMatrix;
using hilbert::KetVector;
using hilbert::SpaceLayout;

inline constexpr std::size_t kBox1Factor = 0;
inline constexpr std::size_t kBox2Factor = 1;
inline constexpr std::size_t kDetectorFactor = 2;

inline constexpr std::size_t kEmpty = 0;
inline constexpr std::size_t kOccupied = 1;
inline constexpr std::size_t kDetectorNo = 0;
inline constexpr std::size_t kDetectorYes = 1;

SpaceLayout boxes_layout();
SpaceLayout boxes_with_detector_layout();

struct Amplitudes {
  Complex alpha;
  Complex beta;

  /// alpha = 1/sqrt(2), beta = -1/sqrt(2).
  static Amplitudes standard();
  /// Throws NormalizationError if | |alpha|^2 + |beta|^2 - 1 | > tol.
  void validate(double tol = hilbert::kTolerance) const;
};

KetVector entangled_ket(Complex alpha, Complex beta);
DensityMatrix build_entangled(Complex alpha, Complex beta);

enum class Box { kS1, kS2 };

/// Projector onto the occupied state of `box`, extended by identity on the
/// other factors of `layout` (boxes_layout() or boxes_with_detector_layout()).
ComplexMatrix number_operator(Box box, const SpaceLayout& layout = boxes_layout());

/// |psi> (x) |no>.
KetVector attach_detector(const KetVector& boxes_ket);

/// gamma N_2 sigma_1 on the (2,2,2) space.
ComplexMatrix interaction_hamiltonian(double gamma);
/// exp(-i H_I t / hbar). Throws ArgumentError unless gamma > 0 and t >= 0.
ComplexMatrix interaction_unitary(double gamma, double t, double hbar = 1.0);
/// pi hbar / (2 gamma).
double pulse_duration(double gamma, double hbar = 1.0);

struct Measurement {
  KetVector composite;            // (2,2,2) after the pulse
  DensityMatrix composite_state;  // |Theta(t)><Theta(t)|
  DensityMatrix system;           // rho_S = Tr_detector
  DensityMatrix detector;
};

enum class Selection {
  kBox2Empty,     // N_2 = 0
  kBox2Occupied,  // N_2 = 1
  kDetectorNo,
  kDetectorYes,
};

enum class Stage { kBeforeMeasurement, kAfterMeasurement };

enum class SpectrumSource { kPure, kMixed, kPostSelected };

std::string to_string(Selection s);
std::string to_string(SpectrumSource s);

struct SelectionOutcome {
  Selection selection;
  std::optional<ConditionalResult> result;  // empty for zero-probability outcomes
  std::string error;
};

struct ScenarioReport {
  Amplitudes amplitudes;
  double gamma;
  double hbar;
  double pulse_time;
  int k;
  int cutoff;

  DensityMatrix composite_before;  // (2,2)
  DensityMatrix box1_before;
  DensityMatrix box2_before;

  DensityMatrix composite_after;  // (2,2,2), pure
  DensityMatrix system_after;     // rho_S on (2,2)
  DensityMatrix box1_after;
  DensityMatrix box2_after;
  DensityMatrix detector_after;

  double box1_max_deviation;
  double p_box2_empty;
  double p_box2_occupied;
  double p_detector_no;
  double p_detector_yes;

  std::vector<SelectionOutcome> selections;

  boxwell::SpectralDistribution spectrum_pure;
  boxwell::SpectralDistribution spectrum_mixed;
  boxwell::SpectralDistribution spectrum_postselected;
};

/// The boxes-plus-detector experiment for one amplitude pair. Immutable
/// once built.
class Scenario {
 public:
  explicit Scenario(Amplitudes amplitudes, double gamma = 1.0,
                    boxwell::WellConfig well = {});

  const Amplitudes& amplitudes() const { return amplitudes_; }
  double gamma() const { return gamma_; }
  const boxwell::WellConfig& well() const { return well_; }

  const KetVector& initial_ket() const { return ket_; }
  DensityMatrix initial_state() const;

  /// State after the interaction has acted for time t.
  Measurement evolve(double t) const;
  /// evolve(pulse_duration(gamma, hbar)).
  Measurement measure_and_decohere() const;

  /// Conditional state of box S1. Throws ConditioningError for outcomes of
  /// zero probability.
  ConditionalResult post_select(Selection selection,
                                Stage stage = Stage::kAfterMeasurement) const;

  /// Energy distribution after the partition is removed.
  ///   kPure:         |alpha c^L_N + beta c^R_N|^2
  ///   kMixed:        |alpha|^2 (c^L_N)^2 + |beta|^2 (c^R_N)^2
  ///   kPostSelected: boxwell::spectral_distribution (box S2 found empty)
  boxwell::SpectralDistribution recombine_spectrum(SpectrumSource source, int k,
                                                   int cutoff) const;

  ScenarioReport report(int k, int cutoff) const;

 private:
  Amplitudes amplitudes_;
  double gamma_;
  boxwell::WellConfig well_;
  KetVector ket_;
};

}  // namespace boxdm::scenario

#endif  // BOXDM_SCENARIO_HPP_
