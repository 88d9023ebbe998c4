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

#ifndef BOXDM_DENSITY_HPP_
#define BOXDM_DENSITY_HPP_

#include <initializer_list>
#include <span>

#include "boxdm/hilbert.hpp"

namespace boxdm::density {

using hilbert::Complex;
using hilbert::ComplexMatrix;
using hilbert::KetVector;
using hilbert::SpaceLayout;

/// Lowest eigenvalue accepted as non-negative.
inline constexpr double kPositivityFloor = -1e-10;
/// Conditioning on an outcome less likely than this is an error.
inline constexpr double kMinConditioningProbability = 1e-14;

/// A Hermitian, unit-trace, positive semidefinite operator on a composite
/// space. Construction validates all three conditions; instances are
/// immutable.
class DensityMatrix {
 public:
  /// Throws DimensionError if the layout does not match, InvalidStateError
  /// if Hermiticity (1e-12), unit trace (1e-12) or positivity (lowest
  /// eigenvalue >= -1e-10) is violated.
  DensityMatrix(ComplexMatrix matrix, SpaceLayout layout);
  /// Single-factor layout.
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpaceLayout& layout() const { return layout_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
  SpaceLayout layout_;
};

struct ConditionalResult {
  DensityMatrix state;
  double probability;
};

/// |v><v|; throws NormalizationError for an unnormalized ket.
DensityMatrix from_pure(const KetVector& v, const SpaceLayout& layout);
DensityMatrix from_pure(const KetVector& v);

/// Tr(f rho).
Complex expectation(const ComplexMatrix& f, const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Reduced density matrix on the `keep` factors.
DensityMatrix reduce(const DensityMatrix& rho,
                     std::span<const std::size_t> keep);
inline DensityMatrix reduce(const DensityMatrix& rho,
                            std::initializer_list<std::size_t> keep) {
  return reduce(rho, std::span(keep.begin(), keep.size()));
}

/// State of the remaining factors given that factor `probe_factor` is
/// selected in the pure state `probe`:
///   p = Tr(rho (I x P)),  rho_c = Tr_probe((I x P) rho (I x P)) / p.
///
/// Throws ConditioningError when p < 1e-14 and ArgumentError when the
/// layout has a single factor or probe_factor is out of range.
ConditionalResult conditional(const DensityMatrix& rho, const KetVector& probe,
                              std::size_t probe_factor);

/// Probability of finding factor `probe_factor` in `probe`, evaluated on the
/// reduced state of that factor alone: Tr(rho_f P).
double selection_probability(const DensityMatrix& rho, const KetVector& probe,
                             std::size_t probe_factor);

}  // namespace boxdm::density

#endif  // BOXDM_DENSITY_HPP_
