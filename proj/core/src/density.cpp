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

#include "boxdm/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "boxdm/errors.hpp"

namespace boxdm::density {
namespace {

using hilbert::kTolerance;

double clamp_probability(double p) {
  if (p < -kTolerance || p > 1.0 + kTolerance) {
    throw InvalidStateError("probability " + std::to_string(p) +
                            " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return ComplexMatrix(0.5 * (m.eigen() + m.eigen().adjoint()));
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SpaceLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (layout_.total_dim() != matrix_.dim()) {
    throw DimensionError("DensityMatrix: layout dimension " +
                         std::to_string(layout_.total_dim()) +
                         " does not match matrix dimension " +
                         std::to_string(matrix_.dim()));
  }
  if (!matrix_.is_hermitian(kTolerance)) {
    throw InvalidStateError("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw InvalidStateError("DensityMatrix: trace is not 1");
  }
  const auto ev = hilbert::hermitian_eigenvalues(matrix_);
  if (ev.front() < kPositivityFloor) {
    throw InvalidStateError("DensityMatrix: negative eigenvalue " +
                            std::to_string(ev.front()));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, SpaceLayout{matrix.dim()}) {}

DensityMatrix from_pure(const KetVector& v, const SpaceLayout& layout) {
  return DensityMatrix(hilbert::projector(v), layout);
}

DensityMatrix from_pure(const KetVector& v) {
  return from_pure(v, SpaceLayout{v.dim()});
}

Complex expectation(const ComplexMatrix& f, const DensityMatrix& rho) {
  if (f.dim() != rho.dim()) {
    throw DimensionError("expectation: operator dimension " +
                         std::to_string(f.dim()) + " vs state dimension " +
                         std::to_string(rho.dim()));
  }
  return (f.eigen() * rho.matrix().eigen()).trace();
}

double purity(const DensityMatrix& rho) {
  const auto& m = rho.matrix().eigen();
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return m.cwiseAbs2().sum();
}

DensityMatrix reduce(const DensityMatrix& rho,
                     std::span<const std::size_t> keep) {
  ComplexMatrix reduced = hilbert::partial_trace(rho.matrix(), rho.layout(), keep);
  return DensityMatrix(hermitian_part(reduced), rho.layout().subset(keep));
}

ConditionalResult conditional(const DensityMatrix& rho, const KetVector& probe,
                              std::size_t probe_factor) {
  const SpaceLayout& layout = rho.layout();
  if (layout.factor_count() < 2) {
    throw ArgumentError("conditional: state has a single factor");
  }
  if (probe_factor >= layout.factor_count()) {
    throw ArgumentError("conditional: probe factor " +
                        std::to_string(probe_factor) + " out of range");
  }
  const ComplexMatrix p_ext =
      hilbert::embed(hilbert::projector(probe), layout, probe_factor);
  const ComplexMatrix sandwiched = p_ext * rho.matrix() * p_ext;

  const double p_raw = sandwiched.trace().real();
  if (p_raw < kMinConditioningProbability) {
    throw ConditioningError("conditional: selection probability " +
                            std::to_string(p_raw) + " is zero");
  }
  const double p = clamp_probability(p_raw);

  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < layout.factor_count(); ++f) {
    if (f != probe_factor) keep.push_back(f);
  }
  const ComplexMatrix traced = hilbert::partial_trace(sandwiched, layout, keep);
  // Normalize by the trace of the traced block itself so the result has unit
  // trace to rounding even when p was clamped.
  const ComplexMatrix state =
      hermitian_part(Complex(1.0 / traced.trace().real()) * traced);
  return {DensityMatrix(state, layout.subset(keep)), p};
}

double selection_probability(const DensityMatrix& rho, const KetVector& probe,
                             std::size_t probe_factor) {
  const DensityMatrix local = reduce(rho, {probe_factor});
  return clamp_probability(
      expectation(hilbert::projector(probe), local).real());
}

}  // namespace boxdm::density
