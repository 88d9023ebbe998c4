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

#ifndef BOXDM_QUADRATURE_HPP_
#define BOXDM_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <span>

namespace boxdm::quadrature {

struct SimpsonOptions {
  double abs_tol = 1e-12;
  // Bisection levels forced before the error test is trusted. Symmetric
  // integrands can vanish on all five initial nodes.
  int min_depth = 4;
  int max_depth = 48;
  // Hard cap on integrand evaluations across the whole recursion.
  std::size_t max_evaluations = std::size_t{1} << 24;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// Adaptive Simpson with Richardson correction. Each panel is accepted when
/// |S(left)+S(right) - S(whole)| <= 15 * tol, with tol halved per bisection.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double lo, double hi,
                                  const SimpsonOptions& options = {});

/// Convenience wrapper returning only the value.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const SimpsonOptions& options = {});

/// Composite trapezoid rule over uniformly spaced samples.
double trapezoid(std::span<const double> samples, double dx);

/// Composite Simpson rule over uniformly spaced samples; needs an odd number
/// (>= 3) of samples.
double simpson(std::span<const double> samples, double dx);

}  // namespace boxdm::quadrature

#endif  // BOXDM_QUADRATURE_HPP_
