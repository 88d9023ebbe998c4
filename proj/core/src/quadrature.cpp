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

#include "boxdm/quadrature.hpp"

#include <cmath>

#include "boxdm/errors.hpp"

namespace boxdm::quadrature {
namespace {

struct Recursion {
  const std::function<double(double)>& f;
  const SimpsonOptions& opt;
  std::size_t evaluations = 0;
  bool converged = true;
  double error = 0.0;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double step(double a, double fa, double b, double fb, double m, double fm,
              double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    const bool accurate = depth >= opt.min_depth && std::abs(delta) <= 15.0 * tol;
    const bool exhausted =
        depth >= opt.max_depth || evaluations >= opt.max_evaluations;
    if (accurate || exhausted) {
      if (!accurate) converged = false;
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return step(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           step(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double lo, double hi,
                                  const SimpsonOptions& options) {
  if (!(options.abs_tol > 0.0)) {
    throw ArgumentError("adaptive_simpson: tolerance must be positive");
  }
  if (lo == hi) return {};
  Recursion r{f, options};
  const double m = 0.5 * (lo + hi);
  const double flo = r.eval(lo);
  const double fhi = r.eval(hi);
  const double fm = r.eval(m);
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
  QuadratureResult out;
  out.value = r.step(lo, flo, hi, fhi, m, fm, whole, options.abs_tol, 0);
  out.error_estimate = r.error;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  return out;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const SimpsonOptions& options) {
  return adaptive_simpson(f, lo, hi, options).value;
}

double trapezoid(std::span<const double> samples, double dx) {
  if (samples.size() < 2) {
    throw ArgumentError("trapezoid: need at least two samples");
  }
  double sum = 0.5 * (samples.front() + samples.back());
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) sum += samples[i];
  return sum * dx;
}

double simpson(std::span<const double> samples, double dx) {
  if (samples.size() < 3 || samples.size() % 2 == 0) {
    throw ArgumentError("simpson: need an odd number (>= 3) of samples");
  }
  double sum = samples.front() + samples.back();
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * samples[i];
  }
  return sum * dx / 3.0;
}

}  // namespace boxdm::quadrature
