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

#include "boxdm/boxwell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "boxdm/errors.hpp"
#include "boxdm/quadrature.hpp"

namespace boxdm::boxwell {
namespace {

using std::numbers::pi;

constexpr double kSplitTolerance = 1e-8;
constexpr double kSingularWindow = 1e-4;

void require_positive(int n, const char* what) {
  if (n < 1) {
    throw ArgumentError(std::string(what) + " must be >= 1, got " +
                        std::to_string(n));
  }
}

quadrature::SimpsonOptions oscillatory_options() {
  quadrature::SimpsonOptions opt;
  opt.min_depth = 6;
  return opt;
}

}  // namespace

void WellConfig::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(a) || !ok(hbar) || !ok(m)) {
    throw ArgumentError("WellConfig: a, hbar and m must be finite and positive");
  }
}

double energy(const WellConfig& cfg, int n) {
  cfg.validate();
  require_positive(n, "quantum number n");
  const double q = pi / (2.0 * cfg.a);
  return cfg.hbar * cfg.hbar / (2.0 * cfg.m) * q * q * double(n) * double(n);
}

double eigenfunction_value(const WellConfig& cfg, int n, double x) {
  if (std::abs(x) > cfg.a) return 0.0;
  return std::sqrt(1.0 / cfg.a) * std::sin(pi * n * (x - cfg.a) / (2.0 * cfg.a));
}

GridWavefunction::GridWavefunction(double a, std::vector<Complex> values)
    : a_(a), values_(std::move(values)) {
  if (!(a_ > 0.0)) throw ArgumentError("GridWavefunction: a must be positive");
  if (values_.size() < 3) {
    throw ArgumentError("GridWavefunction: need at least three samples");
  }
}

double GridWavefunction::x(std::size_t i) const {
  // Symmetric construction keeps x(center) == 0 exactly.
  const auto n = static_cast<double>(intervals());
  return a_ * (2.0 * static_cast<double>(i) - n) / n;
}

std::size_t GridWavefunction::center_index() const {
  if (intervals() % 2 != 0) {
    throw ArgumentError("GridWavefunction: x = 0 is not a grid node");
  }
  return intervals() / 2;
}

double GridWavefunction::norm_squared() const {
  std::vector<double> density(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) density[i] = std::norm(values_[i]);
  return quadrature::trapezoid(density, dx());
}

Complex grid_inner_product(const GridWavefunction& a, const GridWavefunction& b) {
  if (a.size() != b.size() || a.half_width() != b.half_width()) {
    throw DimensionError("grid_inner_product: grids differ");
  }
  std::vector<double> re(a.size());
  std::vector<double> im(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex z = std::conj(a[i]) * b[i];
    re[i] = z.real();
    im[i] = z.imag();
  }
  return {quadrature::simpson(re, a.dx()), quadrature::simpson(im, a.dx())};
}

GridWavefunction eigenfunction(const WellConfig& cfg, int n,
                               std::size_t intervals) {
  cfg.validate();
  require_positive(n, "quantum number n");
  if (intervals < kMinGridIntervals) {
    throw ArgumentError("eigenfunction: grid needs >= " +
                        std::to_string(kMinGridIntervals) + " intervals");
  }
  std::vector<Complex> values(intervals + 1);
  GridWavefunction shape(cfg.a, values);
  for (std::size_t i = 0; i <= intervals; ++i) {
    values[i] = eigenfunction_value(cfg, n, shape.x(i));
  }
  return GridWavefunction(cfg.a, std::move(values));
}

HalfSplit split_halves(const GridWavefunction& psi) {
  const std::size_t c = psi.center_index();
  if (std::abs(psi[c]) > kSplitTolerance) {
    throw SplitPointError("split_halves: |psi(0)| = " +
                          std::to_string(std::abs(psi[c])) + " exceeds 1e-8");
  }
  std::vector<Complex> left(psi.size(), 0.0);
  std::vector<Complex> right(psi.size(), 0.0);
  for (std::size_t i = 0; i < c; ++i) left[i] = psi[i];
  for (std::size_t i = c + 1; i < psi.size(); ++i) right[i] = psi[i];

  const double nl = std::sqrt(GridWavefunction(psi.half_width(), left).norm_squared());
  const double nr = std::sqrt(GridWavefunction(psi.half_width(), right).norm_squared());
  if (nl == 0.0 || nr == 0.0) {
    throw SplitPointError("split_halves: one half of psi is identically zero");
  }
  const Complex alpha = nl;
  const Complex beta = -nr;
  for (auto& v : left) v /= alpha;
  for (auto& v : right) v /= beta;
  return {GridWavefunction(psi.half_width(), std::move(left)),
          GridWavefunction(psi.half_width(), std::move(right)), alpha, beta};
}

ParityCheck parity(const GridWavefunction& psi) {
  double even = 0.0;
  double odd = 0.0;
  const std::size_t n = psi.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex mirrored = psi[n - 1 - i];
    even = std::max(even, std::abs(mirrored - psi[i]));
    odd = std::max(odd, std::abs(mirrored + psi[i]));
  }
  return even <= odd ? ParityCheck{+1, even} : ParityCheck{-1, odd};
}

PositionDensity::PositionDensity(const WellConfig& cfg, int k) : cfg_(cfg), k_(k) {
  cfg_.validate();
  require_positive(k, "half-box quantum number k");
}

double PositionDensity::operator()(double x) const {
  if (std::abs(x) > cfg_.a) return 0.0;
  const double s = std::sin(pi * k_ * x / cfg_.a);
  return s * s / cfg_.a;
}

double PositionDensity::normalization() const {
  return quadrature::integrate([this](double x) { return (*this)(x); }, -cfg_.a,
                               cfg_.a);
}

double PositionDensity::mean() const {
  return quadrature::integrate([this](double x) { return x * (*this)(x); },
                               -cfg_.a, cfg_.a);
}

PositionDensity position_density(const WellConfig& cfg, int k) {
  return PositionDensity(cfg, k);
}

PaperMomentumDensity::PaperMomentumDensity(const WellConfig& cfg, int k)
    : cfg_(cfg), k_(k) {
  cfg_.validate();
  require_positive(k, "half-box quantum number k");
}

double PaperMomentumDensity::operator()(double p) const {
  const double prefactor = 2.0 * k_ * k_ * pi * cfg_.a / cfg_.hbar;
  const double u = p * cfg_.a / cfg_.hbar;
  const double c = k_ * pi;
  const bool odd = k_ % 2 == 1;
  const double delta = std::abs(u) - c;
  if (std::abs(delta) < kSingularWindow) {
    // (u^2 - c^2)^2 = delta^2 (2c + delta)^2 and T(c + delta) = T(delta) for
    // either branch since c is a multiple of pi.
    const double tail = (2.0 * c + delta) * (2.0 * c + delta);
    if (odd) {
      if (delta == 0.0) return std::numeric_limits<double>::infinity();
      const double cos2 = 1.0 - delta * delta;
      return prefactor * cos2 / (delta * delta * tail);
    }
    const double sinc2 = 1.0 - delta * delta / 3.0;
    return prefactor * sinc2 / tail;
  }
  const double t = odd ? std::cos(u) : std::sin(u);
  const double d = u * u - c * c;
  return prefactor * t * t / (d * d);
}

PaperMomentumDensity momentum_density_paper(const WellConfig& cfg, int k) {
  return PaperMomentumDensity(cfg, k);
}

Complex fourier_amplitude(const std::function<double(double)>& f, double lo,
                          double hi, double p, double hbar) {
  const auto opt = oscillatory_options();
  const double q = p / hbar;
  const double re = quadrature::integrate(
      [&](double x) { return f(x) * std::cos(q * x); }, lo, hi, opt);
  const double im = quadrature::integrate(
      [&](double x) { return -f(x) * std::sin(q * x); }, lo, hi, opt);
  return Complex(re, im) / std::sqrt(2.0 * pi * hbar);
}

std::vector<double> momentum_density_oracle(const WellConfig& cfg, int k,
                                            std::span<const double> ps) {
  cfg.validate();
  require_positive(k, "half-box quantum number k");
  const auto psi = [&](double x) { return eigenfunction_value(cfg, 2 * k, x); };
  std::vector<double> out;
  out.reserve(ps.size());
  for (double p : ps) {
    out.push_back(std::norm(fourier_amplitude(psi, -cfg.a, cfg.a, p, cfg.hbar)));
  }
  return out;
}

std::vector<double> momentum_density_mixed(const WellConfig& cfg, int k,
                                           std::span<const double> ps) {
  cfg.validate();
  require_positive(k, "half-box quantum number k");
  const auto left = [&](double x) { return half_box_value(cfg, k, Half::kLeft, x); };
  const auto right = [&](double x) { return half_box_value(cfg, k, Half::kRight, x); };
  std::vector<double> out;
  out.reserve(ps.size());
  for (double p : ps) {
    const double wl = std::norm(fourier_amplitude(left, -cfg.a, 0.0, p, cfg.hbar));
    const double wr = std::norm(fourier_amplitude(right, 0.0, cfg.a, p, cfg.hbar));
    out.push_back(0.5 * (wl + wr));
  }
  return out;
}

double half_box_value(const WellConfig& cfg, int k, Half half, double x) {
  const double psi = eigenfunction_value(cfg, 2 * k, x);
  if (half == Half::kLeft) return x < 0.0 ? std::sqrt(2.0) * psi : 0.0;
  return x > 0.0 ? -std::sqrt(2.0) * psi : 0.0;
}

double half_box_amplitude(const WellConfig& cfg, int k, int n, Half half) {
  cfg.validate();
  require_positive(k, "half-box quantum number k");
  require_positive(n, "full-well quantum number N");
  const double lo = half == Half::kLeft ? -cfg.a : 0.0;
  const double hi = half == Half::kLeft ? 0.0 : cfg.a;
  return quadrature::integrate(
      [&](double x) {
        return eigenfunction_value(cfg, n, x) * half_box_value(cfg, k, half, x);
      },
      lo, hi, oscillatory_options());
}

double overlap_weight(const WellConfig& cfg, int k, int l) {
  cfg.validate();
  require_positive(k, "half-box quantum number k");
  if (l < 0) throw ArgumentError("overlap_weight: l must be >= 0");
  const double amp = quadrature::integrate(
      [&](double y) {
        return std::sin(pi * k * y) * std::cos(pi * y * (l + 0.5));
      },
      0.0, 1.0, oscillatory_options());
  return 2.0 * amp * amp;
}

double half_box_weight_grid(const WellConfig& cfg, int k, int n,
                            std::size_t intervals) {
  require_positive(k, "half-box quantum number k");
  require_positive(n, "full-well quantum number N");
  const HalfSplit split = split_halves(eigenfunction(cfg, 2 * k, intervals));
  const GridWavefunction full = eigenfunction(cfg, n, intervals);
  return std::norm(grid_inner_product(full, split.left));
}

double overlap_weight_grid(const WellConfig& cfg, int k, int l,
                           std::size_t intervals) {
  if (l < 0) throw ArgumentError("overlap_weight_grid: l must be >= 0");
  return half_box_weight_grid(cfg, k, 2 * l + 1, intervals);
}

double overlap_closed_form_k1(int l) {
  if (l < 0) throw ArgumentError("overlap_closed_form_k1: l must be >= 0");
  if (l == 1) return 0.5;
  const double h = (l + 1) / 2.0;
  const double s = std::sin(pi * (l + 1) / 2.0);
  const double d = h * h - 1.0;
  return 2.0 * s * s / (pi * pi * d * d);
}

SpectralDistribution::SpectralDistribution(std::map<int, double> weights,
                                           int cutoff)
    : weights_(std::move(weights)), cutoff_(cutoff) {}

double SpectralDistribution::weight(int n) const {
  const auto it = weights_.find(n);
  return it == weights_.end() ? 0.0 : it->second;
}

double SpectralDistribution::partial_sum() const {
  double sum = 0.0;
  for (const auto& [n, w] : weights_) sum += w;
  return sum;
}

SpectralDistribution spectral_distribution(const WellConfig& cfg, int k,
                                           int cutoff) {
  cfg.validate();
  require_positive(k, "half-box quantum number k");
  if (cutoff < 2 * k) {
    throw ArgumentError("spectral_distribution: cutoff " + std::to_string(cutoff) +
                        " < 2k = " + std::to_string(2 * k));
  }
  std::map<int, double> weights;
  for (int n = 1; n <= cutoff; ++n) {
    if (n % 2 == 1) {
      weights[n] = overlap_weight(cfg, k, (n - 1) / 2);
    } else {
      const double c = half_box_amplitude(cfg, k, n, Half::kLeft);
      weights[n] = c * c;
    }
  }
  return SpectralDistribution(std::move(weights), cutoff);
}

}  // namespace boxdm::boxwell
