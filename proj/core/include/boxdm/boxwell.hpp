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

#ifndef BOXDM_BOXWELL_HPP_
#define BOXDM_BOXWELL_HPP_

// Infinite square well on [-a, a] and the two half-boxes [-a, 0], [0, a]
// obtained by inserting a partition at x = 0.
//
//   E_n     = (hbar^2 / 2m) (pi / 2a)^2 n^2
//   Psi_n(x) = sqrt(1/a) sin(pi n (x - a) / (2a))
//
// For n = 2k the function vanishes at x = 0 and splits into normalized
// half-box states psi_L, psi_R with Psi_2k = alpha psi_L + beta psi_R,
// alpha = +1/sqrt(2), beta = -1/sqrt(2).

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace boxdm::boxwell {

using Complex = std::complex<double>;

/// Default number of uniform intervals on [-a, a]; the grid has one more
/// point than intervals so that x = 0 is a node.
inline constexpr std::size_t kDefaultGridIntervals = 4096;
inline constexpr std::size_t kMinGridIntervals = 64;

struct WellConfig {
  double a = 1.0;     // half-width
  double hbar = 1.0;
  double m = 1.0;

  /// Throws ArgumentError unless every constant is finite and positive.
  void validate() const;
};

double energy(const WellConfig& cfg, int n);

/// Psi_n(x); zero outside [-a, a].
double eigenfunction_value(const WellConfig& cfg, int n, double x);

/// Samples of a wavefunction on a uniform grid over [-a, a].
class GridWavefunction {
 public:
  GridWavefunction(double a, std::vector<Complex> values);

  double half_width() const { return a_; }
  std::size_t intervals() const { return values_.size() - 1; }
  double dx() const { return 2.0 * a_ / static_cast<double>(intervals()); }
  double x(std::size_t i) const;
  std::span<const Complex> values() const { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  /// Grid index of x = 0; throws ArgumentError for an odd interval count.
  std::size_t center_index() const;

  /// Trapezoid-rule integral of |psi|^2.
  double norm_squared() const;

 private:
  double a_;
  std::vector<Complex> values_;
};

/// <a|b> by composite Simpson on the shared grid (even interval count).
Complex grid_inner_product(const GridWavefunction& a, const GridWavefunction& b);

/// Psi_n sampled on `intervals` uniform intervals (>= 64).
GridWavefunction eigenfunction(const WellConfig& cfg, int n,
                               std::size_t intervals = kDefaultGridIntervals);

struct HalfSplit {
  GridWavefunction left;   // supported on x < 0
  GridWavefunction right;  // supported on x > 0
  Complex alpha;
  Complex beta;
};

/// Splits a wavefunction that vanishes at x = 0 (|psi(0)| <= 1e-8) into
/// separately normalized halves. alpha is the (positive) norm of the left
/// half and beta the negated norm of the right half, so
/// alpha*left + beta*right reproduces psi. Throws SplitPointError otherwise.
HalfSplit split_halves(const GridWavefunction& psi);

struct ParityCheck {
  int parity;        // +1 even, -1 odd
  double deviation;  // max_i |psi(-x_i) - parity * psi(x_i)|
};

/// Parity of a grid function under x -> -x, picking the better-matching sign.
ParityCheck parity(const GridWavefunction& psi);

/// omega(x) = (1/a) sin^2(pi k x / a) = |Psi_2k(x)|^2.
class PositionDensity {
 public:
  PositionDensity(const WellConfig& cfg, int k);
  double operator()(double x) const;
  /// Integral of omega over [-a, a].
  double normalization() const;
  /// <x> by quadrature.
  double mean() const;
  int k() const { return k_; }

 private:
  WellConfig cfg_;
  int k_;
};

PositionDensity position_density(const WellConfig& cfg, int k);

/// Closed-form momentum density in its quoted form:
///   (2 k^2 pi a / hbar) / (p^2 a^2 / hbar^2 - k^2 pi^2)^2 * T(pa/hbar)
/// with T = cos^2 for odd k and sin^2 for even k. Within 1e-4 of
/// |p| a / hbar = k pi a second-order series about the singular point is
/// used; for odd k the point is a true pole and +inf is returned exactly on it.
class PaperMomentumDensity {
 public:
  PaperMomentumDensity(const WellConfig& cfg, int k);
  double operator()(double p) const;
  int k() const { return k_; }

 private:
  WellConfig cfg_;
  int k_;
};

PaperMomentumDensity momentum_density_paper(const WellConfig& cfg, int k);

/// (2 pi hbar)^{-1/2} * integral_lo^hi f(x) exp(-i p x / hbar) dx, by
/// adaptive Simpson on the real and imaginary parts.
Complex fourier_amplitude(const std::function<double(double)>& f, double lo,
                          double hi, double p, double hbar);

/// |FT Psi_2k (p)|^2 by quadrature, one value per entry of `ps`.
std::vector<double> momentum_density_oracle(const WellConfig& cfg, int k,
                                            std::span<const double> ps);

/// Momentum density of the measured mixture (|FT psi_L|^2 + |FT psi_R|^2)/2.
std::vector<double> momentum_density_mixed(const WellConfig& cfg, int k,
                                           std::span<const double> ps);

enum class Half { kLeft, kRight };

/// Normalized half-box state with the split_halves sign convention:
/// psi_L = sqrt(2) Psi_2k on [-a, 0), psi_R = -sqrt(2) Psi_2k on (0, a].
double half_box_value(const WellConfig& cfg, int k, Half half, double x);

/// <Psi_N | psi_half> by quadrature over the half-box (signed).
double half_box_amplitude(const WellConfig& cfg, int k, int n, Half half);

/// W_{2l+1} = 2 (integral_0^1 sin(pi k y) cos(pi y (l + 1/2)) dy)^2 by
/// adaptive Simpson.
double overlap_weight(const WellConfig& cfg, int k, int l);

/// |<Psi_N | psi_L>|^2 with both functions sampled on a grid of `intervals`
/// intervals and integrated by composite Simpson.
double half_box_weight_grid(const WellConfig& cfg, int k, int n,
                            std::size_t intervals = kDefaultGridIntervals);

/// half_box_weight_grid at N = 2l + 1.
double overlap_weight_grid(const WellConfig& cfg, int k, int l,
                           std::size_t intervals = kDefaultGridIntervals);

/// The quoted k = 1 closed form
///   2 sin^2(pi (l+1)/2) / (pi^2 [((l+1)/2)^2 - 1]^2),
/// evaluated at its removable singularity l = 1 by its limit 1/2.
double overlap_closed_form_k1(int l);

/// Weights W_N (N = 1..cutoff) of the full-well energy eigenstates in the
/// half-box state psi_L.
class SpectralDistribution {
 public:
  SpectralDistribution(std::map<int, double> weights, int cutoff);

  const std::map<int, double>& weights() const { return weights_; }
  int cutoff() const { return cutoff_; }
  /// Zero for N not present.
  double weight(int n) const;
  double partial_sum() const;

 private:
  std::map<int, double> weights_;
  int cutoff_;
};

/// Even N from half_box_amplitude, odd N from overlap_weight.
/// Throws ArgumentError when cutoff < 2k.
SpectralDistribution spectral_distribution(const WellConfig& cfg, int k,
                                           int cutoff);

}  // namespace boxdm::boxwell

#endif  // BOXDM_BOXWELL_HPP_
