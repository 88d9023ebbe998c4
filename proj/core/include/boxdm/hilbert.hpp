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

#ifndef BOXDM_HILBERT_HPP_
#define BOXDM_HILBERT_HPP_

// Dense complex linear algebra over small composite Hilbert spaces.
//
// Composite spaces are described by a SpaceLayout, an ordered list of
// tensor-factor dimensions. Factor indices are 0-based: the first subsystem
// (box S1 in the two-box scenario) is factor 0. Basis states of the
// composite space are ordered with the last factor varying fastest, which is
// the convention of kron().

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace boxdm::hilbert {

using Complex = std::complex<double>;

/// Absolute tolerance for structural checks (Hermiticity, normalization,
/// idempotence, unitarity).
inline constexpr double kTolerance = 1e-12;

/// Dense square complex matrix with finite entries.
class ComplexMatrix {
 public:
  /// Throws DimensionError unless `m` is square and non-empty, and
  /// ArgumentError if any entry is NaN or infinite.
  explicit ComplexMatrix(Eigen::MatrixXcd m);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);
  /// Row-major initializer; the number of rows must equal the row length.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Eigen::MatrixXcd& eigen() const { return m_; }

  Complex trace() const { return m_.trace(); }
  ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint()); }
  bool is_hermitian(double tol = kTolerance) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  Eigen::MatrixXcd m_;
};

/// Dense complex column vector.
class KetVector {
 public:
  /// Throws DimensionError if empty, ArgumentError on non-finite entries.
  explicit KetVector(Eigen::VectorXcd v);
  KetVector(std::initializer_list<Complex> entries);

  /// Computational basis vector e_index of dimension dim.
  static KetVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(v_.size()); }
  Complex operator[](std::size_t i) const {
    return v_(static_cast<Eigen::Index>(i));
  }
  const Eigen::VectorXcd& eigen() const { return v_; }

  double norm_squared() const { return v_.squaredNorm(); }
  bool is_normalized(double tol = kTolerance) const;

  friend KetVector operator*(const ComplexMatrix& m, const KetVector& v);

 private:
  Eigen::VectorXcd v_;
};

/// Ordered tensor-factor dimensions of a composite space.
class SpaceLayout {
 public:
  /// Throws ArgumentError if empty or if any dimension is zero.
  explicit SpaceLayout(std::vector<std::size_t> factor_dims);
  SpaceLayout(std::initializer_list<std::size_t> factor_dims);

  std::size_t factor_count() const { return dims_.size(); }
  std::size_t factor_dim(std::size_t factor) const { return dims_.at(factor); }
  std::span<const std::size_t> factor_dims() const { return dims_; }
  std::size_t total_dim() const;

  /// Layout of the listed factors, in ascending factor order.
  SpaceLayout subset(std::span<const std::size_t> factors) const;

  friend bool operator==(const SpaceLayout&, const SpaceLayout&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Tensor (Kronecker) product; entry (i*b.dim+k, j*b.dim+l) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
KetVector kron(const KetVector& a, const KetVector& b);

/// Traces out every factor not listed in `keep`. The kept factors stay in
/// ascending order regardless of the order in `keep`.
///
/// Throws DimensionError if layout.total_dim() != m.dim(), ArgumentError if
/// `keep` is empty or names a factor outside the layout.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SpaceLayout& layout,
                            std::span<const std::size_t> keep);
inline ComplexMatrix partial_trace(const ComplexMatrix& m,
                                   const SpaceLayout& layout,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(m, layout, std::span(keep.begin(), keep.size()));
}

/// Extends an operator on a single factor by identities on all others.
ComplexMatrix embed(const ComplexMatrix& op, const SpaceLayout& layout,
                    std::size_t factor);

/// |v><v| for a normalized v; throws NormalizationError otherwise.
ComplexMatrix projector(const KetVector& v);

/// exp(-i * theta * h) for Hermitian h, built from the eigendecomposition
/// h = V diag(lambda) V^dagger. Throws SymmetryError if h is not Hermitian.
ComplexMatrix matexp_antihermitian(const ComplexMatrix& h, double theta);

/// Pauli sigma_1.
ComplexMatrix pauli_x();

/// Real eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// max_ij |a(i,j) - b(i,j)|; throws DimensionError on size mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const KetVector& a, const KetVector& b);

}  // namespace boxdm::hilbert

#endif  // BOXDM_HILBERT_HPP_
