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

#include "boxdm/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "boxdm/errors.hpp"

namespace boxdm::hilbert {
namespace {

bool all_finite(const Eigen::MatrixXcd& m) {
  return m.array().real().allFinite() && m.array().imag().allFinite();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension " +
                         std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Flat composite-index offsets of every multi-index over `factors`, with the
// last listed factor varying fastest.
std::vector<std::size_t> factor_offsets(const std::vector<std::size_t>& dims,
                                        const std::vector<std::size_t>& strides,
                                        const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t f : factors) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (std::size_t base : offsets) {
      for (std::size_t i = 0; i < dims[f]; ++i) {
        next.push_back(base + i * strides[f]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionError("ComplexMatrix must be square and non-empty, got " +
                         std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()));
  }
  if (!all_finite(m_)) {
    throw ArgumentError("ComplexMatrix has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Complex& e : entries) d(i++) = e;
  return ComplexMatrix(d.asDiagonal());
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("from_rows: ragged or non-square initializer");
    }
    Eigen::Index c = 0;
    for (const Complex& e : row) m(r, c++) = e;
    ++r;
  }
  return ComplexMatrix(std::move(m));
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "operator-");
  return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  return ComplexMatrix(a.m_ * b.m_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix(s * a.m_);
}

KetVector::KetVector(Eigen::VectorXcd v) : v_(std::move(v)) {
  if (v_.size() == 0) throw DimensionError("KetVector must be non-empty");
  if (!all_finite(v_)) throw ArgumentError("KetVector has non-finite entries");
}

KetVector::KetVector(std::initializer_list<Complex> entries)
    : KetVector([&] {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
        Eigen::Index i = 0;
        for (const Complex& e : entries) v(i++) = e;
        return v;
      }()) {}

KetVector KetVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw ArgumentError("basis index " + std::to_string(index) +
                        " out of range for dimension " + std::to_string(dim));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return KetVector(std::move(v));
}

bool KetVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

KetVector operator*(const ComplexMatrix& m, const KetVector& v) {
  require_same_dim(m.dim(), v.dim(), "matrix-vector product");
  return KetVector(m.eigen() * v.v_);
}

SpaceLayout::SpaceLayout(std::vector<std::size_t> factor_dims)
    : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw ArgumentError("SpaceLayout needs at least one factor");
  if (std::ranges::any_of(dims_, [](std::size_t d) { return d == 0; })) {
    throw ArgumentError("SpaceLayout factor dimensions must be positive");
  }
}

SpaceLayout::SpaceLayout(std::initializer_list<std::size_t> factor_dims)
    : SpaceLayout(std::vector<std::size_t>(factor_dims)) {}

std::size_t SpaceLayout::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                         std::multiplies<>());
}

SpaceLayout SpaceLayout::subset(std::span<const std::size_t> factors) const {
  std::vector<std::size_t> sorted(factors.begin(), factors.end());
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> dims;
  for (std::size_t f : sorted) {
    if (f >= dims_.size()) {
      throw ArgumentError("factor index " + std::to_string(f) +
                          " outside layout with " +
                          std::to_string(dims_.size()) + " factors");
    }
    dims.push_back(dims_[f]);
  }
  return SpaceLayout(std::move(dims));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index na = a.eigen().rows();
  const Eigen::Index nb = b.eigen().rows();
  Eigen::MatrixXcd out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
    }
  }
  return ComplexMatrix(std::move(out));
}

KetVector kron(const KetVector& a, const KetVector& b) {
  const Eigen::Index na = a.eigen().size();
  const Eigen::Index nb = b.eigen().size();
  Eigen::VectorXcd out(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    out.segment(i * nb, nb) = a.eigen()(i) * b.eigen();
  }
  return KetVector(std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SpaceLayout& layout,
                            std::span<const std::size_t> keep) {
  if (layout.total_dim() != m.dim()) {
    throw DimensionError("partial_trace: layout dimension " +
                         std::to_string(layout.total_dim()) +
                         " does not match matrix dimension " +
                         std::to_string(m.dim()));
  }
  if (keep.empty()) throw ArgumentError("partial_trace: empty keep set");

  const std::size_t n = layout.factor_count();
  std::vector<bool> kept(n, false);
  for (std::size_t f : keep) {
    if (f >= n) {
      throw ArgumentError("partial_trace: factor index " + std::to_string(f) +
                          " outside layout with " + std::to_string(n) +
                          " factors");
    }
    kept[f] = true;
  }

  const std::vector<std::size_t> dims(layout.factor_dims().begin(),
                                      layout.factor_dims().end());
  std::vector<std::size_t> strides(n, 1);
  for (std::size_t f = n - 1; f > 0; --f) strides[f - 1] = strides[f] * dims[f];

  std::vector<std::size_t> keep_factors;
  std::vector<std::size_t> trace_factors;
  for (std::size_t f = 0; f < n; ++f) {
    (kept[f] ? keep_factors : trace_factors).push_back(f);
  }
  const auto keep_off = factor_offsets(dims, strides, keep_factors);
  const auto trace_off = factor_offsets(dims, strides, trace_factors);

  const auto out_dim = static_cast<Eigen::Index>(keep_off.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  const Eigen::MatrixXcd& src = m.eigen();
  for (Eigen::Index r = 0; r < out_dim; ++r) {
    for (Eigen::Index c = 0; c < out_dim; ++c) {
      Complex sum = 0.0;
      for (std::size_t t : trace_off) {
        sum += src(static_cast<Eigen::Index>(keep_off[r] + t),
                   static_cast<Eigen::Index>(keep_off[c] + t));
      }
      out(r, c) = sum;
    }
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix embed(const ComplexMatrix& op, const SpaceLayout& layout,
                    std::size_t factor) {
  if (factor >= layout.factor_count()) {
    throw ArgumentError("embed: factor index " + std::to_string(factor) +
                        " outside layout");
  }
  require_same_dim(op.dim(), layout.factor_dim(factor), "embed");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t f = 0; f < layout.factor_count(); ++f) {
    out = kron(out, f == factor ? op
                                : ComplexMatrix::identity(layout.factor_dim(f)));
  }
  return out;
}

ComplexMatrix projector(const KetVector& v) {
  if (!v.is_normalized()) {
    throw NormalizationError("projector: ket has norm^2 " +
                             std::to_string(v.norm_squared()));
  }
  return ComplexMatrix(v.eigen() * v.eigen().adjoint());
}

ComplexMatrix matexp_antihermitian(const ComplexMatrix& h, double theta) {
  if (!h.is_hermitian()) {
    throw SymmetryError("matexp_antihermitian: generator is not Hermitian");
  }
  const Eigen::MatrixXcd sym = 0.5 * (h.eigen() + h.eigen().adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error("matexp_antihermitian: eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (Complex(0.0, -theta) * es.eigenvalues().cast<Complex>())
          .array()
          .exp()
          .matrix();
  return ComplexMatrix(es.eigenvectors() * phases.asDiagonal() *
                       es.eigenvectors().adjoint());
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_hermitian()) {
    throw SymmetryError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const Eigen::MatrixXcd sym = 0.5 * (h.eigen() + h.eigen().adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const KetVector& a, const KetVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

}  // namespace boxdm::hilbert
