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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "boxdm/errors.hpp"
#include "oracles.hpp"

namespace boxdm::hilbert {
namespace {

using testing::random_density;
using testing::random_hermitian;
using testing::random_ket;
using testing::sandwich_partial_trace;

constexpr double kTol = 1e-12;

TEST(ComplexMatrixTest, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd(2, 3)), DimensionError);
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd(0, 0)), DimensionError);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = std::nan("");
  EXPECT_THROW(ComplexMatrix{m}, ArgumentError);
  m(0, 1) = Complex(0.0, INFINITY);
  EXPECT_THROW(ComplexMatrix{m}, ArgumentError);
}

TEST(KronTest, IdentityTimesIdentityIsIdentity) {
  const ComplexMatrix i4 = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  EXPECT_EQ(max_abs_diff(i4, ComplexMatrix::identity(4)), 0.0);
}

TEST(KronTest, BasisProjectors) {
  const ComplexMatrix p = kron(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1}));
  EXPECT_EQ(max_abs_diff(p, ComplexMatrix::diagonal({0, 1, 0, 0})), 0.0);
}

TEST(KronTest, FlipsFirstFactorOfBasisKet) {
  // sigma_1 (x) I on |0>|1> = e_1 gives |1>|1> = e_3.
  const ComplexMatrix op = kron(pauli_x(), ComplexMatrix::identity(2));
  const KetVector out = op * kron(KetVector::basis(2, 0), KetVector::basis(2, 1));
  EXPECT_EQ(max_abs_diff(out, KetVector::basis(4, 3)), 0.0);
}

TEST(KronTest, EntryLayoutAndTraceFactorizes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a(testing::random_matrix(2, rng));
    const ComplexMatrix b(testing::random_matrix(3, rng));
    const ComplexMatrix ab = kron(a, b);
    ASSERT_EQ(ab.dim(), 6u);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l)
            EXPECT_EQ(ab(i * 3 + k, j * 3 + l), a(i, j) * b(k, l));
    EXPECT_NEAR(std::abs(ab.trace() - a.trace() * b.trace()), 0.0, 1e-12);
  }
}

TEST(SpaceLayoutTest, Validation) {
  EXPECT_THROW(SpaceLayout(std::vector<std::size_t>{}), ArgumentError);
  EXPECT_THROW((SpaceLayout{2, 0}), ArgumentError);
  const SpaceLayout l{2, 3, 4};
  EXPECT_EQ(l.total_dim(), 24u);
  const std::vector<std::size_t> pick{2, 0};
  EXPECT_EQ(l.subset(pick), (SpaceLayout{2, 4}));
}

TEST(PartialTraceTest, ProductStateFactorizes) {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix out = partial_trace(kron(a, b), SpaceLayout{2, 3}, {0});
  EXPECT_LE(max_abs_diff(out, b.trace() * a), kTol);
  const ComplexMatrix out_b = partial_trace(kron(a, b), SpaceLayout{2, 3}, {1});
  EXPECT_LE(max_abs_diff(out_b, a.trace() * b), kTol);
}

TEST(PartialTraceTest, MaximallyMixed) {
  const ComplexMatrix rho = Complex(0.25) * ComplexMatrix::identity(4);
  const ComplexMatrix out = partial_trace(rho, SpaceLayout{2, 2}, {1});
  EXPECT_LE(max_abs_diff(out, Complex(0.5) * ComplexMatrix::identity(2)), kTol);
}

TEST(PartialTraceTest, Errors) {
  const ComplexMatrix m = ComplexMatrix::identity(4);
  EXPECT_THROW(partial_trace(m, SpaceLayout{2, 3}, {0}), DimensionError);
  EXPECT_THROW(partial_trace(m, SpaceLayout{2, 2}, std::span<const std::size_t>{}),
               ArgumentError);
  EXPECT_THROW(partial_trace(m, SpaceLayout{2, 2}, {2}), ArgumentError);
}

TEST(PartialTraceTest, KeepOrderIsCanonical) {
  std::mt19937_64 rng(3);
  const ComplexMatrix m = random_hermitian(8, rng);
  const SpaceLayout l{2, 2, 2};
  EXPECT_EQ(max_abs_diff(partial_trace(m, l, {2, 0}), partial_trace(m, l, {0, 2})), 0.0);
}

TEST(PartialTraceProperty, MatchesBasisSandwichOracle) {
  std::mt19937_64 rng(2024);
  const std::vector<std::vector<std::size_t>> layouts{{2, 2}, {2, 3}, {3, 2}, {2, 2, 2}, {2, 3, 2}};
  for (const auto& dims : layouts) {
    const SpaceLayout layout(dims);
    const std::size_t n = dims.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> keep;
      std::vector<bool> kept(n, false);
      for (std::size_t f = 0; f < n; ++f) {
        if (mask & (1u << f)) {
          keep.push_back(f);
          kept[f] = true;
        }
      }
      const ComplexMatrix m(testing::random_matrix(layout.total_dim(), rng));
      const ComplexMatrix fast = partial_trace(m, layout, keep);
      const ComplexMatrix slow = sandwich_partial_trace(m, dims, kept);
      EXPECT_LE(max_abs_diff(fast, slow), kTol) << "mask " << mask;
    }
  }
}

TEST(PartialTraceProperty, PreservesTraceAndIsLinear) {
  std::mt19937_64 rng(99);
  const SpaceLayout layout{2, 2, 2};
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = random_hermitian(8, rng);
    const ComplexMatrix n = random_hermitian(8, rng);
    const std::vector<std::size_t> keep{static_cast<std::size_t>(trial % 3)};
    EXPECT_LE(std::abs(partial_trace(m, layout, keep).trace() - m.trace()), kTol);

    const Complex a(0.3, -1.2), b(-0.7, 0.4);
    const ComplexMatrix lhs = partial_trace(a * m + b * n, layout, keep);
    const ComplexMatrix rhs = a * partial_trace(m, layout, keep) + b * partial_trace(n, layout, keep);
    EXPECT_LE(max_abs_diff(lhs, rhs), kTol);
  }
}

TEST(ProjectorTest, Examples) {
  EXPECT_EQ(max_abs_diff(projector(KetVector{1, 0}), ComplexMatrix::diagonal({1, 0})), 0.0);
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix half = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_LE(max_abs_diff(projector(KetVector{h, h}), half), kTol);
  EXPECT_THROW(projector(KetVector{1, 1}), NormalizationError);
}

TEST(ProjectorProperty, RankOneIdempotentHermitian) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const KetVector v = random_ket(2 + trial % 7, rng);
    const ComplexMatrix p = projector(v);
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_LE(max_abs_diff(p * p, p), kTol);
    EXPECT_NEAR(p.trace().real(), 1.0, kTol);
    if (v.dim() == 2) {
      // Eigenvalues of alpha e1 + beta e2's projector are {0, 1}.
      const auto ev = hermitian_eigenvalues(p);
      EXPECT_NEAR(ev[0], 0.0, kTol);
      EXPECT_NEAR(ev[1], 1.0, kTol);
    }
  }
}

TEST(MatexpTest, PauliXClosedForm) {
  for (double theta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi, 2.3}) {
    const ComplexMatrix u = matexp_antihermitian(pauli_x(), theta);
    const ComplexMatrix expected = Complex(std::cos(theta)) * ComplexMatrix::identity(2) +
                                   Complex(0.0, -std::sin(theta)) * pauli_x();
    EXPECT_LE(max_abs_diff(u, expected), kTol) << theta;
  }
  const ComplexMatrix quarter = matexp_antihermitian(pauli_x(), std::numbers::pi / 2);
  EXPECT_LE(max_abs_diff(quarter, Complex(0.0, -1.0) * pauli_x()), kTol);
}

TEST(MatexpTest, ZeroAngleIsIdentityAndRejectsNonHermitian) {
  std::mt19937_64 rng(17);
  const ComplexMatrix h = random_hermitian(5, rng);
  EXPECT_LE(max_abs_diff(matexp_antihermitian(h, 0.0), ComplexMatrix::identity(5)), kTol);
  EXPECT_THROW(matexp_antihermitian(ComplexMatrix::from_rows({{0, 1}, {0, 0}}), 1.0),
               SymmetryError);
}

TEST(MatexpProperty, UnitaryAndMatchesTaylorOracle) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    const ComplexMatrix h = random_hermitian(dim, rng);
    const double theta = angle(rng);
    const ComplexMatrix u = matexp_antihermitian(h, theta);
    EXPECT_LE(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(dim)), kTol);
    EXPECT_NEAR(std::abs(u.eigen().determinant()), 1.0, 1e-10);
    const ComplexMatrix oracle(testing::taylor_exp_minus_i(h.eigen(), theta));
    EXPECT_LE(max_abs_diff(u, oracle), 1e-11);
  }
}

TEST(EmbedTest, ExtendsByIdentity) {
  const ComplexMatrix n = ComplexMatrix::diagonal({0, 1});
  const ComplexMatrix e = embed(n, SpaceLayout{2, 2, 2}, 1);
  const ComplexMatrix expected =
      kron(kron(ComplexMatrix::identity(2), n), ComplexMatrix::identity(2));
  EXPECT_EQ(max_abs_diff(e, expected), 0.0);
  EXPECT_THROW(embed(n, SpaceLayout{3, 2}, 0), DimensionError);
}

}  // namespace
}  // namespace boxdm::hilbert
