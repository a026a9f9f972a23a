#include <gtest/gtest.h>

#include "hom/matrix.hpp"
#include "hom/random.hpp"
#include "hom/subspace.hpp"

namespace hom {
namespace {

Matrix E(size_t n, size_t i, size_t j) { return Matrix::elementary(n, n, i, j, Scalar(1)); }

Subspace sym(size_t n) {
  std::vector<Matrix> g;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) g.push_back(E(n, i, j) + E(n, j, i));
  return Subspace::span({n, n, Ring::Q}, g);
}

Subspace asym(size_t n) {
  std::vector<Matrix> g;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) g.push_back(E(n, i, j) - E(n, j, i));
  return Subspace::span({n, n, Ring::Q}, g);
}

TEST(Matmul, Examples) {
  Rng rng(2);
  Matrix x = rng.matrix(3, 3, Ring::HQ);
  EXPECT_EQ(Matrix::identity(3, Ring::HQ) * x, x);
  Matrix j = Matrix::scalar(1, Scalar::unit(Ring::HQ, 2));
  Matrix i = Matrix::scalar(1, Scalar::unit(Ring::HQ, 1));
  EXPECT_EQ((j * i)(0, 0), -Scalar::unit(Ring::HQ, 3));
  EXPECT_EQ(E(2, 0, 1) * E(2, 1, 0), E(2, 0, 0));
  EXPECT_THROW(Matrix(2, 3, Ring::Q) * Matrix(2, 3, Ring::Q), std::invalid_argument);
  EXPECT_THROW(Matrix(1, 1, Ring::QI) * Matrix(1, 1, Ring::HQ), std::invalid_argument);
}

TEST(Matmul, AssociativeOverQuaternions) {
  Rng rng(21);
  for (int n = 0; n < 20; ++n) {
    Matrix a = rng.matrix(2, 3, Ring::HQ), b = rng.matrix(3, 2, Ring::HQ), c = rng.matrix(2, 2, Ring::HQ);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Dagger, Examples) {
  Rng rng(7);
  Matrix x = rng.matrix(2, 3, Ring::Q);
  EXPECT_EQ(dagger(x, BaseInvolution::identity), x.transpose());
  Matrix ci = Matrix::scalar(1, Scalar::gaussian(0, 1));
  EXPECT_EQ(dagger(ci, BaseInvolution::conj), Matrix::scalar(1, Scalar::gaussian(0, -1)));
  Matrix qj = Matrix::scalar(1, Scalar::unit(Ring::HQ, 2));
  EXPECT_EQ(dagger(qj, BaseInvolution::qsplit), -qj);
  EXPECT_THROW(dagger(qj, BaseInvolution::conj), std::invalid_argument);
}

TEST(Dagger, ReversesProducts) {
  Rng rng(13);
  struct Case {
    Ring r;
    BaseInvolution d;
  };
  for (Case c : {Case{Ring::Q, BaseInvolution::identity}, Case{Ring::QI, BaseInvolution::conj},
                 Case{Ring::HQ, BaseInvolution::qconj}, Case{Ring::HQ, BaseInvolution::qsplit}}) {
    for (int n = 0; n < 20; ++n) {
      Matrix x = rng.matrix(2, 3, c.r), y = rng.matrix(3, 2, c.r);
      EXPECT_EQ(dagger(x * y, c.d), dagger(y, c.d) * dagger(x, c.d));
      EXPECT_EQ(dagger(dagger(x, c.d), c.d), x);
    }
  }
}

TEST(Inverse, GaussJordanOverDivisionRings) {
  Rng rng(17);
  for (Ring r : {Ring::Q, Ring::QI, Ring::HQ}) {
    for (int n = 0; n < 20; ++n) {
      Matrix x = rng.matrix(3, 3, r);
      if (!is_invertible(x)) {
        EXPECT_THROW(inverse(x), std::domain_error);
        continue;
      }
      Matrix xi = inverse(x);
      EXPECT_EQ(x * xi, Matrix::identity(3, r));
      EXPECT_EQ(xi * x, Matrix::identity(3, r));
    }
  }
  EXPECT_THROW(inverse(E(2, 0, 0)), std::domain_error);
  EXPECT_EQ(rank(E(2, 0, 1)), 1u);
}

TEST(Flatten, RoundTrip) {
  Rng rng(19);
  for (Ring r : {Ring::Q, Ring::QI, Ring::HQ}) {
    Matrix x = rng.matrix(2, 3, r);
    auto v = flatten(x);
    EXPECT_EQ(v.size(), 6u * components(r));
    EXPECT_EQ(unflatten(v, 2, 3, r), x);
  }
}

TEST(SubspaceOps, Examples) {
  Ambient a22{2, 2, Ring::Q};
  EXPECT_EQ(Subspace::span(a22, {E(2, 0, 0), scale(Scalar(2), E(2, 0, 0))}).dim(), 1u);
  EXPECT_EQ(sym(2).intersect(asym(2)).dim(), 0u);
  std::vector<Matrix> all;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 3; ++j) all.push_back(Matrix::elementary(2, 3, i, j, Scalar(1)));
  EXPECT_EQ(Subspace::span({2, 3, Ring::Q}, all).dim(), 6u);
  EXPECT_THROW(sym(2).sum(sym(3)), std::invalid_argument);
  EXPECT_TRUE(sym(2).contains(E(2, 0, 1) + E(2, 1, 0)));
  EXPECT_FALSE(sym(2).contains(E(2, 0, 1)));
  EXPECT_EQ(sym(3).sum(asym(3)), Subspace::full({3, 3, Ring::Q}));
}

TEST(SubspaceOps, CanonicalBasisIsIdempotent) {
  Subspace s = sym(3);
  Subspace again = Subspace::span(s.ambient(), s.basis_matrices());
  EXPECT_EQ(s, again);
}

TEST(SubspaceOps, DimensionFormula) {
  Rng rng(23);
  Ambient amb{2, 2, Ring::QI};
  for (int n = 0; n < 30; ++n) {
    std::vector<Matrix> gu, gw;
    int ku = static_cast<int>(rng.uniform(0, 5)), kw = static_cast<int>(rng.uniform(0, 5));
    Matrix shared = rng.matrix(2, 2, Ring::QI);
    for (int i = 0; i < ku; ++i) gu.push_back(rng.matrix(2, 2, Ring::QI));
    for (int i = 0; i < kw; ++i) gw.push_back(rng.matrix(2, 2, Ring::QI));
    gu.push_back(shared);
    gw.push_back(shared);
    Subspace u = Subspace::span(amb, gu), w = Subspace::span(amb, gw);
    Subspace sum = u.sum(w), cap = u.intersect(w);
    EXPECT_EQ(sum.dim() + cap.dim(), u.dim() + w.dim());
    EXPECT_TRUE(cap.is_subspace_of(u));
    EXPECT_TRUE(cap.is_subspace_of(w));
    EXPECT_TRUE(cap.contains(shared));
  }
}

TEST(SubspaceOps, Coordinates) {
  Subspace s = sym(2);
  Matrix x = scale(Scalar(Rational(3, 2)), E(2, 0, 1) + E(2, 1, 0)) + E(2, 1, 1);
  auto co = s.coordinates(x);
  ASSERT_TRUE(co.has_value());
  EXPECT_EQ(s.combine(*co), x);
  EXPECT_FALSE(s.coordinates(E(2, 1, 0)).has_value());
}

TEST(BlockConstant, PaperMatrices) {
  Matrix j = block_constant(BlockName::J, 1), f = block_constant(BlockName::F, 1), i = block_constant(BlockName::I, 1);
  EXPECT_EQ(j, Matrix::from_rows({{0, 1}, {-1, 0}}, Ring::Q));
  EXPECT_EQ(f, Matrix::from_rows({{0, 1}, {1, 0}}, Ring::Q));
  EXPECT_EQ(i, Matrix::from_rows({{1, 0}, {0, -1}}, Ring::Q));
  for (size_t n = 1; n <= 3; ++n) {
    Matrix jn = block_constant(BlockName::J, n), fn = block_constant(BlockName::F, n), in = block_constant(BlockName::I, n);
    EXPECT_EQ(jn * jn, -Matrix::identity(2 * n, Ring::Q));
    EXPECT_EQ(fn * fn, Matrix::identity(2 * n, Ring::Q));
    EXPECT_EQ(jn * fn, in);
  }
  Matrix ipq = block_constant(BlockName::Ipq, 2, 1);
  EXPECT_EQ(ipq * ipq, Matrix::identity(3, Ring::Q));
  EXPECT_EQ(ipq(2, 2), Scalar(-1));
  EXPECT_THROW(block_constant(BlockName::J, 0), std::invalid_argument);
  EXPECT_THROW(block_constant(BlockName::Ipq, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace hom
