#include <gtest/gtest.h>

#include "hom/families.hpp"
#include "hom/groups.hpp"

namespace hom {
namespace {

Matrix s1(const char* v) {
  Matrix m(1, 1, Ring::Q);
  m.at(0, 0) = Scalar::parse(v, Ring::Q);
  return m;
}

HomotopeParameter param(const Matrix& a) { return HomotopeParameter{a, "arbitrary", std::nullopt}; }

Matrix E(size_t i, size_t j) { return Matrix::elementary(2, 2, i, j, Scalar(1)); }

TEST(Groups, OneByOneExamples) {
  HomotopeParameter one = param(s1("1"));
  GroupElement two = make_element(s1("2"), one), three = make_element(s1("3"), one);
  EXPECT_EQ(g_mul(two, three).X, s1("-1"));
  EXPECT_EQ(g_inv(two).X, s1("2"));
  EXPECT_TRUE(g_mul(two, two).X.is_zero());
  EXPECT_EQ(g_mul(two, g_identity(one, 1, 1)).X, s1("2"));

  MatrixInvolution tau = MatrixInvolution::anti(1, Ring::Q, BaseInvolution::identity);
  EXPECT_TRUE(membership(s1("2"), one, GroupKind::U, tau));
  EXPECT_TRUE(membership(s1("0"), one, GroupKind::U, tau));
  EXPECT_FALSE(membership(s1("1"), one, GroupKind::G, tau));
  // 1 is invertible with A = 1 only outside X = 1.
  EXPECT_THROW(make_element(s1("1"), one), std::invalid_argument);
  EXPECT_THROW(membership(s1("2"), one, GroupKind::S, tau), std::invalid_argument);
}

TEST(Groups, SNonMembershipWithSkewParameter) {
  MatrixInvolution tau = MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity);
  HomotopeParameter j = param(E(0, 1) - E(1, 0));
  Matrix two = scale(Scalar(2), Matrix::identity(2, Ring::Q));
  EXPECT_FALSE(membership(two, j, GroupKind::S, tau));
  EXPECT_TRUE(membership(Matrix(2, 2, Ring::Q), j, GroupKind::S, tau));
}

TEST(Groups, FlatGroup) {
  HomotopeParameter zero = param(Matrix(2, 2, Ring::Q));
  Rng rng(4);
  Matrix x = rng.matrix(2, 2, Ring::Q), y = rng.matrix(2, 2, Ring::Q);
  EXPECT_EQ(g_mul(make_element(x, zero), make_element(y, zero)).X, x + y);
  EXPECT_EQ(g_inv(make_element(x, zero)).X, -x);
}

TEST(Groups, HomomorphismAndInverseWitness) {
  Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    HomotopeParameter a = param(rng.matrix(2, 3, Ring::Q));
    Matrix x = rng.matrix(3, 2, Ring::Q), y = rng.matrix(3, 2, Ring::Q);
    GroupElement gx, gy;
    try {
      gx = make_element(x, a);
      gy = make_element(y, a);
    } catch (const std::invalid_argument&) {
      continue;
    }
    GroupElement xy = g_mul(gx, gy);
    EXPECT_EQ(one_minus_AX(xy), one_minus_AX(gx) * one_minus_AX(gy));
    EXPECT_TRUE(g_mul(gx, g_inv(gx)).X.is_zero());
    EXPECT_TRUE(g_mul(g_inv(gx), gx).X.is_zero());
    Matrix id = Matrix::identity(3, Ring::Q);
    EXPECT_EQ(xy.inv_witness, inverse(id - xy.X * a.A));
  }
}

TEST(Groups, CayleyElements) {
  MatrixInvolution tau = MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity);
  Matrix a = E(0, 0) + E(1, 1) + E(0, 1) + E(1, 0);
  Matrix z = E(0, 1) - E(1, 0);
  auto u = cayley(z, a);
  ASSERT_TRUE(u.has_value());
  EXPECT_TRUE(membership(*u, param(a), GroupKind::U, tau));
  EXPECT_TRUE(membership_alt(*u, param(a), GroupKind::U, tau));

  Matrix b = E(0, 1) - E(1, 0);
  Matrix w = E(0, 0) + scale(Scalar(3), E(1, 1)) + E(0, 1) + E(1, 0);
  auto s = cayley(w, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(membership(*s, param(b), GroupKind::S, tau));
  EXPECT_TRUE(membership_alt(*s, param(b), GroupKind::S, tau));
}

TEST(Groups, TangentExamples) {
  Matrix x = E(0, 1), y = E(1, 0), one = Matrix::identity(2, Ring::Q);
  SeriesMatrix c = group_commutator(x, y, one);
  EXPECT_TRUE(c.c[0].is_zero());
  EXPECT_TRUE(c.c[1].is_zero());
  EXPECT_TRUE(c.c[2].is_zero());
  EXPECT_EQ(c.c[3], E(1, 1) - E(0, 0));
  EXPECT_TRUE(tangent_check(x, y, one));
  EXPECT_TRUE(tangent_check(x, y, Matrix(2, 2, Ring::Q)));
  Rng rng(3);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(tangent_check(rng.matrix(2, 2, Ring::Q), rng.matrix(2, 2, Ring::Q), rng.matrix(2, 2, Ring::Q)));
}

TEST(Groups, LinearizationIsAherm) {
  MatrixInvolution tau = MatrixInvolution::anti(3, Ring::Q, BaseInvolution::identity);
  Rng rng(6);
  for (int k = 0; k < 3; ++k) {
    Matrix a = sample_in(sym_space(3, Ring::Q), rng, 3);
    Subspace t = u_tangent_space(a, tau);
    EXPECT_TRUE(t.is_subspace_of(asym_space(3, Ring::Q)));
    EXPECT_TRUE(asym_space(3, Ring::Q).is_subspace_of(t));
    Matrix x = sample_in(asym_space(3, Ring::Q), rng, 3);
    SeriesMatrix d = u_defect(x, a, tau);
    EXPECT_TRUE(d.c[0].is_zero());
    EXPECT_TRUE(d.c[1].is_zero());
  }
}

TEST(Groups, ReportsPass) {
  for (size_t n = 1; n <= 3; ++n) {
    GroupReport r = run_group_checks("all", n, 20, 1);
    for (const auto& res : r.results) EXPECT_TRUE(res.pass) << n << " " << res.axiom;
  }
  EXPECT_THROW(run_group_checks("bogus", 2, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace hom
