#include <gtest/gtest.h>

#include "hom/involution.hpp"
#include "hom/random.hpp"

namespace hom {
namespace {

Matrix abcd() { return Matrix::from_rows({{1, 2}, {3, 4}}, Ring::Q); }

MatrixInvolution tau_twisted(BlockName b, size_t n) {
  return MatrixInvolution::anti(BaseInvolution::identity, block_constant(b, n));
}

TEST(Apply, SiegelInvolutionsOn2x2) {
  MatrixInvolution t1 = MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity);
  EXPECT_EQ(t1.apply(abcd()), Matrix::from_rows({{1, 3}, {2, 4}}, Ring::Q));
  EXPECT_EQ(tau_twisted(BlockName::J, 1).apply(abcd()), Matrix::from_rows({{4, -2}, {-3, 1}}, Ring::Q));
  EXPECT_EQ(tau_twisted(BlockName::F, 1).apply(abcd()), Matrix::from_rows({{4, 2}, {3, 1}}, Ring::Q));
}

TEST(Apply, RejectsMalformedDeclarations) {
  // Transpose composed with a non-involutive twist does not square to the identity.
  Matrix b = Matrix::from_rows({{1, 1}, {0, 1}}, Ring::Q);
  EXPECT_THROW(MatrixInvolution::anti(BaseInvolution::identity, b), std::invalid_argument);
  EXPECT_THROW(MatrixInvolution::anti(BaseInvolution::identity, Matrix(2, 2, Ring::Q)), std::invalid_argument);
  EXPECT_THROW(MatrixInvolution::anti(1, Ring::Q, BaseInvolution::qconj), std::invalid_argument);
  // Entrywise quaternion conjugation is not an automorphism of M(n, H).
  EXPECT_THROW(MatrixInvolution::automorphism(BaseInvolution::qconj, Matrix::identity(2, Ring::HQ)),
               std::invalid_argument);
  MatrixInvolution t = MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity);
  EXPECT_THROW(t.apply(Matrix(3, 3, Ring::Q)), std::invalid_argument);
}

TEST(Commute, Examples) {
  MatrixInvolution t1 = MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity);
  MatrixInvolution tj = tau_twisted(BlockName::J, 1);
  MatrixInvolution ti = tau_twisted(BlockName::I, 1), tf = tau_twisted(BlockName::F, 1);
  EXPECT_TRUE(commute(t1, tj));
  EXPECT_TRUE(commute(ti, tf));
  EXPECT_TRUE(commute(t1, t1));
  // tau_I o tau_F = J_*.
  Rng rng(4);
  Matrix j = block_constant(BlockName::J, 2);
  MatrixInvolution ti2 = tau_twisted(BlockName::I, 2), tf2 = tau_twisted(BlockName::F, 2);
  for (int n = 0; n < 10; ++n) {
    Matrix x = rng.matrix(4, 4, Ring::Q);
    EXPECT_EQ(ti2.apply(tf2.apply(x)), j * x * inverse(j));
  }
  Matrix b = Matrix::from_rows({{1, 1}, {1, 2}}, Ring::Q);
  MatrixInvolution tb = MatrixInvolution::anti(BaseInvolution::identity, b);
  EXPECT_FALSE(commute(tf, tb));
  EXPECT_THROW(commute(t1, tau_twisted(BlockName::F, 2)), std::invalid_argument);
}

std::vector<size_t> dims(const JointDecomposition& d) {
  std::vector<size_t> out;
  for (const auto& p : d.pieces) out.push_back(p.dim());
  return out;
}

TEST(JointEigenspaces, SingleTranspose) {
  auto d = joint_eigenspaces({MatrixInvolution::anti(2, Ring::Q, BaseInvolution::identity)});
  EXPECT_EQ(dims(d), (std::vector<size_t>{3, 1}));
}

TEST(JointEigenspaces, SiegelAndQuaternionicExamples) {
  auto siegel = joint_eigenspaces({tau_twisted(BlockName::I, 1), tau_twisted(BlockName::F, 1)});
  EXPECT_EQ(dims(siegel), (std::vector<size_t>{2, 1, 1, 0}));
  auto quat = joint_eigenspaces(
      {MatrixInvolution::anti(1, Ring::HQ, BaseInvolution::qconj), MatrixInvolution::anti(1, Ring::HQ, BaseInvolution::qsplit)});
  EXPECT_EQ(dims(quat), (std::vector<size_t>{1, 2, 0, 1}));
  EXPECT_THROW(joint_eigenspaces({tau_twisted(BlockName::F, 1),
                                  MatrixInvolution::anti(BaseInvolution::identity, Matrix::from_rows({{1, 1}, {1, 2}}, Ring::Q))}),
               std::invalid_argument);
}

void check_decomposition(const std::vector<MatrixInvolution>& invs) {
  JointDecomposition d = joint_eigenspaces(invs);
  Ambient amb = d.ambient();
  size_t total = 0;
  Subspace sum(amb);
  auto signs = sign_vectors(invs.size());
  for (const auto& s : signs) {
    const Subspace& p = d.piece(s);
    total += p.dim();
    EXPECT_EQ(sum.intersect(p).dim(), 0u);
    sum = sum.sum(p);
    for (const auto& b : p.basis_matrices())
      for (size_t i = 0; i < invs.size(); ++i) EXPECT_EQ(invs[i].apply(b), s[i] == 1 ? b : -b);
  }
  EXPECT_EQ(total, amb.dim());
  EXPECT_EQ(sum, Subspace::full(amb));
}

TEST(JointEigenspaces, DirectSumAndEigenvalues) {
  check_decomposition({tau_twisted(BlockName::I, 2), tau_twisted(BlockName::F, 2)});
  check_decomposition({MatrixInvolution::anti(2, Ring::HQ, BaseInvolution::qconj),
                       MatrixInvolution::anti(2, Ring::HQ, BaseInvolution::qsplit)});
  // Three commuting involutions on M(2, Q(i)).
  Matrix ipq = block_constant(BlockName::Ipq, 1, 1, Ring::QI);
  check_decomposition({MatrixInvolution::anti(2, Ring::QI, BaseInvolution::identity),
                       MatrixInvolution::anti(BaseInvolution::conj, Matrix::identity(2, Ring::QI)),
                       MatrixInvolution::automorphism(BaseInvolution::identity, ipq)});
}

TEST(JointEigenspaces, PhiFixedAlgebraAndTernaryClosure) {
  std::vector<MatrixInvolution> invs{tau_twisted(BlockName::I, 2), tau_twisted(BlockName::F, 2)};
  JointDecomposition d = joint_eigenspaces(invs);
  Subspace even = d.piece({1, 1}).sum(d.piece({-1, -1}));
  Subspace odd = d.piece({1, -1}).sum(d.piece({-1, 1}));
  auto be = even.basis_matrices(), bo = odd.basis_matrices();
  for (const auto& x : be)
    for (const auto& y : be) EXPECT_TRUE(even.contains(x * y));
  for (const auto& x : bo)
    for (const auto& y : bo)
      for (const auto& z : bo) EXPECT_TRUE(odd.contains(x * y * z));
  // The even part is exactly the fixed space of phi = tau_I o tau_F.
  Matrix j = block_constant(BlockName::J, 2);
  MatrixInvolution phi = MatrixInvolution::automorphism(BaseInvolution::identity, j);
  auto dphi = joint_eigenspaces({phi});
  EXPECT_EQ(dphi.piece({1}), even);
  EXPECT_EQ(dphi.piece({-1}), odd);
}

TEST(SignVectors, Order) {
  auto s = sign_vectors(2);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], (SignVector{1, 1}));
  EXPECT_EQ(s[1], (SignVector{-1, 1}));
  EXPECT_EQ(s[2], (SignVector{1, -1}));
  EXPECT_EQ(s[3], (SignVector{-1, -1}));
  for (size_t i = 0; i < s.size(); ++i) EXPECT_EQ(sign_index(s[i]), i);
  EXPECT_EQ(negate(s[1]), s[2]);
}

}  // namespace
}  // namespace hom
