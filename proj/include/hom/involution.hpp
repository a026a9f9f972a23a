#pragma once

#include <string>
#include <vector>

#include "hom/matrix.hpp"
#include "hom/subspace.hpp"

namespace hom {

// X -> B delta(X)^t B^{-1} (antiautomorphism) or X -> B delta(X) B^{-1}
// (automorphism) on M(n, n; ring). Validated at construction: the action
// must square to the identity and be an (anti)morphism on the elementary
// basis; otherwise std::invalid_argument is thrown.
class MatrixInvolution {
 public:
  enum class Kind { anti, automorphism };

  MatrixInvolution(Kind kind, BaseInvolution delta, Matrix twist);
  static MatrixInvolution anti(size_t n, Ring ring, BaseInvolution delta);
  static MatrixInvolution anti(BaseInvolution delta, Matrix twist);
  static MatrixInvolution automorphism(BaseInvolution delta, Matrix twist);

  Kind kind() const { return kind_; }
  BaseInvolution delta() const { return delta_; }
  bool transpose() const { return kind_ == Kind::anti; }
  const Matrix& twist() const { return twist_; }
  size_t size() const { return twist_.rows(); }
  Ring ring() const { return twist_.ring(); }
  Ambient ambient() const { return {size(), size(), ring()}; }

  Matrix apply(const Matrix& x) const;

 private:
  Matrix core(const Matrix& x) const;
  void validate() const;

  Kind kind_;
  BaseInvolution delta_;
  Matrix twist_;
  Matrix twist_inv_;
  bool twist_is_identity_ = false;
};

bool commute(const MatrixInvolution& a, const MatrixInvolution& b);

using SignVector = std::vector<int>;

// All sign vectors of length k; entry i is -1 iff bit i of the index is set,
// so for k = 2 the order is (1,1), (-1,1), (1,-1), (-1,-1).
std::vector<SignVector> sign_vectors(size_t k);
size_t sign_index(const SignVector& s);
SignVector negate(const SignVector& s);
std::string sign_str(const SignVector& s);

struct JointDecomposition {
  std::vector<MatrixInvolution> involutions;
  std::vector<Subspace> pieces;  // indexed by sign_index

  const Subspace& piece(const SignVector& s) const { return pieces.at(sign_index(s)); }
  Ambient ambient() const { return involutions.front().ambient(); }
};

// Throws std::invalid_argument if the involutions do not pairwise commute
// or live on different algebras.
JointDecomposition joint_eigenspaces(const std::vector<MatrixInvolution>& invs);

// Projection of X onto the joint eigenspace with signs s.
Matrix project(const std::vector<MatrixInvolution>& invs, const SignVector& s, const Matrix& x);

}  // namespace hom
