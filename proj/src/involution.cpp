#include "hom/involution.hpp"

#include <stdexcept>

namespace hom {

MatrixInvolution::MatrixInvolution(Kind kind, BaseInvolution delta, Matrix twist)
    : kind_(kind), delta_(delta), twist_(std::move(twist)) {
  if (!twist_.is_square() || twist_.rows() == 0) throw std::invalid_argument("twist must be a non-empty square matrix");
  if (!applicable(delta_, twist_.ring())) {
    throw std::invalid_argument("involution " + involution_name(delta_) + " not applicable to ring " +
                                ring_name(twist_.ring()));
  }
  try {
    twist_inv_ = inverse(twist_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("twist matrix is not invertible");
  }
  twist_is_identity_ = twist_ == Matrix::identity(twist_.rows(), twist_.ring());
  validate();
}

MatrixInvolution MatrixInvolution::anti(size_t n, Ring ring, BaseInvolution delta) {
  return MatrixInvolution(Kind::anti, delta, Matrix::identity(n, ring));
}

MatrixInvolution MatrixInvolution::anti(BaseInvolution delta, Matrix twist) {
  return MatrixInvolution(Kind::anti, delta, std::move(twist));
}

MatrixInvolution MatrixInvolution::automorphism(BaseInvolution delta, Matrix twist) {
  return MatrixInvolution(Kind::automorphism, delta, std::move(twist));
}

Matrix MatrixInvolution::core(const Matrix& x) const {
  Matrix c = delta_ == BaseInvolution::identity ? x : x.entrywise(delta_);
  return kind_ == Kind::anti ? c.transpose() : c;
}

Matrix MatrixInvolution::apply(const Matrix& x) const {
  if (x.rows() != size() || x.cols() != size()) throw std::invalid_argument("involution applied to wrong shape");
  Matrix c = core(x.lifted(ring()));
  if (twist_is_identity_) return c;
  return twist_ * c * twist_inv_;
}

void MatrixInvolution::validate() const {
  size_t n = size();
  int k = components(ring());
  std::vector<Matrix> basis = elementary_basis(n, n, ring());
  std::vector<Matrix> image;
  image.reserve(basis.size());
  for (const auto& e : basis) {
    image.push_back(apply(e));
    if (apply(image.back()) != e) throw std::invalid_argument("declared involution does not square to the identity");
  }
  // A product of two basis elements is zero or +-(a basis element), so its
  // image is read off the precomputed images.
  Matrix zero(n, n, ring());
  for (size_t a = 0; a < basis.size(); ++a) {
    size_t i = a / (n * k), j = (a / k) % n;
    for (size_t b = 0; b < basis.size(); ++b) {
      size_t i2 = b / (n * k), l = (b / k) % n;
      Matrix lhs = zero;
      if (j == i2) {
        Scalar w = basis[a](i, j) * basis[b](i2, l);
        for (int u = 0; u < k; ++u) {
          if (w[u].is_zero()) continue;
          lhs = scale(Scalar(w[u]), image[(i * n + l) * k + u]);
        }
      }
      Matrix rhs = kind_ == Kind::anti ? image[b] * image[a] : image[a] * image[b];
      if (lhs != rhs) {
        throw std::invalid_argument(kind_ == Kind::anti ? "declared antiautomorphism does not reverse products"
                                                        : "declared automorphism does not preserve products");
      }
    }
  }
}

bool commute(const MatrixInvolution& a, const MatrixInvolution& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("involutions act on different algebras");
  for (const auto& e : elementary_basis(a.size(), a.size(), a.ring()))
    if (a.apply(b.apply(e)) != b.apply(a.apply(e))) return false;
  return true;
}

std::vector<SignVector> sign_vectors(size_t k) {
  std::vector<SignVector> out;
  for (size_t idx = 0; idx < (size_t{1} << k); ++idx) {
    SignVector s(k);
    for (size_t i = 0; i < k; ++i) s[i] = (idx >> i) & 1 ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

size_t sign_index(const SignVector& s) {
  size_t idx = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 1 && s[i] != -1) throw std::invalid_argument("sign vector entries must be +1 or -1");
    if (s[i] == -1) idx |= size_t{1} << i;
  }
  return idx;
}

SignVector negate(const SignVector& s) {
  SignVector r = s;
  for (auto& x : r) x = -x;
  return r;
}

std::string sign_str(const SignVector& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

Matrix project(const std::vector<MatrixInvolution>& invs, const SignVector& s, const Matrix& x) {
  if (s.size() != invs.size()) throw std::invalid_argument("sign vector length mismatch");
  Matrix y = x;
  Rational half(1, 2);
  for (size_t i = 0; i < invs.size(); ++i) {
    Matrix t = invs[i].apply(y);
    y = s[i] == 1 ? y + t : y - t;
    y = scale(Scalar(half), y);
  }
  return y;
}

JointDecomposition joint_eigenspaces(const std::vector<MatrixInvolution>& invs) {
  if (invs.empty()) throw std::invalid_argument("joint_eigenspaces needs at least one involution");
  for (size_t i = 0; i < invs.size(); ++i)
    for (size_t j = i + 1; j < invs.size(); ++j)
      if (!commute(invs[i], invs[j])) throw std::invalid_argument("involutions do not commute");
  JointDecomposition dec{invs, {}};
  Ambient amb = invs.front().ambient();
  std::vector<Matrix> basis = elementary_basis(amb.rows, amb.cols, amb.ring);
  for (const auto& s : sign_vectors(invs.size())) {
    std::vector<Matrix> images;
    images.reserve(basis.size());
    for (const auto& e : basis) images.push_back(project(invs, s, e));
    dec.pieces.push_back(Subspace::span(amb, images));
  }
  return dec;
}

}  // namespace hom
