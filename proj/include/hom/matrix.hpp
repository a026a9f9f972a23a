#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hom/scalar.hpp"

namespace hom {

// Dense matrix over one base ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, Ring ring);

  static Matrix identity(size_t n, Ring ring);
  static Matrix scalar(size_t n, const Scalar& s);
  // unit * E_{ij}.
  static Matrix elementary(size_t rows, size_t cols, size_t i, size_t j, const Scalar& unit);
  // Rows given explicitly; entries are lifted to `ring`.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Ring ring);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Ring ring() const { return ring_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  // Direct access; callers keep the ring uniform.
  Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  void set(size_t i, size_t j, const Scalar& v);

  bool is_zero() const;
  Matrix lifted(Ring target) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const;
  Matrix entrywise(BaseInvolution d) const;
  Matrix block(size_t r0, size_t c0, size_t h, size_t w) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);

  std::string str() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  Ring ring_ = Ring::Q;
  std::vector<Scalar> e_;
};

Matrix matmul(const Matrix& x, const Matrix& y);
Matrix scale(const Scalar& s, const Matrix& x);        // s * X (left multiplication)
Matrix scale_right(const Matrix& x, const Scalar& s);  // X * s
// delta applied entrywise, then transposed.
Matrix dagger(const Matrix& x, BaseInvolution d);
// Exact inverse by Gauss-Jordan over the division ring; throws std::domain_error if singular.
Matrix inverse(const Matrix& x);
bool is_invertible(const Matrix& x);
size_t rank(const Matrix& x);
Matrix block_diag(const Matrix& a, const Matrix& b);
// [[a, b], [c, d]] from four blocks of compatible shapes.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

// Row-major, each entry contributing components(ring) rationals.
std::vector<Rational> flatten(const Matrix& x);
Matrix unflatten(const std::vector<Rational>& v, size_t rows, size_t cols, Ring ring);

// The Q-basis of M(rows, cols; ring) in lexicographic order (i, j, unit).
std::vector<Matrix> elementary_basis(size_t rows, size_t cols, Ring ring);

enum class BlockName { Ipq, J, F, I };
// J(n) = [[0, 1], [-1, 0]], F(n) = [[0, 1], [1, 0]], I(n) = J(n) F(n) with n x n
// identity blocks; Ipq(p, q) = diag(1_p, -1_q). Throws std::invalid_argument on
// non-positive sizes.
Matrix block_constant(BlockName name, size_t a, size_t b = 0, Ring ring = Ring::Q);

// Non-zero entries only; used where one factor of a product is very sparse.
struct SparseMatrix {
  struct Entry {
    size_t row, col;
    Scalar value;
  };
  size_t rows = 0, cols = 0;
  Ring ring = Ring::Q;
  std::vector<Entry> entries;

  static SparseMatrix from(const Matrix& m);
};

// acc += sign * (s * m) and acc += sign * (m * s).
void add_sparse_left(Matrix& acc, const SparseMatrix& s, const Matrix& m, bool negate = false);
void add_sparse_right(Matrix& acc, const Matrix& m, const SparseMatrix& s, bool negate = false);

}  // namespace hom
