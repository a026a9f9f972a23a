#include "hom/matrix.hpp"

#include <stdexcept>

namespace hom {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols, Ring ring) : rows_(rows), cols_(cols), ring_(ring), e_(rows * cols, Scalar(ring)) {}

Matrix Matrix::identity(size_t n, Ring ring) { return scalar(n, Scalar::one(ring)); }

Matrix Matrix::scalar(size_t n, const Scalar& s) {
  Matrix m(n, n, s.ring());
  for (size_t i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::elementary(size_t rows, size_t cols, size_t i, size_t j, const Scalar& unit) {
  if (i >= rows || j >= cols) throw std::invalid_argument("elementary matrix index out of range");
  Matrix m(rows, cols, unit.ring());
  m.at(i, j) = unit;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Ring ring) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c, ring);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j].lifted(ring);
  }
  return m;
}

void Matrix::set(size_t i, size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("matrix index out of range");
  at(i, j) = v.lifted(ring_);
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::lifted(Ring target) const {
  if (target == ring_) return *this;
  Matrix m(rows_, cols_, target);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].lifted(target);
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_, ring_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "matrix addition");
  if (o.ring_ != ring_) *this = lifted(common_ring(ring_, o.ring_));
  for (size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "matrix subtraction");
  if (o.ring_ != ring_) *this = lifted(common_ring(ring_, o.ring_));
  for (size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matmul: shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_, common_ring(a.ring_, b.ring_));
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out.at(i, j).add_product(x, y);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t k = 0; k < a.e_.size(); ++k)
    if (a.e_[k] != b.e_[k]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, ring_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::entrywise(BaseInvolution d) const {
  if (!applicable(d, ring_)) {
    throw std::invalid_argument("involution " + involution_name(d) + " not applicable to ring " + ring_name(ring_));
  }
  Matrix m(rows_, cols_, ring_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = apply(d, e_[k]);
  return m;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t h, size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_) throw std::invalid_argument("block out of range");
  Matrix m(h, w, ring_);
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < w; ++j) m.at(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::invalid_argument("block out of range");
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b(i, j).lifted(ring_);
}

std::string Matrix::str() const {
  std::string out = "[";
  for (size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix matmul(const Matrix& x, const Matrix& y) { return x * y; }

Matrix scale(const Scalar& s, const Matrix& x) {
  Matrix m(x.rows(), x.cols(), common_ring(s.ring(), x.ring()));
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) m.at(i, j) = s * x(i, j);
  return m;
}

Matrix scale_right(const Matrix& x, const Scalar& s) {
  Matrix m(x.rows(), x.cols(), common_ring(s.ring(), x.ring()));
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) m.at(i, j) = x(i, j) * s;
  return m;
}

Matrix dagger(const Matrix& x, BaseInvolution d) { return x.entrywise(d).transpose(); }

namespace {

// Row reduction with left row operations; returns the rank and, when
// `inv` is given, applies the same operations to it.
size_t reduce(Matrix& a, Matrix* inv) {
  size_t rows = a.rows(), cols = a.cols();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
      if (inv)
        for (size_t j = 0; j < inv->cols(); ++j) std::swap(inv->at(p, j), inv->at(r, j));
    }
    Scalar pinv = a(r, c).inverse();
    for (size_t j = 0; j < cols; ++j)
      if (!a(r, j).is_zero()) a.at(r, j) = pinv * a(r, j);
    if (inv)
      for (size_t j = 0; j < inv->cols(); ++j)
        if (!(*inv)(r, j).is_zero()) inv->at(r, j) = pinv * (*inv)(r, j);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (size_t j = 0; j < cols; ++j)
        if (!a(r, j).is_zero()) a.at(i, j) -= f * a(r, j);
      if (inv)
        for (size_t j = 0; j < inv->cols(); ++j)
          if (!(*inv)(r, j).is_zero()) inv->at(i, j) -= f * (*inv)(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Matrix inverse(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix a = x;
  Matrix inv = Matrix::identity(x.rows(), x.ring());
  if (reduce(a, &inv) != x.rows()) throw std::domain_error("matrix is singular");
  return inv;
}

bool is_invertible(const Matrix& x) { return x.is_square() && rank(x) == x.rows(); }

size_t rank(const Matrix& x) {
  Matrix a = x;
  return reduce(a, nullptr);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), common_ring(a.ring(), b.ring()));
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw std::invalid_argument("block2x2: incompatible block shapes");
  }
  Ring r = common_ring(common_ring(a.ring(), b.ring()), common_ring(c.ring(), d.ring()));
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols(), r);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

std::vector<Rational> flatten(const Matrix& x) {
  int k = components(x.ring());
  std::vector<Rational> v;
  v.reserve(x.rows() * x.cols() * k);
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j)
      for (int c = 0; c < k; ++c) v.push_back(x(i, j)[c]);
  return v;
}

Matrix unflatten(const std::vector<Rational>& v, size_t rows, size_t cols, Ring ring) {
  int k = components(ring);
  if (v.size() != rows * cols * k) throw std::invalid_argument("unflatten: length mismatch");
  Matrix m(rows, cols, ring);
  size_t pos = 0;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      for (int c = 0; c < k; ++c) m.at(i, j).component(c) = v[pos++];
  return m;
}

std::vector<Matrix> elementary_basis(size_t rows, size_t cols, Ring ring) {
  std::vector<Matrix> out;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      for (int u = 0; u < components(ring); ++u) out.push_back(Matrix::elementary(rows, cols, i, j, Scalar::unit(ring, u)));
  return out;
}

Matrix block_constant(BlockName name, size_t a, size_t b, Ring ring) {
  if (name == BlockName::Ipq) {
    if (a + b == 0) throw std::invalid_argument("I_pq needs p + q >= 1");
    Matrix m(a + b, a + b, ring);
    for (size_t i = 0; i < a + b; ++i) m.at(i, i) = i < a ? Scalar::one(ring) : -Scalar::one(ring);
    return m;
  }
  if (a == 0) throw std::invalid_argument("block constant needs n >= 1");
  size_t n = a;
  Matrix one = Matrix::identity(n, ring);
  Matrix zero(n, n, ring);
  switch (name) {
    case BlockName::J: return block2x2(zero, one, -one, zero);
    case BlockName::F: return block2x2(zero, one, one, zero);
    case BlockName::I: return block2x2(one, zero, zero, -one);
    default: break;
  }
  throw std::invalid_argument("unknown block constant");
}

SparseMatrix SparseMatrix::from(const Matrix& m) {
  SparseMatrix s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.ring = m.ring();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s.entries.push_back({i, j, m(i, j)});
  return s;
}

void add_sparse_left(Matrix& acc, const SparseMatrix& s, const Matrix& m, bool negate) {
  if (s.cols != m.rows() || acc.rows() != s.rows || acc.cols() != m.cols()) {
    throw std::invalid_argument("add_sparse_left: shape mismatch");
  }
  for (const auto& e : s.entries) {
    Scalar v = negate ? -e.value : e.value;
    for (size_t j = 0; j < m.cols(); ++j) {
      const Scalar& y = m(e.col, j);
      if (!y.is_zero()) acc.at(e.row, j).add_product(v, y);
    }
  }
}

void add_sparse_right(Matrix& acc, const Matrix& m, const SparseMatrix& s, bool negate) {
  if (m.cols() != s.rows || acc.rows() != m.rows() || acc.cols() != s.cols) {
    throw std::invalid_argument("add_sparse_right: shape mismatch");
  }
  for (const auto& e : s.entries) {
    Scalar v = negate ? -e.value : e.value;
    for (size_t i = 0; i < m.rows(); ++i) {
      const Scalar& x = m(i, e.row);
      if (!x.is_zero()) acc.at(i, e.col).add_product(x, v);
    }
  }
}

}  // namespace hom
