#include "hom/normal_form.hpp"

#include <stdexcept>

#include "hom/families.hpp"

namespace hom {

namespace {

using Vec = std::vector<Scalar>;

// Reduced row echelon form R = g * M with g invertible.
std::pair<Matrix, Matrix> row_reduce(Matrix m) {
  size_t rows = m.rows(), cols = m.cols();
  Matrix g = Matrix::identity(rows, m.ring());
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (size_t j = 0; j < rows; ++j) std::swap(g.at(r, j), g.at(piv, j));
    Scalar inv = m(r, c).inverse();
    for (size_t j = 0; j < cols; ++j) m.at(r, j) = inv * m(r, j);
    for (size_t j = 0; j < rows; ++j) g.at(r, j) = inv * g(r, j);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m(r, j);
      for (size_t j = 0; j < rows; ++j) g.at(i, j) -= f * g(r, j);
    }
    ++r;
  }
  return {m, g};
}

Matrix row_matrix(const Vec& v, Ring ring) {
  Matrix m(1, v.size(), ring);
  for (size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

Vec axpy(const Vec& x, const Scalar& a, const Vec& y) {  // x + a*y
  Vec out = x;
  for (size_t j = 0; j < x.size(); ++j) out[j] += a * y[j];
  return out;
}

Vec scaled(const Scalar& a, const Vec& y) {
  Vec out = y;
  for (auto& e : out) e = a * e;
  return out;
}

struct Form {
  const Matrix& a;
  BaseInvolution d;
  Scalar operator()(const Vec& u, const Vec& v) const {
    Ring r = a.ring();
    Matrix m = row_matrix(u, r) * a * dagger(row_matrix(v, r), d);
    return m(0, 0);
  }
};

Matrix rows_to_matrix(const std::vector<Vec>& rows, size_t n, Ring ring) {
  Matrix g(rows.size(), n, ring);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) g.at(i, j) = rows[i][j];
  return g;
}

std::vector<Vec> standard_basis(size_t n, Ring ring) {
  std::vector<Vec> out(n, Vec(n, Scalar(Rational(0)).lifted(ring)));
  for (size_t i = 0; i < n; ++i) out[i][i] = Scalar::one(ring);
  return out;
}

// Largest m with m^2 | n, by trial division; 1 when |n| is too large to try.
mpz_class square_part(mpz_class n) {
  n = abs(n);
  mpz_class m = 1;
  if (n > mpz_class("1000000000000")) return m;
  for (mpz_class p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      m *= p;
    }
  }
  return m;
}

// Congruence diagonalization of a symmetric or hermitian form.
std::vector<Vec> orthogonal_basis(const Form& b, size_t n, Ring ring) {
  std::vector<Vec> rest = standard_basis(n, ring), out;
  while (!rest.empty()) {
    size_t pick = rest.size();
    for (size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
      if (!b(rest[i], rest[i]).is_zero()) pick = i;
    if (pick == rest.size()) {
      for (size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j) {
          Scalar c = b(rest[i], rest[j]);
          if (c.is_zero()) continue;
          // b(u + c w, u + c w) = 2 |b(u, w)|^2 when b(u,u) = b(w,w) = 0.
          rest[i] = axpy(rest[i], b.d == BaseInvolution::conj ? c : Scalar::one(ring), rest[j]);
          pick = i;
          break;
        }
      if (pick == rest.size()) {
        for (auto& v : rest) out.push_back(std::move(v));
        break;
      }
    }
    Vec v = rest[pick];
    rest.erase(rest.begin() + static_cast<long>(pick));
    Scalar inv = b(v, v).inverse();
    for (auto& w : rest) w = axpy(w, -(b(w, v) * inv), v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> symplectic_basis(const Form& b, size_t n, Ring ring) {
  std::vector<Vec> rest = standard_basis(n, ring), out;
  for (;;) {
    size_t pi = 0, pj = 0;
    bool found = false;
    for (size_t i = 0; i < rest.size() && !found; ++i)
      for (size_t j = i + 1; j < rest.size() && !found; ++j)
        if (!b(rest[i], rest[j]).is_zero()) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    Vec u = rest[pi];
    Vec w = scaled(b(rest[pi], rest[pj]).inverse(), rest[pj]);
    rest.erase(rest.begin() + static_cast<long>(pj));
    rest.erase(rest.begin() + static_cast<long>(pi));
    for (auto& x : rest) {
      Scalar bxw = b(x, w), bxu = b(x, u);
      x = axpy(axpy(x, -bxw, u), bxu, w);
    }
    out.push_back(std::move(u));
    out.push_back(std::move(w));
  }
  for (auto& v : rest) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::string kind_name(NormalKind k) {
  switch (k) {
    case NormalKind::rectangular: return "rectangular";
    case NormalKind::symmetric: return "symmetric";
    case NormalKind::skew: return "skew";
    case NormalKind::hermitian: return "hermitian";
  }
  return "?";
}

NormalKind parse_kind(const std::string& s) {
  for (auto k : {NormalKind::rectangular, NormalKind::symmetric, NormalKind::skew, NormalKind::hermitian})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown normal form kind: " + s);
}

NormalForm normal_form(const Matrix& a, NormalKind kind) {
  NormalForm nf;
  nf.kind = kind;
  nf.A = a;
  Ring ring = a.ring();
  bool ring_ok = kind == NormalKind::hermitian ? ring == Ring::QI
                 : kind == NormalKind::rectangular ? (ring == Ring::Q || ring == Ring::QI)
                                                   : ring == Ring::Q;
  if (!ring_ok) throw std::invalid_argument("normal form " + kind_name(kind) + " is not supported over " + ring_name(ring));
  if (kind != NormalKind::rectangular && !a.is_square()) throw std::invalid_argument("normal form: matrix must be square");
  BaseInvolution d = kind == NormalKind::hermitian ? BaseInvolution::conj : BaseInvolution::identity;
  if (kind == NormalKind::symmetric && a.transpose() != a) throw std::invalid_argument("normal form: matrix is not symmetric");
  if (kind == NormalKind::skew && a.transpose() != -a) throw std::invalid_argument("normal form: matrix is not skew-symmetric");
  if (kind == NormalKind::hermitian && dagger(a, d) != a) throw std::invalid_argument("normal form: matrix is not hermitian");

  if (kind == NormalKind::rectangular) {
    auto [r1, g1] = row_reduce(a);
    auto [r2, h] = row_reduce(r1.transpose());
    nf.left = g1;
    nf.right = h.transpose();
    nf.A_nf = nf.left * a * nf.right;
    nf.rank = rank(a);
    nf.verified = true;
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) {
        bool one = i == j && i < nf.rank;
        if (nf.A_nf(i, j) != (one ? Scalar::one(ring) : Scalar(Rational(0)).lifted(ring))) nf.verified = false;
      }
    return nf;
  }

  size_t n = a.rows();
  Form b{a, d};
  std::vector<Vec> basis;
  if (kind == NormalKind::skew) {
    basis = symplectic_basis(b, n, ring);
  } else {
    std::vector<Vec> raw = orthogonal_basis(b, n, ring);
    std::vector<Vec> pos, neg, zero;
    for (auto& v : raw) {
      Scalar s = b(v, v);
      if (s.is_zero()) {
        zero.push_back(std::move(v));
        continue;
      }
      // Scale to a squarefree integer: num/den * (den/m)^2 = num*den/m^2.
      const Rational& q = s[0];
      mpz_class num = q.numerator(), den = q.denominator();
      mpz_class m = square_part(num * den);
      mpq_class fq(den, m);
      fq.canonicalize();
      Rational f(fq);
      Vec w = scaled(Scalar(f).lifted(ring), v);
      (q.sign() > 0 ? pos : neg).push_back(std::move(w));
    }
    for (auto* group : {&pos, &neg, &zero})
      for (auto& v : *group) basis.push_back(std::move(v));
    nf.signs.insert(nf.signs.end(), pos.size(), 1);
    nf.signs.insert(nf.signs.end(), neg.size(), -1);
    nf.signs.insert(nf.signs.end(), zero.size(), 0);
  }
  nf.left = rows_to_matrix(basis, n, ring);
  nf.right = dagger(nf.left, d);
  nf.A_nf = nf.left * a * nf.right;
  nf.rank = rank(a);
  bool shape = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Scalar& e = nf.A_nf(i, j);
      if (kind == NormalKind::skew) {
        bool in_block = i / 2 == j / 2 && i != j && std::max(i, j) < nf.rank;
        Scalar want = in_block ? (i < j ? Scalar::one(ring) : -Scalar::one(ring)) : Scalar(Rational(0)).lifted(ring);
        if (e != want) shape = false;
      } else if (i != j ? !e.is_zero() : (nf.signs[i] == 0) != e.is_zero()) {
        shape = false;
      }
    }
  nf.verified = shape && is_invertible(nf.left);
  return nf;
}

std::vector<Subspace> normal_form_spaces(const NormalForm& nf) {
  Ring ring = nf.A.ring();
  switch (nf.kind) {
    case NormalKind::rectangular: return {rect_space(nf.A.cols(), nf.A.rows(), ring)};
    case NormalKind::symmetric:
    case NormalKind::skew: return {sym_space(nf.A.rows(), ring), asym_space(nf.A.rows(), ring)};
    case NormalKind::hermitian: return {herm_space(nf.A.rows(), ring)};
  }
  return {};
}

bool normal_form_isomorphic(const NormalForm& nf) {
  if (!is_invertible(nf.left) || !is_invertible(nf.right)) return false;
  GammaResult r = nf.gamma();
  for (const auto& v : normal_form_spaces(nf))
    if (!verify_gamma(r, nf.A, v)) return false;
  return true;
}

}  // namespace hom
