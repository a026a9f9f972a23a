#include "hom/homotope.hpp"

#include <stdexcept>

namespace hom {

Matrix bracket_A(const Matrix& x, const Matrix& y, const Matrix& a) {
  Matrix xa = x * a, ya = y * a;
  return xa * y - ya * x;
}

Matrix triple_A(const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& a) {
  Matrix aya = a * y * a, axa = a * x * a;
  return jordan_T(x, aya, z) - jordan_T(y, axa, z);
}

Matrix jordan_T(const Matrix& x, const Matrix& y, const Matrix& z) { return x * y * z + z * y * x; }

// ---------------------------------------------------------------- AlphaMap

Matrix LinearTemplate::apply(const Matrix& x) const {
  Matrix y;
  switch (op) {
    case Op::none: y = x; break;
    case Op::transpose: y = x.transpose(); break;
    case Op::entrywise: y = x.entrywise(delta); break;
    case Op::dagger: y = dagger(x, delta); break;
    case Op::conj_j: y = x.lifted(Ring::HQ).entrywise(BaseInvolution::qsplit).entrywise(BaseInvolution::qconj); break;
  }
  if (left.rows()) y = left * y;
  if (right.rows()) y = y * right;
  return sign < 0 ? -y : y;
}

std::string LinearTemplate::describe(const std::string& var) const {
  std::string core;
  switch (op) {
    case Op::none: core = var; break;
    case Op::transpose: core = var + "^t"; break;
    case Op::entrywise: core = involution_name(delta) + "(" + var + ")"; break;
    case Op::dagger: core = involution_name(delta) + "(" + var + ")^t"; break;
    case Op::conj_j: core = "j" + var + "j^-1"; break;
  }
  std::string out = sign < 0 ? "-" : "";
  if (left.rows()) out += "L*";
  out += core;
  if (right.rows()) out += "*R";
  return out;
}

AlphaMap AlphaMap::single(Ambient domain, LinearTemplate f) {
  AlphaMap m;
  m.domain_ = domain;
  Matrix probe(domain.rows, domain.cols, domain.ring);
  Matrix img = f.apply(probe);
  m.codomain_ = Ambient{img.rows(), img.cols(), domain.ring};
  m.f1_ = std::move(f);
  return m;
}

AlphaMap AlphaMap::pair(size_t a, size_t b, size_t c, size_t d, Ring ring, LinearTemplate f1, LinearTemplate f2) {
  AlphaMap m;
  m.is_pair_ = true;
  m.a_ = a;
  m.b_ = b;
  m.c_ = c;
  m.d_ = d;
  m.domain_ = Ambient{a + c, d + b, ring};
  m.codomain_ = Ambient{d + b, a + c, ring};
  Matrix i1 = f1.apply(Matrix(a, b, ring));
  Matrix i2 = f2.apply(Matrix(c, d, ring));
  if (i1.rows() != d || i1.cols() != c || i2.rows() != b || i2.cols() != a) {
    throw std::invalid_argument("pair alpha: component images have the wrong shape");
  }
  m.f1_ = std::move(f1);
  m.f2_ = std::move(f2);
  return m;
}

AlphaMap AlphaMap::conjugation(const Matrix& a, size_t p, size_t q) {
  if (a.rows() != q || a.cols() != p) throw std::invalid_argument("conjugation alpha: A must be q x p");
  LinearTemplate f;
  f.left = a;
  f.right = a;
  return single(Ambient{p, q, a.ring()}, f);
}

Matrix AlphaMap::apply(const Matrix& x) const {
  if (x.rows() != domain_.rows || x.cols() != domain_.cols) throw std::invalid_argument("alpha applied to wrong shape");
  if (!is_pair_) return f1_.apply(x);
  auto [x1, x2] = split(x);
  return embed_image(f1_.apply(x1), f2_.apply(x2));
}

std::string AlphaMap::describe() const {
  if (!is_pair_) return f1_.describe("X");
  return "(" + f1_.describe("X") + ", " + f2_.describe("Y") + ")";
}

Matrix AlphaMap::embed(const Matrix& x, const Matrix& x2) const {
  Matrix p(a_ + c_, d_ + b_, domain_.ring);
  p.set_block(0, d_, x);
  p.set_block(a_, 0, x2);
  return p;
}

std::pair<Matrix, Matrix> AlphaMap::split(const Matrix& p) const {
  return {p.block(0, d_, a_, b_), p.block(a_, 0, c_, d_)};
}

Matrix AlphaMap::embed_image(const Matrix& y, const Matrix& y2) const {
  Matrix q(d_ + b_, a_ + c_, domain_.ring);
  q.set_block(0, a_, y);
  q.set_block(d_, 0, y2);
  return q;
}

std::pair<Matrix, Matrix> AlphaMap::split_image(const Matrix& q) const {
  return {q.block(0, a_, d_, c_), q.block(d_, 0, b_, a_)};
}

Matrix triple_alpha(const Matrix& x, const Matrix& y, const Matrix& z, const AlphaMap& alpha) {
  return jordan_T(x, alpha.apply(y), z) - jordan_T(y, alpha.apply(x), z);
}

// ----------------------------------------------------------- TripleSystem

TripleSystem TripleSystem::from_parameter(const Subspace& space, const Matrix& a) {
  TripleSystem t;
  t.space_ = std::make_shared<const Subspace>(space);
  t.dim_ = space.dim();
  t.name_ = "triple_A";
  t.product_ = [a](const Matrix& x, const Matrix& y, const Matrix& z) { return triple_A(x, y, z, a); };
  t.compute_alpha([&a](const Matrix& x) { return a * x * a; });
  return t;
}

TripleSystem TripleSystem::from_alpha(const Subspace& space, const AlphaMap& alpha) {
  if (!(space.ambient() == alpha.domain())) throw std::invalid_argument("alpha domain does not match the space");
  TripleSystem t;
  t.space_ = std::make_shared<const Subspace>(space);
  t.dim_ = space.dim();
  t.name_ = "triple_alpha";
  t.product_ = [alpha](const Matrix& x, const Matrix& y, const Matrix& z) { return triple_alpha(x, y, z, alpha); };
  t.compute_alpha([&alpha](const Matrix& x) { return alpha.apply(x); });
  return t;
}

TripleSystem TripleSystem::from_product(const Subspace& space, TripleProduct p, std::string name) {
  TripleSystem t;
  t.space_ = std::make_shared<const Subspace>(space);
  t.dim_ = space.dim();
  t.name_ = std::move(name);
  t.product_ = std::move(p);
  t.compute_generic();
  return t;
}

Matrix TripleSystem::product(const Matrix& x, const Matrix& y, const Matrix& z) const {
  Matrix r = product_(x, y, z);
  return negated_ ? -r : r;
}

TripleSystem TripleSystem::cdual() const {
  TripleSystem t = *this;
  t.negated_ = !negated_;
  t.name_ = "cdual(" + name_ + ")";
  for (auto& v : t.sc_) v = -v;
  return t;
}

void TripleSystem::compute_generic() {
  size_t d = dim_;
  std::vector<Matrix> b = space_->basis_matrices();
  sc_.assign(d * d * d * d, Rational());
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        auto co = space_->coordinates(product_(b[i], b[j], b[k]));
        if (!co) {
          closure_witness_ = std::array<size_t, 3>{i, j, k};
          return;
        }
        for (size_t l = 0; l < d; ++l) sc_[((i * d + j) * d + k) * d + l] = (*co)[l];
      }
}

// [b_i, b_j, b_k] = b_i m_j b_k + b_k m_j b_i - b_j m_i b_k - b_k m_i b_j with
// m_j = alpha(b_j); the products b_i m_j are shared across k.
void TripleSystem::compute_alpha(const std::function<Matrix(const Matrix&)>& alpha) {
  size_t d = dim_;
  sc_.assign(d * d * d * d, Rational());
  if (d == 0) return;
  std::vector<Matrix> b = space_->basis_matrices();
  std::vector<SparseMatrix> sb;
  std::vector<Matrix> m;
  for (const auto& x : b) {
    sb.push_back(SparseMatrix::from(x));
    m.push_back(alpha(x));
  }
  const Ambient& amb = space_->ambient();
  std::vector<Matrix> p(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Matrix acc(amb.rows, m[j].cols(), amb.ring);
      add_sparse_left(acc, sb[i], m[j]);
      p[i * d + j] = std::move(acc);
    }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        Matrix acc(amb.rows, amb.cols, amb.ring);
        add_sparse_right(acc, p[i * d + j], sb[k]);
        add_sparse_right(acc, p[k * d + j], sb[i]);
        add_sparse_right(acc, p[j * d + i], sb[k], true);
        add_sparse_right(acc, p[k * d + i], sb[j], true);
        auto co = space_->coordinates(flatten(acc));
        if (!co) {
          closure_witness_ = std::array<size_t, 3>{i, j, k};
          return;
        }
        for (size_t l = 0; l < d; ++l) sc_[((i * d + j) * d + k) * d + l] = std::move((*co)[l]);
      }
}

// ------------------------------------------------------ symmetric pairs

namespace {

AxiomResult bracket_into(const std::string& name, const Subspace& u, const Subspace& v, const Matrix& a,
                         const Subspace& target) {
  AxiomResult r{name, true, std::nullopt};
  std::vector<Matrix> bu = u.basis_matrices(), bv = v.basis_matrices();
  for (size_t i = 0; i < bu.size(); ++i)
    for (size_t j = 0; j < bv.size(); ++j) {
      Matrix br = bracket_A(bu[i], bv[j], a);
      if (!target.contains(br)) {
        r.pass = false;
        r.witness = Witness{{i, j}, {bu[i], bv[j], br}};
        return r;
      }
    }
  return r;
}

}  // namespace

AxiomResult check_bracket_closure(const Subspace& s, const Matrix& a, const Subspace& target) {
  return bracket_into("closure", s, s, a, target);
}

bool SymmetricPairRec::verified() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SymmetricPairRec symmetric_pair(const JointDecomposition& dec, const SignVector& s, const SignVector& t,
                                const Matrix& a) {
  if (s.size() != dec.involutions.size() || t.size() != dec.involutions.size()) {
    throw std::invalid_argument("sign vector length mismatch");
  }
  const Subspace& pt = dec.piece(t);
  if (!pt.contains(a)) throw std::invalid_argument("parameter A does not lie in piece " + sign_str(t));
  SignVector mt = negate(t);
  bool group = s == mt;
  const Subspace& h = dec.piece(mt);
  const Subspace& m = dec.piece(s);
  Subspace g = group ? h : h.sum(m);
  SymmetricPairRec rec{g, h, m, HomotopeParameter{a, "piece" + sign_str(t), pt}, s, t, group, {}, {}};

  if (group) {
    rec.checks.push_back(bracket_into("[h,h]<=h", h, h, a, h));
    return rec;
  }
  rec.checks.push_back({"g=h+m", g.dim() == h.dim() + m.dim(), std::nullopt});
  rec.checks.push_back(bracket_into("[h,h]<=h", h, h, a, h));
  rec.checks.push_back(bracket_into("[h,m]<=m", h, m, a, m));
  rec.checks.push_back(bracket_into("[m,m]<=h", m, m, a, h));
  rec.checks.push_back(check_closure_A(m, a));
  rec.checks.back().axiom = "[m,m,m]<=m";

  std::vector<Matrix> bh = h.basis_matrices(), bm = m.basis_matrices(), bg = g.basis_matrices();
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != t[i]) continue;
    rec.sigma_involutions.push_back(i);
    const MatrixInvolution& tau = dec.involutions[i];
    auto sigma = [&](const Matrix& x) { return t[i] == 1 ? -tau.apply(x) : tau.apply(x); };
    AxiomResult r{"sigma" + std::to_string(i), true, std::nullopt};
    for (const auto& x : bh)
      if (sigma(x) != x) r.pass = false;
    for (const auto& x : bm)
      if (sigma(x) != -x) r.pass = false;
    for (size_t p = 0; r.pass && p < bg.size(); ++p)
      for (size_t q = 0; r.pass && q < bg.size(); ++q)
        if (sigma(bracket_A(bg[p], bg[q], a)) != bracket_A(sigma(bg[p]), sigma(bg[q]), a)) {
          r.pass = false;
          r.witness = Witness{{p, q}, {bg[p], bg[q]}};
        }
    rec.checks.push_back(std::move(r));
  }
  return rec;
}

// ------------------------------------------------- homomorphisms, Gamma

Matrix hom_SXT(const Matrix& s, const Matrix& t, const Matrix& x) { return s * x * t; }

bool check_hom_SXT(const Matrix& s, const Matrix& t, const Matrix& a, const Matrix& x, const Matrix& y) {
  Matrix lhs = bracket_A(hom_SXT(s, t, x), hom_SXT(s, t, y), a);
  Matrix rhs = s * bracket_A(x, y, t * a * s) * t;
  return lhs == rhs;
}

GammaResult gamma_act(const Matrix& g, const Matrix& a, const MatrixInvolution& tau, const MatrixInvolution& phi) {
  if (!is_invertible(g)) throw std::invalid_argument("gamma_act: g is not invertible");
  if (phi.apply(g) != g) throw std::invalid_argument("gamma_act: g is not fixed by phi");
  Matrix tg = tau.apply(g);
  return GammaResult{g * a * tg, g, tg};
}

bool verify_gamma(const GammaResult& r, const Matrix& a, const Subspace& space) {
  size_t d = space.dim();
  std::vector<Matrix> b = space.basis_matrices();
  std::vector<Matrix> pb;
  Matrix psi_coords(d, d, Ring::Q);  // column i = coordinates of psi(b_i)
  for (size_t i = 0; i < d; ++i) {
    pb.push_back(r.psi(b[i]));
    auto co = space.coordinates(pb.back());
    if (!co) return false;
    for (size_t l = 0; l < d; ++l) psi_coords.at(l, i) = Scalar((*co)[l]);
  }
  if (d == 0) return true;
  Matrix psi_inv;
  try {
    psi_inv = inverse(psi_coords);
  } catch (const std::domain_error&) {
    return false;
  }
  TripleSystem tp = TripleSystem::from_parameter(space, r.A_prime);
  if (!tp.closed()) return false;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        Matrix rhs = triple_A(pb[i], pb[j], pb[k], a);
        if (r.psi(triple_A(b[i], b[j], b[k], r.A_prime)) != rhs) return false;
        auto co = space.coordinates(rhs);
        if (!co) return false;
        // Coordinates of rhs in the basis psi(b): psi_inv * co.
        for (size_t l = 0; l < d; ++l) {
          Rational v;
          for (size_t q = 0; q < d; ++q) v += psi_inv(l, q)[0] * (*co)[q];
          if (v != tp.c(i, j, k, l)) return false;
        }
      }
  return true;
}

// ------------------------------------------------- standard imbedding

StandardImbedding standard_imbedding(const TripleSystem& t) {
  if (!check_lts(t).all_pass()) throw std::invalid_argument("standard_imbedding: not a Lie triple system");
  size_t d = t.dim();
  StandardImbedding out;
  out.dim_m = d;
  // R(x,y) as a d x d operator: entry (l, k) = c(x, y, k, l).
  auto op = [&](size_t x, size_t y) {
    std::vector<Rational> v(d * d);
    for (size_t k = 0; k < d; ++k)
      for (size_t l = 0; l < d; ++l) v[l * d + k] = t.c(x, y, k, l);
    return v;
  };
  Echelon<Rational> h(d * d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) h.insert(op(x, y));
  size_t r = h.rank();
  out.dim_h = r;
  out.h_basis = h.rows();
  const auto& piv = h.pivots();
  auto h_coords = [&](const std::vector<Rational>& v) -> std::optional<std::vector<Rational>> {
    if (!h.contains(v)) return std::nullopt;
    std::vector<Rational> c(r);
    for (size_t a = 0; a < r; ++a) c[a] = v[piv[a]];
    return c;
  };
  size_t n = d + r;
  LieAlgebra& g = out.algebra;
  g.dim = n;
  g.c.assign(n * n * n, Rational());
  auto set = [&](size_t i, size_t j, size_t k, const Rational& v) { g.c[(i * n + j) * n + k] = v; };
  out.grading = true;
  // [x, y] = R(x, y).
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) {
      auto co = h_coords(op(x, y));
      for (size_t a = 0; a < r; ++a) set(x, y, d + a, (*co)[a]);
    }
  // [D, x] = D(x) and [x, D] = -D(x).
  for (size_t a = 0; a < r; ++a)
    for (size_t x = 0; x < d; ++x)
      for (size_t l = 0; l < d; ++l) {
        const Rational& v = out.h_basis[a][l * d + x];
        set(d + a, x, l, v);
        set(x, d + a, l, -v);
      }
  // [D, D'] = DD' - D'D, which must lie in h.
  for (size_t a = 0; a < r; ++a)
    for (size_t b = 0; b < r; ++b) {
      const auto& da = out.h_basis[a];
      const auto& db = out.h_basis[b];
      std::vector<Rational> k(d * d);
      for (size_t i = 0; i < d; ++i)
        for (size_t m = 0; m < d; ++m) {
          if (da[i * d + m].is_zero() && db[i * d + m].is_zero()) continue;
          for (size_t j = 0; j < d; ++j) {
            k[i * d + j] += da[i * d + m] * db[m * d + j];
            k[i * d + j] -= db[i * d + m] * da[m * d + j];
          }
        }
      auto co = h_coords(k);
      if (!co) {
        out.grading = false;
        continue;
      }
      for (size_t e = 0; e < r; ++e) set(d + a, d + b, d + e, (*co)[e]);
    }
  // Jacobi on all basis triples.
  out.jacobi = true;
  for (size_t p = 0; p < n && out.jacobi; ++p)
    for (size_t q = 0; q < n && out.jacobi; ++q)
      for (size_t s = 0; s < n && out.jacobi; ++s)
        for (size_t l = 0; l < n; ++l) {
          Rational v;
          for (size_t w = 0; w < n; ++w) {
            if (!g.at(p, q, w).is_zero()) v += g.at(p, q, w) * g.at(w, s, l);
            if (!g.at(q, s, w).is_zero()) v += g.at(q, s, w) * g.at(w, p, l);
            if (!g.at(s, p, w).is_zero()) v += g.at(s, p, w) * g.at(w, q, l);
          }
          if (!v.is_zero()) {
            out.jacobi = false;
            break;
          }
        }
  // [[x, y], z] on the -1 eigenspace equals the triple product.
  out.reproduces = true;
  for (size_t x = 0; x < d && out.reproduces; ++x)
    for (size_t y = 0; y < d && out.reproduces; ++y)
      for (size_t z = 0; z < d && out.reproduces; ++z)
        for (size_t l = 0; l < d; ++l) {
          Rational v;
          for (size_t w = d; w < n; ++w)
            if (!g.at(x, y, w).is_zero()) v += g.at(x, y, w) * g.at(w, z, l);
          if (v != t.c(x, y, z, l)) {
            out.reproduces = false;
            break;
          }
        }
  return out;
}

}  // namespace hom
