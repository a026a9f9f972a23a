#include <stdexcept>

#include "hom/families.hpp"

namespace hom {

// ------------------------------------------------------------ spaces

Subspace hermitian_space(size_t n, Ring ring, BaseInvolution d, int sign) {
  std::vector<Matrix> gens;
  for (const auto& e : elementary_basis(n, n, ring)) {
    Matrix de = dagger(e, d);
    gens.push_back(sign > 0 ? e + de : e - de);
  }
  return Subspace::span({n, n, ring}, gens);
}

Subspace sym_space(size_t n, Ring ring) { return hermitian_space(n, ring, BaseInvolution::identity, 1); }
Subspace asym_space(size_t n, Ring ring) { return hermitian_space(n, ring, BaseInvolution::identity, -1); }

Subspace herm_space(size_t n, Ring ring) {
  if (ring == Ring::Q) return sym_space(n, ring);
  return hermitian_space(n, ring, ring == Ring::QI ? BaseInvolution::conj : BaseInvolution::qconj, 1);
}

Subspace aherm_space(size_t n, Ring ring) {
  if (ring == Ring::Q) return asym_space(n, ring);
  return hermitian_space(n, ring, ring == Ring::QI ? BaseInvolution::conj : BaseInvolution::qconj, -1);
}

Subspace split_herm_space(size_t n) { return hermitian_space(n, Ring::HQ, BaseInvolution::qsplit, 1); }
Subspace split_aherm_space(size_t n) { return hermitian_space(n, Ring::HQ, BaseInvolution::qsplit, -1); }

Subspace rect_space(size_t rows, size_t cols, Ring ring) { return Subspace::full({rows, cols, ring}); }

Subspace left_multiple(const Scalar& u, const Subspace& s) {
  std::vector<Matrix> gens;
  for (const auto& b : s.basis_matrices()) gens.push_back(scale(u, b));
  Ambient amb = s.ambient();
  amb.ring = common_ring(amb.ring, u.ring());
  return Subspace::span(amb, gens);
}

// -------------------------------------------------------- embeddings

Matrix complex_to_real(const Matrix& z) {
  size_t n = z.rows(), m = z.cols();
  Matrix out(2 * n, 2 * m, Ring::Q);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      const Scalar& s = z(i, j);
      out.at(i, j) = Scalar(s[0]);
      out.at(n + i, m + j) = Scalar(s[0]);
      out.at(i, m + j) = Scalar(s[1]);
      out.at(n + i, j) = Scalar(-s[1]);
    }
  return out;
}

Matrix complex_to_quat(const Matrix& z) {
  Matrix out(z.rows(), z.cols(), Ring::HQ);
  for (size_t i = 0; i < z.rows(); ++i)
    for (size_t j = 0; j < z.cols(); ++j) out.at(i, j) = Scalar::quaternion(z(i, j)[0], 0, z(i, j)[1], 0);
  return out;
}

Matrix quat_to_complex(const Matrix& q) {
  size_t n = q.rows(), m = q.cols();
  Matrix out(2 * n, 2 * m, Ring::QI);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      Scalar x = q(i, j).lifted(Ring::HQ);
      Scalar z = Scalar::gaussian(x[0], x[1]);
      Scalar w = Scalar::gaussian(-x[3], x[2]);
      out.at(i, j) = z;
      out.at(i, m + j) = w;
      out.at(n + i, j) = -apply(BaseInvolution::conj, w);
      out.at(n + i, m + j) = apply(BaseInvolution::conj, z);
    }
  return out;
}

Matrix conj_by_j(const Matrix& q) {
  Matrix out = q.lifted(Ring::HQ);
  for (size_t i = 0; i < out.rows(); ++i)
    for (size_t j = 0; j < out.cols(); ++j) out.at(i, j) = quat_split(quat_conj(out(i, j)));
  return out;
}

// ----------------------------------------------------- constructions

namespace {

Subspace diag_sum(const Subspace& a, const Subspace& b) {
  size_t p = a.ambient().rows, q = b.ambient().rows;
  Ring r = a.ambient().ring;
  std::vector<Matrix> gens;
  for (const auto& x : a.basis_matrices()) gens.push_back(block_diag(x, Matrix(q, q, r)));
  for (const auto& y : b.basis_matrices()) gens.push_back(block_diag(Matrix(p, p, r), y));
  return Subspace::span({p + q, p + q, r}, gens);
}

Construction make_proj(size_t p, size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("proj needs p, q >= 1");
  size_t n = p + q;
  Matrix ipq = block_constant(BlockName::Ipq, p, q);
  Construction c{"proj", p, q, {}, {}, {}, {}, {}};
  c.invs = {MatrixInvolution::anti(n, Ring::Q, BaseInvolution::identity),
            MatrixInvolution::anti(BaseInvolution::identity, ipq)};
  c.phi = {MatrixInvolution::automorphism(BaseInvolution::identity, ipq)};
  auto id = [](const Matrix& x) { return x; };
  c.models = {
      {"Sym(p,K)+Sym(q,K)", diag_sum(sym_space(p, Ring::Q), sym_space(q, Ring::Q)), id},
      {"M(q,p;K)", rect_space(q, p, Ring::Q),
       [p, q](const Matrix& b) { return block2x2(Matrix(p, p, Ring::Q), -b.transpose(), b, Matrix(q, q, Ring::Q)); }},
      {"M(p,q;K)", rect_space(p, q, Ring::Q),
       [p, q](const Matrix& a) { return block2x2(Matrix(p, p, Ring::Q), a, a.transpose(), Matrix(q, q, Ring::Q)); }},
      {"Asym(p,K)+Asym(q,K)", diag_sum(asym_space(p, Ring::Q), asym_space(q, Ring::Q)), id},
  };
  c.closed_form = {p * (p + 1) / 2 + q * (q + 1) / 2, p * q, p * q, p * (p - 1) / 2 + q * (q - 1) / 2};
  return c;
}

Construction make_siegel(size_t n) {
  if (n == 0) throw std::invalid_argument("siegel needs n >= 1");
  Construction c{"siegel", n, 0, {}, {}, {}, {}, {}};
  Matrix i = block_constant(BlockName::I, n), f = block_constant(BlockName::F, n);
  c.invs = {MatrixInvolution::anti(BaseInvolution::identity, i), MatrixInvolution::anti(BaseInvolution::identity, f)};
  c.phi = {MatrixInvolution::automorphism(BaseInvolution::identity, block_constant(BlockName::J, n))};
  c.models = {
      {"Sym(n,C)", sym_space(n, Ring::QI), complex_to_real},
      {"F.Herm(n,C)", herm_space(n, Ring::QI), [f](const Matrix& z) { return f * complex_to_real(z); }},
      {"I.Herm(n,C)", herm_space(n, Ring::QI), [i](const Matrix& z) { return i * complex_to_real(z); }},
      {"Asym(n,C)", asym_space(n, Ring::QI), complex_to_real},
  };
  c.closed_form = {n * (n + 1), n * n, n * n, n * (n - 1)};
  return c;
}

Construction make_quat1(size_t n) {
  if (n == 0) throw std::invalid_argument("quat1 needs n >= 1");
  Construction c{"quat1", n, 0, {}, {}, {}, {}, {}};
  c.invs = {MatrixInvolution::anti(n, Ring::HQ, BaseInvolution::qconj),
            MatrixInvolution::anti(n, Ring::HQ, BaseInvolution::qsplit)};
  c.phi = {MatrixInvolution::automorphism(BaseInvolution::identity,
                                          Matrix::scalar(n, Scalar::unit(Ring::HQ, 2)))};
  Scalar qi = Scalar::unit(Ring::HQ, 1);
  auto i_times = [qi](const Matrix& z) { return scale(qi, complex_to_quat(z)); };
  c.models = {
      {"Herm(n,C)", herm_space(n, Ring::QI), complex_to_quat},
      {"i.Sym(n,C)", sym_space(n, Ring::QI), i_times},
      {"i.Asym(n,C)", asym_space(n, Ring::QI), i_times},
      {"Aherm(n,C)", aherm_space(n, Ring::QI), complex_to_quat},
  };
  c.closed_form = {n * n, n * (n + 1), n * (n - 1), n * n};
  return c;
}

Construction make_quat2(size_t n) {
  if (n == 0) throw std::invalid_argument("quat2 needs n >= 1");
  Construction c{"quat2", n, 0, {}, {}, {}, {}, {}};
  Matrix i = block_constant(BlockName::I, n, 0, Ring::QI), f = block_constant(BlockName::F, n, 0, Ring::QI);
  c.invs = {MatrixInvolution::anti(BaseInvolution::identity, i), MatrixInvolution::anti(BaseInvolution::conj, f)};
  c.phi = {MatrixInvolution::automorphism(BaseInvolution::conj, block_constant(BlockName::J, n, 0, Ring::QI))};
  Scalar qj = Scalar::unit(Ring::HQ, 2);
  Scalar ci = Scalar::gaussian(0, 1);
  auto plain = [qj](const Matrix& y) { return quat_to_complex(scale(qj, y)); };
  auto twisted = [qj, ci](const Matrix& y) { return scale(ci, quat_to_complex(scale(qj, y))); };
  c.models = {
      {"Aherm(n,H)", aherm_space(n, Ring::HQ), plain},
      {"Herm(n,H)", herm_space(n, Ring::HQ), twisted},
      {"Aherm(n,H)", aherm_space(n, Ring::HQ), twisted},
      {"Herm(n,H)", herm_space(n, Ring::HQ), plain},
  };
  c.closed_form = {2 * n * n + n, 2 * n * n - n, 2 * n * n + n, 2 * n * n - n};
  return c;
}

}  // namespace

std::string Construction::size_str() const {
  if (name == "proj") return "p=" + std::to_string(p) + ",q=" + std::to_string(q);
  return "n=" + std::to_string(p);
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"proj", "siegel", "quat1", "quat2"};
  return names;
}

Construction instantiate(const std::string& name, size_t a, size_t b) {
  Construction c;
  if (name == "proj") {
    c = make_proj(a, b);
  } else if (name == "siegel") {
    c = make_siegel(a);
  } else if (name == "quat1") {
    c = make_quat1(a);
  } else if (name == "quat2") {
    c = make_quat2(a);
  } else {
    throw std::invalid_argument("unknown construction: " + name);
  }
  c.dec = joint_eigenspaces(c.invs);
  return c;
}

bool model_is_bijection(const Construction& c, size_t sign_idx) {
  const ModelMap& m = c.models.at(sign_idx);
  const Subspace& piece = c.dec.pieces.at(sign_idx);
  std::vector<Matrix> images;
  for (const auto& b : m.domain.basis_matrices()) images.push_back(m.map(b));
  Subspace img = Subspace::span(piece.ambient(), images);
  return img.dim() == m.domain.dim() && img == piece;
}

bool check_quat_embedding(size_t n, size_t samples, uint64_t seed) {
  Rng rng(seed);
  for (size_t k = 0; k < samples; ++k) {
    Matrix x = rng.matrix(n, n, Ring::HQ), y = rng.matrix(n, n, Ring::HQ);
    if (quat_to_complex(x * y) != quat_to_complex(x) * quat_to_complex(y)) return false;
    if (quat_to_complex(x + y) != quat_to_complex(x) + quat_to_complex(y)) return false;
  }
  Construction c = instantiate("quat2", n);
  std::vector<Matrix> imgs;
  for (const auto& e : elementary_basis(n, n, Ring::HQ)) {
    Matrix img = quat_to_complex(e);
    // The transpose-type involution restricts to the split adjoint.
    if (c.invs[0].apply(img) != quat_to_complex(dagger(e, BaseInvolution::qsplit))) return false;
    imgs.push_back(std::move(img));
  }
  Subspace image = Subspace::span(c.dec.ambient(), imgs);
  Subspace fixed = joint_eigenspaces(c.phi).piece({1});
  return image.dim() == 4 * n * n && image == fixed;
}

bool quat1_fixed_algebra(size_t n) {
  Construction c = instantiate("quat1", n);
  std::vector<Matrix> imgs;
  for (const auto& e : elementary_basis(n, n, Ring::QI)) imgs.push_back(complex_to_quat(e));
  return Subspace::span(c.dec.ambient(), imgs) == joint_eigenspaces(c.phi).piece({1});
}

bool hermquat_check(size_t n) {
  Scalar j = Scalar::unit(Ring::HQ, 2);
  Subspace a = left_multiple(j, herm_space(n, Ring::HQ));
  Subspace b = left_multiple(j, aherm_space(n, Ring::HQ));
  return a == split_aherm_space(n) && b == split_herm_space(n);
}

Matrix sample_in(const Subspace& s, Rng& rng, size_t index) {
  const Ambient& amb = s.ambient();
  Matrix zero(amb.rows, amb.cols, amb.ring);
  size_t d = s.dim();
  if (d == 0 || index % 4 == 0) return zero;
  auto nonzero = [&rng]() {
    Rational r;
    while (r.is_zero()) r = rng.small_rational();
    return r;
  };
  std::vector<Matrix> basis = s.basis_matrices();
  if (index % 4 == 1) {
    size_t best = 0, best_rank = SIZE_MAX;
    for (size_t i = 0; i < d; ++i) {
      size_t r = rank(basis[i]);
      if (r < best_rank) {
        best_rank = r;
        best = i;
      }
    }
    return scale(Scalar(nonzero()), basis[best]);
  }
  if (index % 4 == 2) {
    size_t i = static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(d) - 1));
    size_t j = static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(d) - 1));
    return scale(Scalar(nonzero()), basis[i]) + scale(Scalar(nonzero()), basis[j]);
  }
  size_t full = std::min(amb.rows, amb.cols);
  Matrix best = zero;
  size_t best_rank = 0;
  for (int attempt = 0; attempt < 8 && best_rank < full; ++attempt) {
    std::vector<Rational> co(d);
    for (auto& v : co) v = rng.small_rational();
    Matrix m = s.combine(co);
    size_t r = rank(m);
    if (attempt == 0 || r > best_rank) {
      best = m;
      best_rank = r;
    }
  }
  return best;
}

}  // namespace hom
