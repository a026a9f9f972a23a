#include "hom/groups.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "hom/families.hpp"
#include "hom/linalg.hpp"

namespace hom {

namespace {

Matrix zeros_like(const Matrix& m) { return Matrix(m.rows(), m.cols(), m.ring()); }

Matrix id(size_t n, Ring r) { return Matrix::identity(n, r); }

void check_tau(const Matrix& a, GroupKind kind, const MatrixInvolution& tau) {
  if (kind == GroupKind::U && tau.apply(a) != a) throw std::invalid_argument("U_A requires tau(A) = A");
  if (kind == GroupKind::S && tau.apply(a) != -a) throw std::invalid_argument("S_A requires tau(A) = -A");
}

}  // namespace

GroupElement make_element(const Matrix& x, const HomotopeParameter& a) {
  if (a.A.rows() != x.cols() || a.A.cols() != x.rows()) throw std::invalid_argument("group element: A must be q x p for X p x q");
  Matrix m = id(x.rows(), x.ring()) - x * a.A;
  if (!is_invertible(m)) throw std::invalid_argument("group element: 1 - XA is singular");
  return GroupElement{x, a, inverse(m)};
}

GroupElement g_mul(const GroupElement& x, const GroupElement& y) {
  if (x.A.A != y.A.A) throw std::invalid_argument("g_mul: elements have different parameters");
  Matrix z = x.X + y.X - x.X * x.A.A * y.X;
  // 1 - ZA = (1 - XA)(1 - YA), so the product stays in the group.
  Matrix w = y.inv_witness * x.inv_witness;
  assert(((id(z.rows(), z.ring()) - z * x.A.A) * w) == id(z.rows(), z.ring()));
  return GroupElement{z, x.A, w};
}

GroupElement g_inv(const GroupElement& x) {
  Matrix z = -(x.inv_witness * x.X);
  return make_element(z, x.A);
}

GroupElement g_identity(const HomotopeParameter& a, size_t p, size_t q) {
  return make_element(Matrix(p, q, a.A.ring()), a);
}

Matrix one_minus_AX(const GroupElement& x) { return id(x.A.A.rows(), x.X.ring()) - x.A.A * x.X; }

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::G: return "G";
    case GroupKind::U: return "U";
    case GroupKind::S: return "S";
  }
  return "?";
}

bool membership(const Matrix& x, const HomotopeParameter& a, GroupKind kind, const MatrixInvolution& tau) {
  check_tau(a.A, kind, tau);
  if (!is_invertible(id(x.rows(), x.ring()) - x * a.A)) return false;
  if (kind == GroupKind::G) return true;
  Matrix xs = tau.apply(x);
  Matrix rhs = xs * a.A * x;
  return kind == GroupKind::U ? xs + x == rhs : xs - x == rhs;
}

bool membership_alt(const Matrix& x, const HomotopeParameter& a, GroupKind kind, const MatrixInvolution& tau) {
  check_tau(a.A, kind, tau);
  if (!is_invertible(id(x.rows(), x.ring()) - x * a.A)) return false;
  if (kind == GroupKind::G) return true;
  Matrix xs = tau.apply(x);
  Matrix rhs = x * a.A * xs;
  return kind == GroupKind::U ? xs + x == rhs : xs - x == rhs;
}

std::optional<Matrix> cayley(const Matrix& z, const Matrix& a) {
  Scalar half(Rational(1, 2));
  Matrix m = id(a.rows(), z.ring()) + scale(half, a * z);
  if (!is_invertible(m)) return std::nullopt;
  Matrix x = z * inverse(m);
  if (!is_invertible(id(x.rows(), x.ring()) - x * a)) return std::nullopt;
  return x;
}

// ------------------------------------------------------------ series

SeriesMatrix SeriesMatrix::constant(const Matrix& m) { return monomial(m, 0); }

SeriesMatrix SeriesMatrix::monomial(const Matrix& m, int mask) {
  SeriesMatrix s;
  for (auto& c : s.c) c = zeros_like(m);
  s.c[mask] = m;
  return s;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  SeriesMatrix s;
  for (int i = 0; i < 4; ++i) s.c[i] = c[i] + o.c[i];
  return s;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  SeriesMatrix s;
  for (int i = 0; i < 4; ++i) s.c[i] = c[i] - o.c[i];
  return s;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  SeriesMatrix s;
  Matrix z(c[0].rows(), o.c[0].cols(), common_ring(c[0].ring(), o.c[0].ring()));
  for (auto& e : s.c) e = z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i & j) == 0) s.c[i | j] += c[i] * o.c[j];
  return s;
}

SeriesMatrix SeriesMatrix::inverse() const {
  // (M0 + E)^{-1} = N - NEN + NENEN with N = M0^{-1}, since E^3 = 0.
  SeriesMatrix n = constant(hom::inverse(c[0]));
  SeriesMatrix e = *this;
  e.c[0] = zeros_like(c[0]);
  SeriesMatrix nen = n * e * n;
  return n - nen + nen * e * n;
}

Series SeriesMatrix::entry(size_t i, size_t j) const {
  Series s(c[0].ring(), 2);
  for (int m = 0; m < 4; ++m) s.set_coeff(m, c[m](i, j));
  return s;
}

namespace {

SeriesMatrix s_mul(const SeriesMatrix& x, const SeriesMatrix& y, const SeriesMatrix& a) { return x + y - x * a * y; }

SeriesMatrix s_inv(const SeriesMatrix& x, const SeriesMatrix& a) {
  SeriesMatrix one = SeriesMatrix::constant(id(x.c[0].rows(), x.c[0].ring()));
  SeriesMatrix z = SeriesMatrix::constant(zeros_like(x.c[0]));
  return z - (one - x * a).inverse() * x;
}

}  // namespace

SeriesMatrix group_commutator(const Matrix& x, const Matrix& y, const Matrix& a) {
  SeriesMatrix sa = SeriesMatrix::constant(a);
  SeriesMatrix tx = SeriesMatrix::monomial(x, 1), sy = SeriesMatrix::monomial(y, 2);
  SeriesMatrix xy = s_mul(tx, sy, sa);
  SeriesMatrix xyxi = s_mul(xy, s_inv(tx, sa), sa);
  return s_mul(xyxi, s_inv(sy, sa), sa);
}

bool tangent_check(const Matrix& x, const Matrix& y, const Matrix& a) {
  SeriesMatrix c = group_commutator(x, y, a);
  return c.c[0].is_zero() && c.c[1].is_zero() && c.c[2].is_zero() && c.c[3] == -bracket_A(x, y, a);
}

SeriesMatrix u_defect(const Matrix& x, const Matrix& a, const MatrixInvolution& tau) {
  SeriesMatrix tx = SeriesMatrix::monomial(x, 1), txs = SeriesMatrix::monomial(tau.apply(x), 1);
  return txs + tx - txs * SeriesMatrix::constant(a) * tx;
}

Subspace u_tangent_space(const Matrix& a, const MatrixInvolution& tau) {
  Ambient amb = tau.ambient();
  Subspace full = Subspace::full(amb);
  std::vector<Matrix> basis = full.basis_matrices();
  size_t d = basis.size();
  // Rows of the t-part map in coordinates; the kernel is the tangent space.
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
  for (size_t j = 0; j < d; ++j) {
    auto co = *full.coordinates(u_defect(basis[j], a, tau).c[1]);
    for (size_t i = 0; i < d; ++i) rows[i][j] = co[i];
  }
  std::vector<Matrix> gens;
  for (const auto& k : nullspace(rows, d)) gens.push_back(full.combine(k));
  return Subspace::span(amb, gens);
}

// ------------------------------------------------------------ report

bool GroupReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const std::vector<std::string>& group_checks() {
  static const std::vector<std::string> c{"axioms", "membership", "tangent", "linearization", "all"};
  return c;
}

namespace {

struct Recorder {
  std::vector<AxiomResult> results;
  std::map<std::string, size_t> index;
  void declare(const std::string& name) {
    if (index.count(name)) return;
    index[name] = results.size();
    results.push_back({name, true, std::nullopt});
  }
  void record(const std::string& name, bool ok, std::vector<Matrix> witness) {
    declare(name);
    AxiomResult& r = results[index[name]];
    if (ok || !r.pass) return;
    r.pass = false;
    r.witness = Witness{{}, std::move(witness)};
  }
};

// Random element of G_A, or zero if none is found quickly.
Matrix random_element(Rng& rng, size_t n, const Matrix& a) {
  for (int i = 0; i < 20; ++i) {
    Matrix x = rng.matrix(n, n, Ring::Q);
    if (is_invertible(id(n, Ring::Q) - x * a)) return x;
  }
  return Matrix(n, n, Ring::Q);
}

Matrix random_cayley(Rng& rng, const Subspace& tangent, const Matrix& a) {
  for (int i = 0; i < 20; ++i) {
    Matrix z = sample_in(tangent, rng, 3);
    if (auto x = cayley(z, a)) return *x;
  }
  return Matrix(a.rows(), a.cols(), a.ring());
}

}  // namespace

GroupReport run_group_checks(const std::string& check, size_t n, size_t samples, uint64_t seed) {
  bool known = false;
  for (const auto& c : group_checks()) known = known || c == check;
  if (!known) throw std::invalid_argument("unknown group check: " + check);
  if (n == 0) throw std::invalid_argument("group checks need n >= 1");
  bool all = check == "all";
  GroupReport rep{check, n, samples, seed, {}};
  Recorder rec;
  Rng rng(seed);
  MatrixInvolution tau = MatrixInvolution::anti(n, Ring::Q, BaseInvolution::identity);
  Subspace full = rect_space(n, n, Ring::Q), sym = sym_space(n, Ring::Q), asym = asym_space(n, Ring::Q);

  if (all || check == "axioms") {
    for (auto name : {"associativity", "identity", "inverse", "inverse witness", "homomorphism 1-AX"}) rec.declare(name);
    for (size_t k = 0; k < samples; ++k) {
      HomotopeParameter a{sample_in(full, rng, k), "M(n,Q)", full};
      GroupElement x = make_element(random_element(rng, n, a.A), a);
      GroupElement y = make_element(random_element(rng, n, a.A), a);
      GroupElement z = make_element(random_element(rng, n, a.A), a);
      GroupElement e = g_identity(a, n, n);
      rec.record("associativity", g_mul(g_mul(x, y), z).X == g_mul(x, g_mul(y, z)).X, {a.A, x.X, y.X, z.X});
      rec.record("identity", g_mul(x, e).X == x.X && g_mul(e, x).X == x.X, {a.A, x.X});
      GroupElement xi = g_inv(x);
      rec.record("inverse", g_mul(x, xi).X.is_zero() && g_mul(xi, x).X.is_zero(), {a.A, x.X});
      Matrix m = id(n, Ring::Q) - x.X * a.A;
      rec.record("inverse witness", m * x.inv_witness == id(n, Ring::Q) && x.inv_witness * m == id(n, Ring::Q), {a.A, x.X});
      rec.record("homomorphism 1-AX", one_minus_AX(g_mul(x, y)) == one_minus_AX(x) * one_minus_AX(y), {a.A, x.X, y.X});
    }
  }
  if (all || check == "membership") {
    for (auto name : {"U membership", "U closure", "S membership", "S closure", "membership forms agree"}) rec.declare(name);
    for (size_t k = 0; k < samples; ++k) {
      for (GroupKind kind : {GroupKind::U, GroupKind::S}) {
        bool u = kind == GroupKind::U;
        const Subspace& pspace = u ? sym : asym;
        const Subspace& tangent = u ? asym : sym;
        HomotopeParameter a{sample_in(pspace, rng, k), u ? "Sym(n,Q)" : "Asym(n,Q)", pspace};
        std::string tag = group_kind_name(kind);
        Matrix x1 = random_cayley(rng, tangent, a.A), x2 = random_cayley(rng, tangent, a.A);
        rec.record(tag + " membership", membership(x1, a, kind, tau) && membership(x2, a, kind, tau), {a.A, x1, x2});
        GroupElement e1 = make_element(x1, a), e2 = make_element(x2, a);
        Matrix prod = g_mul(e1, e2).X, inv = g_inv(e1).X;
        rec.record(tag + " closure", membership(prod, a, kind, tau) && membership(inv, a, kind, tau), {a.A, x1, x2});
        Matrix r = random_element(rng, n, a.A);
        bool agree = true;
        for (const Matrix& x : {x1, x2, prod, inv, r}) agree = agree && membership(x, a, kind, tau) == membership_alt(x, a, kind, tau);
        rec.record("membership forms agree", agree, {a.A, x1, x2, r});
      }
    }
  }
  if (all || check == "tangent") {
    rec.declare("tangent");
    for (size_t k = 0; k < samples; ++k) {
      Matrix a = sample_in(full, rng, k);
      Matrix x = rng.matrix(n, n, Ring::Q), y = rng.matrix(n, n, Ring::Q);
      rec.record("tangent", tangent_check(x, y, a), {a, x, y});
    }
  }
  if (all || check == "linearization") {
    rec.declare("linearization");
    for (size_t k = 0; k < samples; ++k) {
      Matrix a = sample_in(sym, rng, k);
      Matrix z = sample_in(asym, rng, 3);
      SeriesMatrix d = u_defect(z, a, tau);
      bool ok = d.c[0].is_zero() && d.c[1].is_zero() && u_tangent_space(a, tau) == asym;
      rec.record("linearization", ok, {a, z});
    }
  }
  rep.results = std::move(rec.results);
  return rep;
}

}  // namespace hom
