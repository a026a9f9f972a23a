#include <map>
#include <stdexcept>

#include "hom/families.hpp"

namespace hom {

namespace {

using Op = LinearTemplate::Op;
using D = BaseInvolution;

LinearTemplate tmpl(int sign, Matrix left, Op op, D delta, Matrix right) {
  LinearTemplate t;
  t.sign = sign;
  t.left = std::move(left);
  t.op = op;
  t.delta = delta;
  t.right = std::move(right);
  return t;
}

Matrix cj(const Matrix& a) { return a.entrywise(D::conj); }
Matrix psi(const Matrix& a) { return conj_by_j(a); }

// V+ x V- stored as [[0, X], [X', 0]].
Subspace pair_space(const Subspace& v1, const Subspace& v2) {
  Ambient a1 = v1.ambient(), a2 = v2.ambient();
  Ambient amb{a1.rows + a2.rows, a2.cols + a1.cols, a1.ring};
  std::vector<Matrix> gens;
  for (const auto& x : v1.basis_matrices()) {
    Matrix m(amb.rows, amb.cols, amb.ring);
    m.set_block(0, a2.cols, x);
    gens.push_back(m);
  }
  for (const auto& x : v2.basis_matrices()) {
    Matrix m(amb.rows, amb.cols, amb.ring);
    m.set_block(a1.rows, 0, x);
    gens.push_back(m);
  }
  return Subspace::span(amb, gens);
}

struct Spec {
  std::string table;
  bool square = false;  // sizes "n" rather than "p,q"
  std::vector<Ring> rings;
  std::function<void(FamilyDescriptor&, size_t p, size_t q)> build;
};

// Single-map families: V+ subspace, X -> sign * L(A) * op(X) * R(A).
using SideFn = std::function<Matrix(const std::vector<Matrix>&)>;
SideFn none() {
  return [](const std::vector<Matrix>&) { return Matrix(); };
}
SideFn par(size_t i) {
  return [i](const std::vector<Matrix>& a) { return a.at(i); };
}

void set_single(FamilyDescriptor& f, int sign, SideFn l, Op op, D delta, SideFn r) {
  Ambient amb = f.space.ambient();
  f.make_alpha = [=](const std::vector<Matrix>& a) { return AlphaMap::single(amb, tmpl(sign, l(a), op, delta, r(a))); };
}

// +-AXA on the given space with A in `param`.
Spec axa(const std::string& table, bool square, std::vector<Ring> rings, int sign,
         std::function<Subspace(size_t, size_t, Ring)> space, std::string space_name,
         std::function<Subspace(size_t, size_t, Ring)> param, std::string param_name, std::string pair) {
  return {table, square, rings, [=](FamilyDescriptor& f, size_t p, size_t q) {
            f.space = space(p, q, f.ring);
            f.space_name = space_name;
            f.params = {{param_name, param(p, q, f.ring)}};
            f.alpha = sign < 0 ? "-AXA" : "AXA";
            f.pair = pair;
            set_single(f, sign, par(0), Op::none, D::identity, par(0));
          }};
}

Subspace rect(size_t p, size_t q, Ring r) { return rect_space(p, q, r); }
Subspace rect_t(size_t p, size_t q, Ring r) { return rect_space(q, p, r); }
Subspace sym(size_t n, size_t, Ring r) { return sym_space(n, r); }
Subspace asym(size_t n, size_t, Ring r) { return asym_space(n, r); }
Subspace herm(size_t n, size_t, Ring r) { return herm_space(n, r); }
Subspace sherm(size_t n, size_t, Ring) { return split_herm_space(n); }

// Polarized families: (X, X') -> (f1(X), f2(X')).
void set_pair(FamilyDescriptor& f, const Subspace& v1, const Subspace& v2, std::function<LinearTemplate(const std::vector<Matrix>&)> f1,
              std::function<LinearTemplate(const std::vector<Matrix>&)> f2) {
  size_t a = v1.ambient().rows, b = v1.ambient().cols, c = v2.ambient().rows, d = v2.ambient().cols;
  Ring ring = f.ring;
  f.space = pair_space(v1, v2);
  f.make_alpha = [=](const std::vector<Matrix>& prm) { return AlphaMap::pair(a, b, c, d, ring, f1(prm), f2(prm)); };
}

// "Sym(#,K)" -> "Sym(n,K)".
std::string sized(std::string model, const std::string& size) {
  model.replace(model.find('#'), 1, size);
  return model;
}

// (X, X') -> (A X A*, A* X' A) on (V_p, V_q) with A in M(q,p), * the adjoint for delta.
void conj_pair(FamilyDescriptor& f, size_t p, size_t q, const Subspace& v1, const Subspace& v2, D delta, bool a_is_pq) {
  Ring r = f.ring;
  auto adj = [delta](const Matrix& a) { return delta == D::identity ? a.transpose() : dagger(a, delta); };
  f.params = {{a_is_pq ? "M(p,q)" : "M(q,p)", a_is_pq ? rect_space(p, q, r) : rect_space(q, p, r)}};
  if (a_is_pq) {
    f.alpha = "(A*XA, AX'A*)";
    set_pair(f, v1, v2, [=](const auto& a) { return tmpl(1, adj(a[0]), Op::none, D::identity, a[0]); },
             [=](const auto& a) { return tmpl(1, a[0], Op::none, D::identity, adj(a[0])); });
  } else {
    f.alpha = "(AXA*, A*X'A)";
    set_pair(f, v1, v2, [=](const auto& a) { return tmpl(1, a[0], Op::none, D::identity, adj(a[0])); },
             [=](const auto& a) { return tmpl(1, adj(a[0]), Op::none, D::identity, a[0]); });
  }
}

const std::vector<Ring> kRings{Ring::Q, Ring::QI};
const std::vector<Ring> kC{Ring::QI};
const std::vector<Ring> kH{Ring::HQ};

std::vector<std::pair<std::string, Spec>> build_specs() {
  std::vector<std::pair<std::string, Spec>> s;
  auto add = [&](std::string label, Spec sp) { s.emplace_back(std::move(label), std::move(sp)); };

  // Rectangular matrices.
  add("1.a", axa("1", false, kRings, 1, rect, "M(p,q;K)", rect_t, "M(q,p;K)", "Gl_{p,q}(A,K) (group case)"));
  add("1.a'", axa("1", false, kRings, -1, rect, "M(p,q;K)", rect_t, "M(q,p;K)", "Gl_{p,q}(A,K[i])/Gl_{p,q}(A,K)"));
  for (int c = 0; c < 2; ++c) {
    add(c ? "1.c" : "1.b", {"1", false, kRings, [c](FamilyDescriptor& f, size_t p, size_t q) {
          f.space = rect_space(p, q, f.ring);
          f.space_name = "M(p,q;K)";
          f.params = {{c ? "Asym(q,K)" : "Sym(q,K)", c ? asym_space(q, f.ring) : sym_space(q, f.ring)},
                      {c ? "Asym(p,K)" : "Sym(p,K)", c ? asym_space(p, f.ring) : sym_space(p, f.ring)}};
          f.alpha = "AX^tB";
          f.pair = c ? "Sp((A,B);K)/Sp(A;K) x Sp(B;K)" : "O((A,B);K)/O(A;K) x O(B;K)";
          f.note = "A acts on the left of X^t, so A is q x q and B is p x p";
          set_single(f, 1, par(0), Op::transpose, D::identity, par(1));
        }});
  }
  for (int sg : {1, -1}) {
    add(sg > 0 ? "1.A" : "1.A'", {"1.A", false, kC, [sg](FamilyDescriptor& f, size_t p, size_t q) {
          f.space = rect_space(p, q, Ring::QI);
          f.space_name = "M(p,q;C)";
          f.params = {{"M(q,p;C)", rect_space(q, p, Ring::QI)}};
          f.alpha = sg > 0 ? "A conj(XA)" : "-A conj(XA)";
          f.pair = sg > 0 ? "Gl_{p,q}(A;M(2,2;R))/Gl_{p,q}(A;C)" : "Gl_{p,q}(A;H)/Gl_{p,q}(A;C)";
          Ambient amb = f.space.ambient();
          f.make_alpha = [=](const std::vector<Matrix>& a) {
            return AlphaMap::single(amb, tmpl(sg, a[0], Op::entrywise, D::conj, cj(a[0])));
          };
        }});
  }
  add("1.B", {"1.A", false, kC, [](FamilyDescriptor& f, size_t p, size_t q) {
        f.space = rect_space(p, q, Ring::QI);
        f.space_name = "M(p,q;C)";
        f.params = {{"Herm(q,C)", herm_space(q, Ring::QI)}, {"Herm(p,C)", herm_space(p, Ring::QI)}};
        f.alpha = "A conj(X)^t B";
        f.pair = "U((A,B);C)/U(A;C) x U(B;C)";
        f.note = "A is q x q and B is p x p";
        set_single(f, 1, par(0), Op::dagger, D::conj, par(1));
      }});
  add("1.3.a", axa("1.3", false, kH, 1, rect, "M(p,q;H)", rect_t, "M(q,p;H)", "Gl_{p,q}(A,H) (group case)"));
  add("1.3.a'", axa("1.3", false, kH, -1, rect, "M(p,q;H)", rect_t, "M(q,p;H)", "Gl_{p,q}(A,M(2,2;C))/Gl_{p,q}(A,H)"));
  for (int c = 0; c < 2; ++c) {
    add(c ? "1.3.c" : "1.3.b", {"1.3", false, kH, [c](FamilyDescriptor& f, size_t p, size_t q) {
          f.space = rect_space(p, q, Ring::HQ);
          f.space_name = "M(p,q;H)";
          if (c)
            f.params = {{"Herm(q,H~)", split_herm_space(q)}, {"Herm(p,H~)", split_herm_space(p)}};
          else
            f.params = {{"Herm(q,H)", herm_space(q, Ring::HQ)}, {"Herm(p,H)", herm_space(p, Ring::HQ)}};
          f.alpha = c ? "A qsplit(X)^t B" : "A qconj(X)^t B";
          f.pair = c ? "U((A,B);H~)/U(A;H~) x U(B;H~)" : "U((A,B);H)/U(A;H) x U(B;H)";
          f.note = "A is q x q and B is p x p";
          set_single(f, 1, par(0), Op::dagger, c ? D::qsplit : D::qconj, par(1));
        }});
  }

  // Symmetric matrices.
  add("2.a", axa("2", true, kRings, 1, sym, "Sym(n,K)", sym, "Sym(n,K)", "Gl_n(A;K)/O_n(A;K)"));
  add("2.a'", axa("2", true, kRings, -1, sym, "Sym(n,K)", sym, "Sym(n,K)", "U_n(A;K[i])/O_n(A;K)"));
  add("2.b", axa("2", true, kRings, 1, sym, "Sym(n,K)", asym, "Asym(n,K)", "Sp_{n/2}(A;K) (group case)"));
  add("2.b'", axa("2", true, kRings, -1, sym, "Sym(n,K)", asym, "Asym(n,K)", "Sp_{n/2}(A;K[i])/Sp_{n/2}(A;K)"));
  auto antilinear = [](std::string table, int sg, bool skew, bool iherm, std::string pair) {
    return Spec{table, true, kC, [=](FamilyDescriptor& f, size_t n, size_t) {
                  f.space = skew ? asym_space(n, Ring::QI) : sym_space(n, Ring::QI);
                  f.space_name = skew ? "Asym(n,C)" : "Sym(n,C)";
                  Subspace h = herm_space(n, Ring::QI);
                  f.params = {{iherm ? "iHerm(n,C)" : "Herm(n,C)", iherm ? left_multiple(Scalar::gaussian(0, 1), h) : h}};
                  f.alpha = sg > 0 ? "A conj(X) conj(A)" : "-A conj(X) conj(A)";
                  f.pair = pair;
                  f.note = "the right factor is conj(A); A conj(X) A is not closed";
                  set_single(f, sg, par(0), Op::entrywise, D::conj, [](const std::vector<Matrix>& a) { return cj(a.at(0)); });
                }};
  };
  add("2.A", antilinear("2.A", 1, false, false, "U_n(A;H)/U_n(A;C)"));
  add("2.A'", antilinear("2.A", -1, false, false, "Sp_n((b,a;-a,b))/U_n(b+ia,C)"));

  // Skew-symmetric matrices.
  add("3.a", axa("3", true, kRings, 1, asym, "Asym(n,K)", asym, "Asym(n,K)", "Gl_n(A;K)/Sp_{n/2}(A;K)"));
  add("3.a'", axa("3", true, kRings, -1, asym, "Asym(n,K)", asym, "Asym(n,K)", "U_n(A;K[i])/Sp_{n/2}(A;K)"));
  add("3.b", axa("3", true, kRings, 1, asym, "Asym(n,K)", sym, "Sym(n,K)", "O_n(A;K) (group case)"));
  add("3.b'", axa("3", true, kRings, -1, asym, "Asym(n,K)", sym, "Sym(n,K)", "O_n(A;K[i])/O_n(A;K)"));
  add("3.A", antilinear("3.A", 1, true, true, "U_n(A,H~)/U_n(A,C)"));
  add("3.A'", antilinear("3.A", -1, true, false, "O_2n((a,b;-b,a),R)/U_n(b+ia,C)"));

  // Hermitian matrices.
  add("1.1.a", axa("1.1", true, kC, 1, herm, "Herm(n,C)", herm, "Herm(n,C)", "Gl_n(A,C)/U_n(A,C)"));
  add("1.1.a'", axa("1.1", true, kC, -1, herm, "Herm(n,C)", herm, "Herm(n,C)", "U_n(A,C) (group case)"));
  for (int sg : {1, -1}) {
    add(sg > 0 ? "1.1.b" : "1.1.b'", {"1.1", true, kC, [sg](FamilyDescriptor& f, size_t n, size_t) {
          f.space = herm_space(n, Ring::QI);
          f.space_name = "Herm(n,C)";
          f.params = {{"Sym(n,C)", sym_space(n, Ring::QI)}};
          f.alpha = sg > 0 ? "A conj(X) conj(A)" : "-A conj(X) conj(A)";
          f.pair = sg > 0 ? "U_n(A,H~)/O_n(A,C)" : "O_2n((a,b;b,-a);R)/O_n(a+ib;C)";
          f.note = "A conj(XA)^t is not closed for symmetric A";
          set_single(f, sg, par(0), Op::entrywise, D::conj, [](const std::vector<Matrix>& a) { return cj(a.at(0)); });
        }});
    add(sg > 0 ? "1.1.c" : "1.1.c'", {"1.1", true, kC, [sg](FamilyDescriptor& f, size_t n, size_t) {
          f.space = herm_space(n, Ring::QI);
          f.space_name = "Herm(n,C)";
          f.params = {{"Asym(n,C)", asym_space(n, Ring::QI)}};
          f.alpha = sg > 0 ? "A conj(X) conj(A)" : "-A conj(X) conj(A)";
          f.pair = sg > 0 ? "Sp_n((a,b;b,-a);R)/Sp_{n/2}(a+ib;C)" : "U_n(A,H)/Sp_{n/2}(A,C)";
          f.note = "A conj(XA)^t fails LT3 from n = 3";
          set_single(f, sg, par(0), Op::entrywise, D::conj, [](const std::vector<Matrix>& a) { return cj(a.at(0)); });
        }});
  }

  // Quaternionic Hermitian matrices.
  add("3.1.a", axa("3.1", true, kH, 1, herm, "Herm(n,H)", herm, "Herm(n,H)", "Gl_n(A,H)/U_n(A,H)"));
  add("3.1.a'", axa("3.1", true, kH, -1, herm, "Herm(n,H)", herm, "Herm(n,H)", "U_2n(IA,C)/U_n(A,H)"));
  add("2.2.a", axa("2.2", true, kH, 1, sherm, "Herm(n,H~)", sherm, "Herm(n,H~)", "Gl_n(A,H)/U_n(A,H~)"));
  add("2.2.a'", axa("2.2", true, kH, -1, sherm, "Herm(n,H~)", sherm, "Herm(n,H~)", "U_2n(IA,C)/U_n(A,H~)"));
  auto quat_b = [](std::string table, int sg, bool split_space, std::string pair) {
    return Spec{table, true, kH, [=](FamilyDescriptor& f, size_t n, size_t) {
                  f.space = split_space ? split_herm_space(n) : herm_space(n, Ring::HQ);
                  f.space_name = split_space ? "Herm(n,H~)" : "Herm(n,H)";
                  // The parameter set is the other Hermitian space.
                  f.params = {{split_space ? "Herm(n,H)" : "Herm(n,H~)", split_space ? herm_space(n, Ring::HQ) : split_herm_space(n)}};
                  f.alpha = sg > 0 ? "A psi(X) psi(A)" : "-A psi(X) psi(A)";
                  f.pair = pair;
                  f.note = "psi is entrywise conjugation by j; parameter set exchanged with the printed one";
                  set_single(f, sg, par(0), Op::conj_j, D::identity, [](const std::vector<Matrix>& a) { return psi(a.at(0)); });
                }};
  };
  add("3.1.b", quat_b("3.1", 1, false, "U_n(A,H~) (group case)"));
  add("3.1.b'", quat_b("3.1", -1, false, "O_2n(IA,C)/U_n(A,H~)"));
  add("2.2.b", quat_b("2.2", 1, true, "U_n(A,H) (group case)"));
  add("2.2.b'", quat_b("2.2", -1, true, "Sp_2n(IA,C)/U_n(A,H)"));

  // Para-Hermitian spaces.
  add("pol-1.a", {"polarized", false, kRings, [](FamilyDescriptor& f, size_t p, size_t q) {
        f.space_name = "M(p,q;K) x M(q,p;K)";
        f.params = {{"M(p,q;K)", rect_space(p, q, f.ring)}, {"M(p,q;K)", rect_space(p, q, f.ring)}};
        f.alpha = "(AX^tB, A^tX'^tB^t)";
        f.pair = "Gl_{2p,2q}((A,B);K)/Gl_{p,q}(A;K) x Gl_{p,q}(B;K)";
        set_pair(f, rect_space(p, q, f.ring), rect_space(q, p, f.ring),
                 [](const auto& a) { return tmpl(1, a[0], Op::transpose, D::identity, a[1]); },
                 [](const auto& a) { return tmpl(1, a[0].transpose(), Op::transpose, D::identity, a[1].transpose()); });
      }});
  add("pol-1.b", {"polarized", false, kRings, [](FamilyDescriptor& f, size_t p, size_t q) {
        f.space_name = "M(p,q;K) x M(q,p;K)";
        f.params = {{"M(p,p;K)", rect_space(p, p, f.ring)}, {"M(q,q;K)", rect_space(q, q, f.ring)}};
        f.alpha = "(AXB, BX'A)";
        f.pair = "Gl_{p+q}((A,B);K)/Gl_p(A;K) x Gl_q(B;K)";
        f.note = "(AXA, BX'B) is not a Lie triple system";
        set_pair(f, rect_space(p, q, f.ring), rect_space(q, p, f.ring),
                 [](const auto& a) { return tmpl(1, a[0], Op::none, D::identity, a[1]); },
                 [](const auto& a) { return tmpl(1, a[1], Op::none, D::identity, a[0]); });
      }});
  struct PolConj {
    std::string suffix, model, pair, tpair;
    std::vector<Ring> rings;
    std::function<Subspace(size_t, Ring)> v;
    D delta;
    bool a_is_pq;
  };
  std::vector<PolConj> pcs{
      {"2", "Sym(#,K)", "Sp_n((0,A;-A^t,0);K)/Gl_n(A;K)", "Sp((0,A;-A^t,0);K)/Gl_{p,q}(A;K)", kRings, sym_space, D::identity, false},
      {"3", "Asym(#,K)", "O_2n((0,A;A^t,0);K)/Gl_n(A;K)", "O_{p+q}((0,A;A^t,0);K)/Gl_{p,q}(A;K)", kRings, asym_space, D::identity, false},
      {"1.1", "Herm(#,C)", "U_2n((0,A;A*,0);C)/Gl_n(A;C)", "U_{p+q}((0,A;A*,0);C)/Gl_{p,q}(A;C)", kC, herm_space, D::conj, true},
      {"3.1", "Herm(#,H)", "U_2n((0,A;A*,0);H)/Gl_n(A;H)", "U_{p+q}((0,A;A*,0);H)/Gl_{p,q}(A;H)", kH, herm_space, D::qconj, false},
      {"2.2", "Herm(#,H~)", "U_2n((0,A;A~,0);H~)/Gl_n(A;H)", "U_{p+q}((0,A;A~,0);H~)/Gl_{p,q}(A;H)", kH,
       [](size_t n, Ring) { return split_herm_space(n); }, D::qsplit, false},
  };
  for (const auto& pc : pcs) {
    add("pol-" + pc.suffix, {"polarized", true, pc.rings, [pc](FamilyDescriptor& f, size_t n, size_t) {
          f.space_name = sized(pc.model, "n") + " x " + sized(pc.model, "n");
          f.pair = pc.pair;
          f.note = "(AXA, AX'A) is not closed; the adjoint of A appears on one side";
          conj_pair(f, n, n, pc.v(n, f.ring), pc.v(n, f.ring), pc.delta, pc.a_is_pq);
          f.params[0].name = "M(n,n)";
        }});
  }
  add("tpol-1", {"twisted polarized", false, kRings, [](FamilyDescriptor& f, size_t p, size_t q) {
        f.space_name = "M(p,q;K) x M(p,q;K)";
        f.params = {{"M(q,p;K)", rect_space(q, p, f.ring)}, {"M(q,p;K)", rect_space(q, p, f.ring)}};
        f.alpha = "(AXB, BX'A)";
        f.pair = "Gl_{2p,2q}((A,B);K)/Gl_{p,q}(A;K) x Gl_{p,q}(B;K)";
        f.note = "block sizes r = r' = p, s = s' = q";
        set_pair(f, rect_space(p, q, f.ring), rect_space(p, q, f.ring),
                 [](const auto& a) { return tmpl(1, a[0], Op::none, D::identity, a[1]); },
                 [](const auto& a) { return tmpl(1, a[1], Op::none, D::identity, a[0]); });
      }});
  for (const auto& pc : pcs) {
    add("tpol-" + pc.suffix, {"twisted polarized", false, pc.rings, [pc](FamilyDescriptor& f, size_t p, size_t q) {
          f.space_name = sized(pc.model, "p") + " x " + sized(pc.model, "q");
          f.pair = pc.tpair;
          conj_pair(f, p, q, pc.v(p, f.ring), pc.v(q, f.ring), pc.delta, pc.a_is_pq);
        }});
  }
  return s;
}

const std::vector<std::pair<std::string, Spec>>& specs() {
  static const auto s = build_specs();
  return s;
}

}  // namespace

std::vector<Matrix> FamilyDescriptor::sample(Rng& rng, size_t index) const {
  std::vector<Matrix> out;
  for (const auto& p : params) out.push_back(sample_in(p.space, rng, index));
  return out;
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> cat = [] {
    std::vector<FamilyInfo> out;
    for (const auto& [label, sp] : specs()) out.push_back({label, sp.table, sp.square ? "n" : "p,q", sp.rings});
    return out;
  }();
  return cat;
}

FamilyDescriptor family(const std::string& label, size_t p, size_t q, std::optional<Ring> ring) {
  const Spec* sp = nullptr;
  for (const auto& [l, s] : specs())
    if (l == label) sp = &s;
  if (!sp) throw std::invalid_argument("unknown family label: " + label);
  if (p == 0 || (!sp->square && q == 0)) throw std::invalid_argument("family sizes must be >= 1");
  Ring r = ring.value_or(sp->rings.front());
  if (std::find(sp->rings.begin(), sp->rings.end(), r) == sp->rings.end())
    throw std::invalid_argument("family " + label + " is not defined over " + ring_name(r));
  FamilyDescriptor f;
  f.label = label;
  f.table = sp->table;
  f.ring = r;
  f.p = p;
  f.q = sp->square ? 0 : q;
  sp->build(f, p, sp->square ? p : q);
  return f;
}

std::vector<FamilyRunResult> run_family(const FamilyDescriptor& f, size_t samples, uint64_t seed) {
  std::vector<FamilyRunResult> out;
  Rng rng(seed);
  for (size_t k = 0; k < samples; ++k) {
    FamilyRunResult r;
    r.params = f.sample(rng, k);
    for (size_t i = 0; i < r.params.size(); ++i) r.params_valid = r.params_valid && f.params[i].space.contains(r.params[i]);
    r.report = check_lts(TripleSystem::from_alpha(f.space, f.make_alpha(r.params)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerbatimCheck> verbatim_checks(size_t n, uint64_t seed) {
  struct Printed {
    std::string label, printed, base;  // base: shipped family supplying V+ and parameters
    std::function<Matrix(const Matrix&, const std::vector<Matrix>&, const FamilyDescriptor&)> alpha;
    size_t min_n = 1;
  };
  auto pair_alpha = [](std::function<Matrix(const Matrix&, const std::vector<Matrix>&)> f1,
                       std::function<Matrix(const Matrix&, const std::vector<Matrix>&)> f2) {
    return [=](const Matrix& x, const std::vector<Matrix>& a, const FamilyDescriptor& f) {
      AlphaMap shape = f.make_alpha(a);
      auto [x1, x2] = shape.split(x);
      return shape.embed_image(f1(x1, a), f2(x2, a));
    };
  };
  auto axa = [](const Matrix& x, const std::vector<Matrix>& a) { return a[0] * x * a[0]; };
  std::vector<Printed> rows{
      {"2.A", "A conj(X) A", "2.A", [](const Matrix& x, const auto& a, const auto&) { return a[0] * cj(x) * a[0]; }},
      {"3.A", "A conj(X) A", "3.A", [](const Matrix& x, const auto& a, const auto&) { return a[0] * cj(x) * a[0]; }},
      {"1.1.b", "A conj(XA)^t", "1.1.b",
       [](const Matrix& x, const auto& a, const auto&) { return a[0] * dagger(x * a[0], D::conj); }},
      {"1.1.c", "A conj(XA)^t", "1.1.c",
       [](const Matrix& x, const auto& a, const auto&) { return a[0] * dagger(x * a[0], D::conj); }, 3},
      {"3.1.b", "A qconj(XA), A in Herm(n,H)", "3.1.a",
       [](const Matrix& x, const auto& a, const auto&) { return a[0] * (x * a[0]).entrywise(D::qconj); }},
      {"2.2.b", "A qsplit(X) qconj(A), A in Herm(n,H~)", "2.2.a",
       [](const Matrix& x, const auto& a, const auto&) { return a[0] * x.entrywise(D::qsplit) * a[0].entrywise(D::qconj); }},
      {"pol-1.b", "(AXA, BX'B)", "pol-1.b", pair_alpha([](const Matrix& x, const auto& a) { return a[0] * x * a[0]; },
                                                        [](const Matrix& y, const auto& a) { return a[1] * y * a[1]; })},
      {"pol-2", "(AXA, AX'A)", "pol-2", pair_alpha(axa, axa)},
      {"pol-3", "(AXA, AX'A)", "pol-3", pair_alpha(axa, axa)},
      {"pol-1.1", "(AXA, AX'A)", "pol-1.1", pair_alpha(axa, axa)},
      {"pol-3.1", "(AXA, AX'A)", "pol-3.1", pair_alpha(axa, axa)},
      {"pol-2.2", "(AXA, AX'A)", "pol-2.2", pair_alpha(axa, axa)},
  };
  std::vector<VerbatimCheck> out;
  for (const auto& row : rows) {
    size_t m = std::max(n, row.min_n);
    FamilyDescriptor f = family(row.base, m, m);
    Rng rng(seed);
    VerbatimCheck v{row.label, row.printed, true, true};
    for (size_t k = 0; k < 4; ++k) {
      std::vector<Matrix> a = f.sample(rng, 3);
      auto alpha = [&](const Matrix& x) { return row.alpha(x, a, f); };
      TripleSystem t = TripleSystem::from_product(
          f.space, [&](const Matrix& x, const Matrix& y, const Matrix& z) { return jordan_T(x, alpha(y), z) - jordan_T(y, alpha(x), z); },
          row.label);
      if (!t.closed()) {
        v.closed = v.lts = false;
      } else if (!check_lts(t).all_pass()) {
        v.lts = false;
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace hom
