#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hom/involution.hpp"
#include "hom/matrix.hpp"
#include "hom/subspace.hpp"

namespace hom {

// [X, Y]_A = XAY - YAX.
Matrix bracket_A(const Matrix& x, const Matrix& y, const Matrix& a);
// [X, Y, Z]_A = (XAYAZ + ZAYAX) - (YAXAZ + ZAXAY).
Matrix triple_A(const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& a);
// T(X, Y, Z) = XYZ + ZYX.
Matrix jordan_T(const Matrix& x, const Matrix& y, const Matrix& z);

// A matrix together with the parameter class it is claimed to belong to.
struct HomotopeParameter {
  Matrix A;
  std::string declared_class = "arbitrary";
  std::optional<Subspace> space;  // absent for "arbitrary"

  bool valid() const { return !space || space->contains(A); }
};

// X -> sign * L * op(X) * R, where an empty L or R stands for the identity.
// conj_j is entrywise conjugation by j on quaternion matrices.
struct LinearTemplate {
  enum class Op { none, transpose, entrywise, dagger, conj_j };
  int sign = 1;
  Matrix left;
  Op op = Op::none;
  BaseInvolution delta = BaseInvolution::identity;
  Matrix right;

  Matrix apply(const Matrix& x) const;
  std::string describe(const std::string& var) const;
};

// The map alpha : V+ -> V- of a triple [X,Y,Z]_alpha = T(X, aY, Z) - T(Y, aX, Z).
// Single maps act on matrices directly. Pair maps act on polarized spaces:
// a pair (X, X') with X in M(a,b), X' in M(c,d) is stored as the block
// matrix [[0, X], [X', 0]] of size (a+c) x (d+b), and its image
// (f1(X), f2(X')) with f1(X) in M(d,c), f2(X') in M(b,a) as
// [[0, f1(X)], [f2(X'), 0]] of size (d+b) x (a+c). With this layout
// XYZ + ZYX on block matrices is exactly the polarized T.
class AlphaMap {
 public:
  static AlphaMap single(Ambient domain, LinearTemplate f);
  static AlphaMap pair(size_t a, size_t b, size_t c, size_t d, Ring ring, LinearTemplate f1, LinearTemplate f2);
  // X -> AXA on M(p,q) with A in M(q,p).
  static AlphaMap conjugation(const Matrix& a, size_t p, size_t q);

  bool is_pair() const { return is_pair_; }
  const Ambient& domain() const { return domain_; }
  const Ambient& codomain() const { return codomain_; }
  const LinearTemplate& first() const { return f1_; }
  const LinearTemplate& second() const { return f2_; }
  Matrix apply(const Matrix& x) const;
  std::string describe() const;

  // Block layout helpers for pair maps.
  Matrix embed(const Matrix& x, const Matrix& x2) const;
  std::pair<Matrix, Matrix> split(const Matrix& p) const;
  Matrix embed_image(const Matrix& y, const Matrix& y2) const;
  std::pair<Matrix, Matrix> split_image(const Matrix& q) const;

 private:
  bool is_pair_ = false;
  Ambient domain_, codomain_;
  size_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
  LinearTemplate f1_, f2_;
};

Matrix triple_alpha(const Matrix& x, const Matrix& y, const Matrix& z, const AlphaMap& alpha);

using TripleProduct = std::function<Matrix(const Matrix&, const Matrix&, const Matrix&)>;

// A subspace with a triple product and its structure constants over the
// canonical basis: [b_i, b_j, b_k] = sum_l c(i,j,k,l) b_l.
class TripleSystem {
 public:
  static TripleSystem from_parameter(const Subspace& space, const Matrix& a);
  static TripleSystem from_alpha(const Subspace& space, const AlphaMap& alpha);
  static TripleSystem from_product(const Subspace& space, TripleProduct p, std::string name);

  const Subspace& space() const { return *space_; }
  size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool closed() const { return !closure_witness_; }
  // First basis triple whose product leaves the space.
  const std::optional<std::array<size_t, 3>>& closure_witness() const { return closure_witness_; }

  const Rational& c(size_t i, size_t j, size_t k, size_t l) const { return sc_[((i * dim_ + j) * dim_ + k) * dim_ + l]; }
  const std::vector<Rational>& structure_constants() const { return sc_; }
  Matrix product(const Matrix& x, const Matrix& y, const Matrix& z) const;

  TripleSystem cdual() const;

 private:
  TripleSystem() = default;
  void compute_generic();
  void compute_alpha(const std::function<Matrix(const Matrix&)>& alpha);

  std::shared_ptr<const Subspace> space_;
  size_t dim_ = 0;
  std::string name_;
  TripleProduct product_;
  bool negated_ = false;
  std::vector<Rational> sc_;
  std::optional<std::array<size_t, 3>> closure_witness_;
};

struct Witness {
  std::vector<size_t> indices;
  std::vector<Matrix> matrices;
};

struct AxiomResult {
  std::string axiom;  // LT1, LT2, LT3, closure, jacobi
  bool pass = true;
  std::optional<Witness> witness;
};

struct LtsReport {
  std::vector<AxiomResult> results;
  bool all_pass() const;
  const AxiomResult& get(const std::string& axiom) const;
};

// Exhaustive checks of closure, LT1, LT2, LT3 over all basis tuples.
LtsReport check_lts(const TripleSystem& t);
AxiomResult check_closure(const Subspace& s, const TripleProduct& p);
AxiomResult check_closure_A(const Subspace& s, const Matrix& a);

// Closure of a subspace under the bracket [X, Y]_A.
AxiomResult check_bracket_closure(const Subspace& s, const Matrix& a, const Subspace& target);

struct SymmetricPairRec {
  Subspace g, h, m;
  HomotopeParameter A;
  SignVector s, t;
  bool group_type = false;
  // Indices i with s_i = t_i; the automorphism is -t_i * tau_i restricted to g.
  std::vector<size_t> sigma_involutions;
  std::vector<AxiomResult> checks;
  bool verified() const;
};

// h = piece(-t), m = piece(s), g = h + m; every invariant is checked exactly
// and recorded in `checks`. Throws std::invalid_argument if A is not in piece(t).
SymmetricPairRec symmetric_pair(const JointDecomposition& dec, const SignVector& s, const SignVector& t, const Matrix& a);

// S X T, and an exact check of [SXT, SYT]_A = S [X, Y]_{TAS} T.
Matrix hom_SXT(const Matrix& s, const Matrix& t, const Matrix& x);
bool check_hom_SXT(const Matrix& s, const Matrix& t, const Matrix& a, const Matrix& x, const Matrix& y);

struct GammaResult {
  Matrix A_prime;  // g A tau(g)
  Matrix g;
  Matrix tau_g;
  Matrix psi(const Matrix& x) const { return tau_g * x * g; }
};

// Throws std::invalid_argument if g is singular or not fixed by phi.
GammaResult gamma_act(const Matrix& g, const Matrix& a, const MatrixInvolution& tau, const MatrixInvolution& phi);
// psi maps `space` to itself and psi[X,Y,Z]_{A'} = [psi X, psi Y, psi Z]_A on
// all basis triples; structure constants of (space, A') in the canonical
// basis equal those of (space, A) in the basis psi(b_i).
bool verify_gamma(const GammaResult& r, const Matrix& a, const Subspace& space);

struct LieAlgebra {
  size_t dim = 0;
  std::vector<Rational> c;  // [e_i, e_j] = sum_k c[(i*dim + j)*dim + k] e_k
  const Rational& at(size_t i, size_t j, size_t k) const { return c[(i * dim + j) * dim + k]; }
};

struct StandardImbedding {
  size_t dim_m = 0, dim_h = 0;
  LieAlgebra algebra;  // basis: m basis first, then a basis of h
  std::vector<std::vector<Rational>> h_basis;  // operators on m, row-major d x d
  bool jacobi = false;
  bool grading = false;      // [h,h] in h, [h,m] in m, [m,m] in h
  bool reproduces = false;   // [[x,y],z] equals the triple product
};

// Throws std::invalid_argument if t is not a Lie triple system.
StandardImbedding standard_imbedding(const TripleSystem& t);

}  // namespace hom
