#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hom/homotope.hpp"
#include "hom/involution.hpp"
#include "hom/random.hpp"
#include "hom/series.hpp"

namespace hom {

// X in G_A: X in M(p,q), A in M(q,p), 1 - XA invertible.
struct GroupElement {
  Matrix X;
  HomotopeParameter A;
  Matrix inv_witness;  // (1 - XA)^{-1}
};

// Throws std::invalid_argument if shapes do not compose or 1 - XA is singular.
GroupElement make_element(const Matrix& x, const HomotopeParameter& a);
// X + Y - XAY. Throws std::invalid_argument on mismatched A.
GroupElement g_mul(const GroupElement& x, const GroupElement& y);
// -(1 - XA)^{-1} X.
GroupElement g_inv(const GroupElement& x);
GroupElement g_identity(const HomotopeParameter& a, size_t p, size_t q);
// X -> 1 - AX, multiplicative into the ordinary matrix product.
Matrix one_minus_AX(const GroupElement& x);

enum class GroupKind { G, U, S };
std::string group_kind_name(GroupKind k);

// G: 1 - XA invertible. U: also X* + X = X* A X. S: also X* - X = X* A X,
// with X* = tau(X). Throws std::invalid_argument unless tau(A) = A for U and
// tau(A) = -A for S.
bool membership(const Matrix& x, const HomotopeParameter& a, GroupKind kind, const MatrixInvolution& tau);
// The same conditions written as X* + X = X A X* and X* - X = X A X*.
bool membership_alt(const Matrix& x, const HomotopeParameter& a, GroupKind kind, const MatrixInvolution& tau);

// Z (1 + AZ/2)^{-1}: lies in U_A when Z* = -Z, A* = A, and in S_A when
// Z* = Z, A* = -A (whenever 1 -+ ZA/2 are invertible). nullopt if singular.
std::optional<Matrix> cayley(const Matrix& z, const Matrix& a);

// Matrix over Q[t,s]/(t^2, s^2), stored by monomial mask: bit 0 = t, bit 1 = s.
struct SeriesMatrix {
  std::array<Matrix, 4> c;
  static SeriesMatrix constant(const Matrix& m);
  static SeriesMatrix monomial(const Matrix& m, int mask);
  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix operator*(const SeriesMatrix& o) const;
  // Throws std::domain_error if the constant part is singular.
  SeriesMatrix inverse() const;
  Series entry(size_t i, size_t j) const;
};

// x y x^{-1} y^{-1} for x = tX, y = sY in the group law with parameter A.
SeriesMatrix group_commutator(const Matrix& x, const Matrix& y, const Matrix& a);
// The commutator has zero constant, t and s parts and ts part -[X, Y]_A.
bool tangent_check(const Matrix& x, const Matrix& y, const Matrix& a);

// U-membership defect X* + X - X* A X at tX: zero modulo t^2 iff X* = -X.
SeriesMatrix u_defect(const Matrix& x, const Matrix& a, const MatrixInvolution& tau);
// {X : the t part of u_defect vanishes}, computed over a Q-basis of the ambient.
Subspace u_tangent_space(const Matrix& a, const MatrixInvolution& tau);

struct GroupReport {
  std::string check;
  size_t n = 0;
  size_t samples = 0;
  uint64_t seed = 0;
  std::vector<AxiomResult> results;
  bool all_pass() const;
};

// check in {axioms, membership, tangent, linearization, all}; n x n matrices
// over Q with tau the transpose. Throws std::invalid_argument on an unknown check.
GroupReport run_group_checks(const std::string& check, size_t n, size_t samples, uint64_t seed);
const std::vector<std::string>& group_checks();

}  // namespace hom
