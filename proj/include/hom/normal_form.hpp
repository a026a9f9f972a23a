#pragma once

#include <string>
#include <vector>

#include "hom/homotope.hpp"

namespace hom {

enum class NormalKind { rectangular, symmetric, skew, hermitian };

std::string kind_name(NormalKind k);
NormalKind parse_kind(const std::string& s);  // throws std::invalid_argument

// A_nf = left * A * right. For the congruence kinds right = dagger(left)
// (transpose over Q); for rectangular A the pair is an arbitrary
// equivalence.
struct NormalForm {
  NormalKind kind = NormalKind::rectangular;
  Matrix A, A_nf, left, right;
  size_t rank = 0;
  // Diagonal signs for symmetric/hermitian: +1, -1, 0 in that order.
  std::vector<int> signs;
  // A_nf = left * A * right has the shape promised for the kind and left is invertible.
  bool verified = false;

  // The Gamma map X -> right * X * left, taking (V, A_nf) onto (V, A).
  GammaResult gamma() const { return GammaResult{A_nf, left, right}; }
};

// rectangular: ring Q or Q(i), A_nf = [[1_r, 0], [0, 0]].
// symmetric: ring Q, A_nf diagonal with squarefree integer entries,
//   positive entries first, then negative, then zeros.
// skew: ring Q, A_nf = diag(J, ..., J, 0) with J = [[0, 1], [-1, 0]].
// hermitian: ring Q(i), A_nf real diagonal, ordered as for symmetric.
// Throws std::invalid_argument on a ring or symmetry mismatch.
NormalForm normal_form(const Matrix& a, NormalKind kind);

// Matrix spaces V on which A acts as a parameter for the given kind:
// M(n,m) for an m x n rectangular A, Sym and Asym for symmetric and skew A,
// Herm(n,C) for hermitian A.
std::vector<Subspace> normal_form_spaces(const NormalForm& nf);

// verify_gamma on every space of normal_form_spaces.
bool normal_form_isomorphic(const NormalForm& nf);

}  // namespace hom
