#pragma once

#include <optional>
#include <vector>

#include "hom/linalg.hpp"
#include "hom/matrix.hpp"

namespace hom {

struct Ambient {
  size_t rows = 0, cols = 0;
  Ring ring = Ring::Q;

  size_t dim() const { return rows * cols * components(ring); }
  friend bool operator==(const Ambient&, const Ambient&) = default;
  static Ambient of(const Matrix& m) { return {m.rows(), m.cols(), m.ring()}; }
};

// Q-linear subspace of M(rows, cols; ring), stored as the canonical reduced
// row-echelon basis of flattened coordinate vectors.
class Subspace {
 public:
  explicit Subspace(Ambient amb) : amb_(amb), ech_(amb.dim()) {}

  static Subspace span(Ambient amb, const std::vector<Matrix>& gens);
  static Subspace from_vectors(Ambient amb, const std::vector<std::vector<Rational>>& gens);
  static Subspace full(Ambient amb);

  const Ambient& ambient() const { return amb_; }
  size_t dim() const { return ech_.rank(); }
  const std::vector<std::vector<Rational>>& basis() const { return ech_.rows(); }
  const std::vector<size_t>& pivots() const { return ech_.pivots(); }
  Matrix basis_matrix(size_t i) const;
  std::vector<Matrix> basis_matrices() const;

  bool contains(const Matrix& x) const;
  // Coordinates with respect to basis(); nullopt if x is not in the subspace.
  std::optional<std::vector<Rational>> coordinates(const Matrix& x) const;
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& flat) const;
  Matrix combine(const std::vector<Rational>& coords) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool is_subspace_of(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void check_ambient(const Ambient& o) const;
  void add(std::vector<Rational> v) { ech_.insert(std::move(v)); }

  Ambient amb_;
  Echelon<Rational> ech_;
};

}  // namespace hom
