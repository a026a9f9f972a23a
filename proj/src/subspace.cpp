#include "hom/subspace.hpp"

#include <stdexcept>

namespace hom {

void Subspace::check_ambient(const Ambient& o) const {
  if (!(o == amb_)) throw std::invalid_argument("subspace ambient mismatch");
}

Subspace Subspace::span(Ambient amb, const std::vector<Matrix>& gens) {
  Subspace s(amb);
  for (const auto& g : gens) {
    s.check_ambient(Ambient{g.rows(), g.cols(), amb.ring});
    s.add(flatten(g.lifted(amb.ring)));
  }
  return s;
}

Subspace Subspace::from_vectors(Ambient amb, const std::vector<std::vector<Rational>>& gens) {
  Subspace s(amb);
  for (const auto& g : gens) {
    if (g.size() != amb.dim()) throw std::invalid_argument("subspace vector length mismatch");
    s.add(g);
  }
  return s;
}

Subspace Subspace::full(Ambient amb) {
  Subspace s(amb);
  for (size_t k = 0; k < amb.dim(); ++k) {
    std::vector<Rational> v(amb.dim());
    v[k] = 1;
    s.add(std::move(v));
  }
  return s;
}

Matrix Subspace::basis_matrix(size_t i) const { return unflatten(basis()[i], amb_.rows, amb_.cols, amb_.ring); }

std::vector<Matrix> Subspace::basis_matrices() const {
  std::vector<Matrix> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(basis_matrix(i));
  return out;
}

bool Subspace::contains(const Matrix& x) const { return coordinates(x).has_value(); }

std::optional<std::vector<Rational>> Subspace::coordinates(const Matrix& x) const {
  if (x.rows() != amb_.rows || x.cols() != amb_.cols) throw std::invalid_argument("subspace ambient mismatch");
  return coordinates(flatten(x.lifted(amb_.ring)));
}

// In reduced echelon form the coordinate of basis vector r is the entry at
// its pivot; the residual check then decides membership.
std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& flat) const {
  if (flat.size() != amb_.dim()) throw std::invalid_argument("subspace vector length mismatch");
  std::vector<Rational> coords(dim());
  std::vector<Rational> residual = flat;
  for (size_t r = 0; r < dim(); ++r) {
    coords[r] = flat[pivots()[r]];
    if (coords[r].is_zero()) continue;
    const auto& row = basis()[r];
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) residual[j] -= coords[r] * row[j];
  }
  for (const auto& v : residual)
    if (!v.is_zero()) return std::nullopt;
  return coords;
}

Matrix Subspace::combine(const std::vector<Rational>& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
  std::vector<Rational> v(amb_.dim());
  for (size_t r = 0; r < dim(); ++r) {
    if (coords[r].is_zero()) continue;
    const auto& row = basis()[r];
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) v[j] += coords[r] * row[j];
  }
  return unflatten(v, amb_.rows, amb_.cols, amb_.ring);
}

Subspace Subspace::sum(const Subspace& o) const {
  check_ambient(o.amb_);
  Subspace s = *this;
  for (const auto& v : o.basis()) s.add(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_ambient(o.amb_);
  // Solve sum a_i u_i - sum b_j w_j = 0; each solution gives sum a_i u_i.
  size_t r = dim(), s = o.dim(), n = amb_.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(r + s));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < n; ++k) rows[k][i] = basis()[i][k];
  for (size_t j = 0; j < s; ++j)
    for (size_t k = 0; k < n; ++k) rows[k][r + j] = -o.basis()[j][k];
  Subspace out(amb_);
  for (const auto& x : nullspace(rows, r + s)) {
    std::vector<Rational> v(n);
    for (size_t i = 0; i < r; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t k = 0; k < n; ++k)
        if (!basis()[i][k].is_zero()) v[k] += x[i] * basis()[i][k];
    }
    out.add(std::move(v));
  }
  return out;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  check_ambient(o.amb_);
  for (const auto& v : basis())
    if (!o.ech_.contains(v)) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.amb_ == b.amb_ && a.pivots() == b.pivots() && a.basis() == b.basis();
}

}  // namespace hom
