#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hom {

// Incrementally maintained reduced row-echelon form over a field F.
// F needs +, -, *, inverse(), is_zero() and a zero default constructor.
template <class F>
class Echelon {
 public:
  explicit Echelon(size_t width) : width_(width) {}

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Reduces v against the current rows in place.
  void reduce(std::vector<F>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      F f = v[pivots_[r]];
      if (f.is_zero()) continue;
      const auto& row = rows_[r];
      for (size_t j = pivots_[r]; j < width_; ++j)
        if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }

  // Adds v to the span; returns false if it was already contained.
  bool insert(std::vector<F> v) {
    reduce(v);
    size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    F inv = v[p].inverse();
    for (size_t j = p; j < width_; ++j)
      if (!v[j].is_zero()) v[j] = v[j] * inv;
    for (auto& row : rows_) {
      F f = row[p];
      if (f.is_zero()) continue;
      for (size_t j = p; j < width_; ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(std::vector<F> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  size_t width_;
  std::vector<std::vector<F>> rows_;
  std::vector<size_t> pivots_;
};

// Basis of {x : M x = 0} for M given by its rows (each of length n).
template <class F>
std::vector<std::vector<F>> nullspace(const std::vector<std::vector<F>>& m, size_t n) {
  Echelon<F> e(n);
  for (const auto& row : m) e.insert(row);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots()) is_pivot[p] = true;
  std::vector<std::vector<F>> out;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(n);
    x[free] = F(1);
    for (size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = -e.rows()[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hom
