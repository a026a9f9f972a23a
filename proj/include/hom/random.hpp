#pragma once

#include <cstdint>
#include <random>

#include "hom/matrix.hpp"

namespace hom {

// Seeded generator used for every sampled parameter. The engine is
// std::mt19937_64, whose output sequence is fixed by the C++ standard; values
// are derived from raw engine outputs by reduction modulo the range size, so
// the same seed yields the same samples on every conforming platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }
  // Uniform on [lo, hi] up to modulo bias.
  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }
  // Numerator in {-2..2}, denominator in {1, 2}.
  Rational small_rational() {
    int64_t n = uniform(-2, 2);
    int64_t d = uniform(1, 2);
    return Rational(n, d);
  }
  Scalar scalar(Ring r) {
    Scalar s(r);
    for (int i = 0; i < components(r); ++i) s.component(i) = small_rational();
    return s;
  }
  Matrix matrix(size_t rows, size_t cols, Ring r) {
    Matrix m(rows, cols, r);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(r);
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hom
