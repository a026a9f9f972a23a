#pragma once

#include <array>
#include <string>

#include "hom/scalar.hpp"

namespace hom {

// Element of R[t]/(t^2) (one variable) or R[t,s]/(t^2, s^2) (two variables)
// over a base ring R. Coefficients are indexed by monomial mask:
// bit 0 = t, bit 1 = s, so index 3 is ts.
class Series {
 public:
  static constexpr int kTruncation = 2;

  Series(Ring base, int vars);
  static Series constant(const Scalar& c, int vars);
  static Series variable(Ring base, int vars, int which);  // which: 0 -> t, 1 -> s

  Ring base() const { return base_; }
  int vars() const { return vars_; }
  const Scalar& coeff(int mask) const { return c_[mask]; }
  void set_coeff(int mask, Scalar v);

  bool is_zero() const;
  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

  std::string str() const;

 private:
  void check_compatible(const Series& o) const;
  Ring base_;
  int vars_;
  std::array<Scalar, 4> c_;
  friend Series series_mul(const Series& a, const Series& b);
};

// Truncated product; throws std::invalid_argument on base ring or variable mismatch.
Series series_mul(const Series& a, const Series& b);
// Inverse; throws std::domain_error if the constant term is zero.
Series series_inverse(const Series& a);

}  // namespace hom
