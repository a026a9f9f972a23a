#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hom/rational.hpp"

namespace hom {

// Base rings: Q, the Gaussian rationals Q(i), and the rational quaternions.
enum class Ring : uint8_t { Q, QI, HQ };

constexpr int components(Ring r) { return r == Ring::Q ? 1 : (r == Ring::QI ? 2 : 4); }
std::string ring_name(Ring r);
Ring parse_ring(std::string_view s);

enum class BaseInvolution : uint8_t { identity, conj, qconj, qsplit };

std::string involution_name(BaseInvolution d);  // "id", "conj", "qconj", "qsplit"
BaseInvolution parse_involution(std::string_view s);
// conj acts on Q and Q(i); qconj and qsplit act on the quaternions only.
bool applicable(BaseInvolution d, Ring r);

// Exact element of one of the base rings. Quaternion components follow the
// basis (1, i, j, k) with ij = k, jk = i, ki = j.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Ring r) : ring_(r) {}
  Scalar(Rational q) : c_{std::move(q)} {}  // NOLINT(google-explicit-constructor)
  Scalar(long long n) : c_{Rational(n)} {}  // NOLINT(google-explicit-constructor)

  static Scalar gaussian(Rational re, Rational im);
  static Scalar quaternion(Rational a, Rational b, Rational c, Rational d);
  static Scalar unit(Ring r, int index);  // index-th basis unit: 1, i, j, k
  static Scalar one(Ring r);

  Ring ring() const { return ring_; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& component(int i) { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  Scalar lifted(Ring target) const;  // Q embeds in both other rings

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  // Accumulates a*b into *this without temporaries for the Q case.
  void add_product(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  static Scalar parse(std::string_view s, Ring r);

 private:
  Ring ring_ = Ring::Q;
  std::array<Rational, 4> c_{};
};

Ring common_ring(Ring a, Ring b);  // throws std::invalid_argument for Q(i) vs quaternions

Scalar apply(BaseInvolution d, const Scalar& x);
Scalar quat_conj(const Scalar& q);
Scalar quat_split(const Scalar& q);

}  // namespace hom
