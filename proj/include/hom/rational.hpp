#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hom {

// Exact rational number. Values whose numerator and denominator fit in
// int64 are stored inline; anything larger is promoted to mpq_class and
// demoted again as soon as it fits.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) *this = Rational(n, 1);
  }
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Only meaningful when is_small().
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational inverse() const;  // throws std::domain_error on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  // "p" or "p/q".
  std::string str() const;
  // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view s);

 private:
  static Rational from_big(mpq_class q);
  void canonicalize();

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hom
