#include "hom/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace hom {

namespace {

using i128 = __int128;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t uabs(int64_t v) { return v < 0 ? 0 - static_cast<uint64_t>(v) : static_cast<uint64_t>(v); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(int64_t v) { return to_mpz(static_cast<i128>(v)); }

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  canonicalize();
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

void Rational::canonicalize() {
  if (den_ < 0) {
    if (num_ == kMin || den_ == kMin) {
      *this = from_big(mpq_class(mpz_from_i64(num_), mpz_from_i64(den_)));
      return;
    }
    num_ = -num_;
    den_ = -den_;
  }
  int64_t g = static_cast<int64_t>(std::gcd(uabs(num_), uabs(den_)));
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == kMin) *this = from_big(mpq_class(mpz_from_i64(num_), mpz_from_i64(den_)));
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != mpz_class(kMin)) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.num_ = -num_;  // num_ != kMin by invariant
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return from_big(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) return Rational(s);
    } else {
      int64_t g = static_cast<int64_t>(std::gcd(static_cast<uint64_t>(a.den_), static_cast<uint64_t>(b.den_)));
      if (g == 1) {
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        if (fits(n) && fits(d)) {
          Rational r;
          r.num_ = static_cast<int64_t>(n);
          r.den_ = static_cast<int64_t>(d);
          return r;
        }
      } else {
        i128 t = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
        i128 g2 = gcd128(t, g);
        i128 n = t / g2;
        i128 d = static_cast<i128>(a.den_ / g) * (b.den_ / g2);
        if (fits(n) && fits(d)) {
          Rational r;
          r.num_ = static_cast<int64_t>(n);
          r.den_ = static_cast<int64_t>(d);
          return r;
        }
      }
    }
  }
  return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) return Rational(p);
    } else {
      int64_t g1 = static_cast<int64_t>(std::gcd(uabs(a.num_), static_cast<uint64_t>(b.den_)));
      int64_t g2 = static_cast<int64_t>(std::gcd(uabs(b.num_), static_cast<uint64_t>(a.den_)));
      int64_t n, d;
      if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
          !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d) && n != kMin) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
      }
    }
  }
  return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  auto check_int = [&](std::string_view t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  size_t slash = s.find('/');
  std::string_view ns = s.substr(0, slash);
  check_int(ns, true);
  std::string nstr(ns[0] == '+' ? ns.substr(1) : ns);
  mpz_class n(nstr, 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    std::string_view ds = s.substr(slash + 1);
    check_int(ds, false);
    d = mpz_class(std::string(ds), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  }
  return from_big(mpq_class(n, d));
}

}  // namespace hom
