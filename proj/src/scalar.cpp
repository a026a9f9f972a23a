#include "hom/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace hom {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::QI: return "QI";
    case Ring::HQ: return "HQ";
  }
  return "?";
}

Ring parse_ring(std::string_view s) {
  if (s == "Q") return Ring::Q;
  if (s == "QI") return Ring::QI;
  if (s == "HQ") return Ring::HQ;
  throw std::invalid_argument("unknown ring '" + std::string(s) + "'");
}

std::string involution_name(BaseInvolution d) {
  switch (d) {
    case BaseInvolution::identity: return "id";
    case BaseInvolution::conj: return "conj";
    case BaseInvolution::qconj: return "qconj";
    case BaseInvolution::qsplit: return "qsplit";
  }
  return "?";
}

BaseInvolution parse_involution(std::string_view s) {
  if (s == "id") return BaseInvolution::identity;
  if (s == "conj") return BaseInvolution::conj;
  if (s == "qconj") return BaseInvolution::qconj;
  if (s == "qsplit") return BaseInvolution::qsplit;
  throw std::invalid_argument("unknown base involution '" + std::string(s) + "'");
}

bool applicable(BaseInvolution d, Ring r) {
  switch (d) {
    case BaseInvolution::identity: return true;
    case BaseInvolution::conj: return r != Ring::HQ;
    case BaseInvolution::qconj:
    case BaseInvolution::qsplit: return r == Ring::HQ;
  }
  return false;
}

Ring common_ring(Ring a, Ring b) {
  if (a == b) return a;
  if (a == Ring::Q) return b;
  if (b == Ring::Q) return a;
  throw std::invalid_argument("ring mismatch: " + ring_name(a) + " vs " + ring_name(b));
}

Scalar Scalar::gaussian(Rational re, Rational im) {
  Scalar s(Ring::QI);
  s.c_[0] = std::move(re);
  s.c_[1] = std::move(im);
  return s;
}

Scalar Scalar::quaternion(Rational a, Rational b, Rational c, Rational d) {
  Scalar s(Ring::HQ);
  s.c_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return s;
}

Scalar Scalar::unit(Ring r, int index) {
  if (index < 0 || index >= components(r)) throw std::invalid_argument("unit index out of range");
  Scalar s(r);
  s.c_[index] = 1;
  return s;
}

Scalar Scalar::one(Ring r) { return unit(r, 0); }

bool Scalar::is_zero() const {
  for (int i = 0; i < components(ring_); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Scalar::is_one() const {
  if (!c_[0].is_one()) return false;
  for (int i = 1; i < components(ring_); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Scalar Scalar::lifted(Ring target) const {
  if (target == ring_) return *this;
  if (ring_ != Ring::Q) throw std::invalid_argument("cannot lift " + ring_name(ring_) + " to " + ring_name(target));
  Scalar s(target);
  s.c_[0] = c_[0];
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(ring_);
  for (int i = 0; i < components(ring_); ++i) s.c_[i] = -c_[i];
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a.ring_ == b.ring_ ? a : a.lifted(common_ring(a.ring_, b.ring_));
  r += b;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r = a.ring_ == b.ring_ ? a : a.lifted(common_ring(a.ring_, b.ring_));
  r -= b;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (b.ring_ != ring_) {
    Ring r = common_ring(ring_, b.ring_);
    if (r != ring_) *this = lifted(r);
  }
  for (int i = 0; i < components(b.ring_); ++i)
    if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (b.ring_ != ring_) {
    Ring r = common_ring(ring_, b.ring_);
    if (r != ring_) *this = lifted(r);
  }
  for (int i = 0; i < components(b.ring_); ++i)
    if (!b.c_[i].is_zero()) c_[i] -= b.c_[i];
  return *this;
}

namespace {

// Product of two quaternions (a1 + b1 i + c1 j + d1 k)(a2 + b2 i + c2 j + d2 k).
std::array<Rational, 4> qmul(const Scalar& x, const Scalar& y) {
  const Rational &a1 = x[0], &b1 = x[1], &c1 = x[2], &d1 = x[3];
  const Rational &a2 = y[0], &b2 = y[1], &c2 = y[2], &d2 = y[3];
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.ring_ == Ring::Q && b.ring_ == Ring::Q) return Scalar(a.c_[0] * b.c_[0]);
  Ring r = common_ring(a.ring_, b.ring_);
  Scalar out(r);
  if (a.ring_ == Ring::Q) {
    for (int i = 0; i < components(r); ++i) out.c_[i] = a.c_[0] * b.c_[i];
    return out;
  }
  if (b.ring_ == Ring::Q) {
    for (int i = 0; i < components(r); ++i) out.c_[i] = a.c_[i] * b.c_[0];
    return out;
  }
  if (r == Ring::QI) {
    out.c_[0] = a.c_[0] * b.c_[0] - a.c_[1] * b.c_[1];
    out.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
    return out;
  }
  out.c_ = qmul(a, b);
  return out;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (ring_ == Ring::Q && a.ring_ == Ring::Q && b.ring_ == Ring::Q) {
    if (!a.c_[0].is_zero() && !b.c_[0].is_zero()) c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (ring_ == Ring::Q) return Scalar(c_[0].inverse());
  Rational norm;
  for (int i = 0; i < components(ring_); ++i) norm += c_[i] * c_[i];
  Rational inv = norm.inverse();
  Scalar s(ring_);
  s.c_[0] = c_[0] * inv;
  for (int i = 1; i < components(ring_); ++i) s.c_[i] = -c_[i] * inv;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  int n = std::max(components(a.ring_), components(b.ring_));
  if (a.ring_ != b.ring_ && a.ring_ != Ring::Q && b.ring_ != Ring::Q) return false;
  for (int i = 0; i < n; ++i) {
    const Rational& x = i < components(a.ring_) ? a.c_[i] : Rational();
    const Rational& y = i < components(b.ring_) ? b.c_[i] : Rational();
    if (!(x == y)) return false;
  }
  return true;
}

std::string Scalar::str() const {
  if (ring_ == Ring::Q) return c_[0].str();
  static const char* units[] = {"", "i", "j", "k"};
  std::string out = c_[0].str();
  for (int i = 1; i < components(ring_); ++i) {
    std::string t = c_[i].str();
    if (t[0] != '-') out += '+';
    out += t;
    out += units[i];
  }
  return out;
}

Scalar Scalar::parse(std::string_view s, Ring r) {
  auto bad = [&] { return std::invalid_argument("malformed scalar: '" + std::string(s) + "'"); };
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw bad();
  // Split into signed terms, each optionally suffixed by a unit letter.
  std::vector<std::string> terms;
  size_t start = 0;
  for (size_t i = 1; i <= t.size(); ++i) {
    if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/')) {
      terms.push_back(t.substr(start, i - start));
      start = i;
    }
  }
  Scalar out(r);
  std::array<bool, 4> seen{};
  for (std::string term : terms) {
    int idx = 0;
    char last = term.back();
    if (last == 'i' || last == 'j' || last == 'k') {
      idx = last == 'i' ? 1 : (last == 'j' ? 2 : 3);
      term.pop_back();
      if (term.empty() || term == "+") term = "1";
      else if (term == "-") term = "-1";
    }
    if (idx >= components(r) || seen[idx]) throw bad();
    seen[idx] = true;
    try {
      out.c_[idx] = Rational::parse(term);
    } catch (const std::invalid_argument&) {
      throw bad();
    }
  }
  return out;
}

Scalar apply(BaseInvolution d, const Scalar& x) {
  if (!applicable(d, x.ring())) {
    throw std::invalid_argument("involution " + involution_name(d) + " not applicable to ring " + ring_name(x.ring()));
  }
  switch (d) {
    case BaseInvolution::identity: return x;
    case BaseInvolution::conj:
      if (x.ring() == Ring::Q) return x;
      return Scalar::gaussian(x[0], -x[1]);
    case BaseInvolution::qconj: return quat_conj(x);
    case BaseInvolution::qsplit: return quat_split(x);
  }
  return x;
}

Scalar quat_conj(const Scalar& q) {
  if (q.ring() != Ring::HQ) throw std::invalid_argument("quat_conj expects a quaternion");
  return Scalar::quaternion(q[0], -q[1], -q[2], -q[3]);
}

// j * conj(q) * j^{-1}: fixes 1, i, k and negates j.
Scalar quat_split(const Scalar& q) {
  if (q.ring() != Ring::HQ) throw std::invalid_argument("quat_split expects a quaternion");
  return Scalar::quaternion(q[0], q[1], -q[2], q[3]);
}

}  // namespace hom
