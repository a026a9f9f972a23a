#include "hom/series.hpp"

#include <stdexcept>

namespace hom {

namespace {
int monomials(int vars) { return vars == 1 ? 2 : 4; }
}  // namespace

Series::Series(Ring base, int vars) : base_(base), vars_(vars) {
  if (vars != 1 && vars != 2) throw std::invalid_argument("series supports one or two variables");
  for (auto& c : c_) c = Scalar(base);
}

Series Series::constant(const Scalar& c, int vars) {
  Series s(c.ring(), vars);
  s.c_[0] = c;
  return s;
}

Series Series::variable(Ring base, int vars, int which) {
  if (which < 0 || which >= vars) throw std::invalid_argument("series variable out of range");
  Series s(base, vars);
  s.c_[1 << which] = Scalar::one(base);
  return s;
}

void Series::set_coeff(int mask, Scalar v) {
  if (mask < 0 || mask >= monomials(vars_)) throw std::invalid_argument("monomial outside truncated ring");
  c_[mask] = v.lifted(base_);
}

void Series::check_compatible(const Series& o) const {
  if (base_ != o.base_) throw std::invalid_argument("series base ring mismatch");
  if (vars_ != o.vars_) throw std::invalid_argument("series variable mismatch");
}

bool Series::is_zero() const {
  for (int m = 0; m < monomials(vars_); ++m)
    if (!c_[m].is_zero()) return false;
  return true;
}

Series Series::operator-() const {
  Series r(base_, vars_);
  for (int m = 0; m < monomials(vars_); ++m) r.c_[m] = -c_[m];
  return r;
}

Series operator+(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series r = a;
  for (int m = 0; m < monomials(a.vars_); ++m) r.c_[m] += b.c_[m];
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

bool operator==(const Series& a, const Series& b) {
  if (a.base_ != b.base_ || a.vars_ != b.vars_) return false;
  for (int m = 0; m < monomials(a.vars_); ++m)
    if (a.c_[m] != b.c_[m]) return false;
  return true;
}

std::string Series::str() const {
  static const char* names[] = {"", "t", "s", "ts"};
  std::string out;
  for (int m = 0; m < monomials(vars_); ++m) {
    if (c_[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[m].str() + ")" + names[m];
  }
  return out.empty() ? "0" : out;
}

Series series_mul(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series r(a.base_, a.vars_);
  int n = monomials(a.vars_);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x & y) == 0) r.c_[x | y].add_product(a.c_[x], b.c_[y]);
  return r;
}

// For a = c(1 + u) with u nilpotent of order 3: a^{-1} = (1 - u + u^2) c^{-1}.
Series series_inverse(const Series& a) {
  const Scalar& c = a.coeff(0);
  if (c.is_zero()) throw std::domain_error("series with zero constant term is not invertible");
  Series cinv = Series::constant(c.inverse(), a.vars());
  Series u = series_mul(cinv, a) - Series::constant(Scalar::one(a.base()), a.vars());
  Series one = Series::constant(Scalar::one(a.base()), a.vars());
  Series geo = one - u + series_mul(u, u);
  return series_mul(geo, cinv);
}

}  // namespace hom
