#include <array>
#include <numeric>
#include <stdexcept>

#include "hom/homotope.hpp"
#include "hom/linalg.hpp"

namespace hom {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct Fp {
  static constexpr uint64_t P = (uint64_t{1} << 61) - 1;
  uint64_t v = 0;

  Fp() = default;
  Fp(long long x) {  // NOLINT(google-explicit-constructor)
    int64_t r = static_cast<int64_t>(x % static_cast<long long>(P));
    v = static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(P) : r);
  }
  static Fp raw(uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }
  bool is_zero() const { return v == 0; }
  friend Fp operator+(Fp a, Fp b) {
    uint64_t s = a.v + b.v;
    return raw(s >= P ? s - P : s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v); }
  Fp operator-() const { return raw(v ? P - v : 0); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 m = static_cast<unsigned __int128>(a.v) * b.v;
    uint64_t lo = static_cast<uint64_t>(m & P), hi = static_cast<uint64_t>(m >> 61);
    uint64_t s = lo + hi;
    return raw(s >= P ? s - P : s);
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero mod p");
    Fp r = raw(1), base = *this;
    for (uint64_t e = P - 2; e; e >>= 1) {
      if (e & 1) r = r * base;
      base = base * base;
    }
    return r;
  }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

Fp from_mpz(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(Fp::P));
  if (r < 0) r += static_cast<unsigned long>(Fp::P);
  return Fp::raw(r.get_ui());
}

// Decides LT3 through the span of the operators R(u,v): with D_a a basis of
// that span, LT3 is equivalent to (1) [D_a, D_b] lying in the span and
// (2) [D_a, R(x,y)] = R(D_a x, y) + R(x, D_a y) for all a and basis x, y.
// Both sides of (2) lie in the span, so they are compared in coordinates.
// When LT1 holds both sides are antisymmetric in (x, y) and x < y suffices.
template <class F>
bool lt3_holds(size_t d, const std::vector<F>& c, bool antisym) {
  if (d == 0) return true;
  auto C = [&](size_t i, size_t j, size_t k, size_t l) -> const F& { return c[((i * d + j) * d + k) * d + l]; };
  auto op = [&](size_t u, size_t v) {
    std::vector<F> r(d * d);
    for (size_t k = 0; k < d; ++k)
      for (size_t l = 0; l < d; ++l) r[l * d + k] = C(u, v, k, l);
    return r;
  };
  Echelon<F> span(d * d);
  for (size_t u = 0; u < d; ++u)
    for (size_t v = antisym ? u + 1 : 0; v < d; ++v) span.insert(op(u, v));
  size_t r = span.rank();
  if (r == 0) return true;
  const auto& piv = span.pivots();
  const auto& D = span.rows();

  // rho[(u*d + v)*r + a]: coordinates of R(u,v).
  std::vector<F> rho(d * d * r);
  for (size_t u = 0; u < d; ++u)
    for (size_t v = 0; v < d; ++v) {
      if (antisym && v < u) {
        for (size_t a = 0; a < r; ++a) rho[(u * d + v) * r + a] = -rho[(v * d + u) * r + a];
        continue;
      }
      if (antisym && u == v) continue;
      for (size_t a = 0; a < r; ++a) rho[(u * d + v) * r + a] = C(u, v, piv[a] % d, piv[a] / d);
    }

  // kappa[(a*r + b)*r + e]: coordinates of [D_a, D_b].
  std::vector<F> kappa(r * r * r);
  std::vector<F> k(d * d);
  for (size_t a = 0; a < r; ++a)
    for (size_t b = a + 1; b < r; ++b) {
      std::fill(k.begin(), k.end(), F());
      const auto& da = D[a];
      const auto& db = D[b];
      for (size_t i = 0; i < d; ++i)
        for (size_t m = 0; m < d; ++m) {
          F x = da[i * d + m], y = db[i * d + m];
          if (!x.is_zero())
            for (size_t j = 0; j < d; ++j)
              if (!db[m * d + j].is_zero()) k[i * d + j] += x * db[m * d + j];
          if (!y.is_zero())
            for (size_t j = 0; j < d; ++j)
              if (!da[m * d + j].is_zero()) k[i * d + j] -= y * da[m * d + j];
        }
      for (size_t e = 0; e < r; ++e) {
        F co = k[piv[e]];
        kappa[(a * r + b) * r + e] = co;
        kappa[(b * r + a) * r + e] = -co;
        if (co.is_zero()) continue;
        for (size_t j = piv[e]; j < d * d; ++j)
          if (!D[e][j].is_zero()) k[j] -= co * D[e][j];
      }
      for (const auto& x : k)
        if (!x.is_zero()) return false;
    }

  std::vector<F> lhs(r), rhs(r);
  for (size_t a = 0; a < r; ++a) {
    const auto& da = D[a];
    for (size_t x = 0; x < d; ++x)
      for (size_t y = antisym ? x + 1 : 0; y < d; ++y) {
        std::fill(lhs.begin(), lhs.end(), F());
        std::fill(rhs.begin(), rhs.end(), F());
        const F* rxy = &rho[(x * d + y) * r];
        for (size_t b = 0; b < r; ++b) {
          if (rxy[b].is_zero() || b == a) continue;
          const F* kab = &kappa[(a * r + b) * r];
          for (size_t e = 0; e < r; ++e) lhs[e] += rxy[b] * kab[e];
        }
        for (size_t w = 0; w < d; ++w) {
          F f1 = da[w * d + x], f2 = da[w * d + y];
          if (!f1.is_zero()) {
            const F* rwy = &rho[(w * d + y) * r];
            for (size_t e = 0; e < r; ++e) rhs[e] += f1 * rwy[e];
          }
          if (!f2.is_zero()) {
            const F* rxw = &rho[(x * d + w) * r];
            for (size_t e = 0; e < r; ++e) rhs[e] += f2 * rxw[e];
          }
        }
        for (size_t e = 0; e < r; ++e)
          if (!(lhs[e] == rhs[e])) return false;
      }
  }
  return true;
}

// Direct search for (u, v, x, y, z) violating LT3, bounded by `budget`
// multiply-adds; nullopt if none is found within the budget.
std::optional<std::vector<size_t>> lt3_witness(size_t d, const std::vector<Rational>& c, double budget) {
  auto C = [&](size_t i, size_t j, size_t k, size_t l) -> const Rational& { return c[((i * d + j) * d + k) * d + l]; };
  double spent = 0;
  for (size_t u = 0; u < d; ++u)
    for (size_t v = 0; v < d; ++v)
      for (size_t x = 0; x < d; ++x)
        for (size_t y = 0; y < d; ++y)
          for (size_t z = 0; z < d; ++z) {
            spent += 4.0 * d * d;
            if (spent > budget) return std::nullopt;
            for (size_t l = 0; l < d; ++l) {
              Rational s;
              for (size_t w = 0; w < d; ++w) {
                if (!C(x, y, z, w).is_zero()) s += C(x, y, z, w) * C(u, v, w, l);
                if (!C(u, v, x, w).is_zero()) s -= C(u, v, x, w) * C(w, y, z, l);
                if (!C(u, v, y, w).is_zero()) s -= C(u, v, y, w) * C(x, w, z, l);
                if (!C(u, v, z, w).is_zero()) s -= C(u, v, z, w) * C(x, y, w, l);
              }
              if (!s.is_zero()) return std::vector<size_t>{u, v, x, y, z};
            }
          }
  return std::nullopt;
}

// True iff LT3 holds. Structure constants are scaled to integers C; when
// 8 d max|C|^2 < p every LT3 defect (a sum of 4d products) is an integer of
// absolute value below p/2, so the computation modulo p is exact.
// Integers lcd * c as int64 when every constant is small and nothing overflows.
std::optional<std::vector<int64_t>> small_integers(const std::vector<Rational>& c) {
  __int128 lcd = 1;
  for (const auto& x : c) {
    if (!x.is_small()) return std::nullopt;
    if (x.is_zero() || x.small_den() == 1) continue;
    __int128 g = std::gcd(static_cast<int64_t>(lcd), x.small_den());
    lcd = lcd / g * x.small_den();
    if (lcd > INT64_MAX) return std::nullopt;
  }
  std::vector<int64_t> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    __int128 v = static_cast<__int128>(c[i].small_num()) * (lcd / c[i].small_den());
    if (v > INT64_MAX || v < -INT64_MAX) return std::nullopt;
    out[i] = static_cast<int64_t>(v);
  }
  return out;
}

// True iff LT3 holds. Structure constants are scaled to integers C; when
// 8 d max|C|^2 < p every LT3 defect (a sum of 4d products) is an integer of
// absolute value below p/2, so the computation modulo p is exact.
bool lt3(size_t d, const std::vector<Rational>& c, bool antisym) {
  if (auto ints = small_integers(c)) {
    uint64_t maxabs = 0;
    for (int64_t v : *ints) maxabs = std::max<uint64_t>(maxabs, static_cast<uint64_t>(v < 0 ? -v : v));
    if (static_cast<unsigned __int128>(8) * d * maxabs * maxabs < Fp::P) {
      std::vector<Fp> f;
      f.reserve(ints->size());
      for (int64_t v : *ints) f.push_back(Fp(static_cast<long long>(v)));
      return lt3_holds(d, f, antisym);
    }
  }
  mpz_class lcd = 1;
  for (const auto& x : c)
    if (!x.is_integer()) lcd = lcm(lcd, x.denominator());
  mpz_class maxabs = 0;
  std::vector<mpz_class> ints;
  ints.reserve(c.size());
  for (const auto& x : c) {
    mpz_class v = x.numerator() * (lcd / x.denominator());
    if (abs(v) > maxabs) maxabs = abs(v);
    ints.push_back(std::move(v));
  }
  mpz_class bound = 8 * mpz_class(static_cast<unsigned long>(d)) * maxabs * maxabs;
  if (bound < mpz_class(static_cast<unsigned long>(Fp::P))) {
    std::vector<Fp> f;
    f.reserve(ints.size());
    for (const auto& v : ints) f.push_back(from_mpz(v));
    return lt3_holds(d, f, antisym);
  }
  return lt3_holds(d, c, antisym);
}

Witness basis_witness(const Subspace& s, std::vector<size_t> idx) {
  Witness w{std::move(idx), {}};
  for (size_t i : w.indices) w.matrices.push_back(s.basis_matrix(i));
  return w;
}

}  // namespace

bool LtsReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const AxiomResult& LtsReport::get(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  throw std::invalid_argument("no result for axiom " + axiom);
}

LtsReport check_lts(const TripleSystem& t) {
  LtsReport rep;
  const Subspace& s = t.space();
  if (!t.closed()) {
    const auto& w = *t.closure_witness();
    rep.results.push_back({"closure", false, basis_witness(s, {w[0], w[1], w[2]})});
    for (const char* ax : {"LT1", "LT2", "LT3"}) rep.results.push_back({ax, false, std::nullopt});
    return rep;
  }
  rep.results.push_back({"closure", true, std::nullopt});
  size_t d = t.dim();

  // Every violation of LT1 or LT2 involves a nonzero constant, so only those are visited.
  std::vector<std::array<size_t, 4>> nz;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        for (size_t l = 0; l < d; ++l)
          if (!t.c(i, j, k, l).is_zero()) nz.push_back({i, j, k, l});

  AxiomResult lt1{"LT1", true, std::nullopt};
  for (const auto& [i, j, k, l] : nz)
    if (!(t.c(i, j, k, l) + t.c(j, i, k, l)).is_zero()) {
      lt1.pass = false;
      lt1.witness = basis_witness(s, {i, j, k});
      break;
    }
  rep.results.push_back(lt1);

  AxiomResult lt2{"LT2", true, std::nullopt};
  for (const auto& [i, j, k, l] : nz)
    if (!(t.c(i, j, k, l) + t.c(j, k, i, l) + t.c(k, i, j, l)).is_zero()) {
      lt2.pass = false;
      lt2.witness = basis_witness(s, {i, j, k});
      break;
    }
  rep.results.push_back(lt2);

  AxiomResult lt3r{"LT3", true, std::nullopt};
  if (!lt3(d, t.structure_constants(), lt1.pass)) {
    lt3r.pass = false;
    if (auto w = lt3_witness(d, t.structure_constants(), 4e8)) lt3r.witness = basis_witness(s, *w);
  }
  rep.results.push_back(lt3r);
  return rep;
}

AxiomResult check_closure(const Subspace& s, const TripleProduct& p) {
  std::vector<Matrix> b = s.basis_matrices();
  size_t d = b.size();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        if (!s.contains(p(b[i], b[j], b[k]))) return {"closure", false, basis_witness(s, {i, j, k})};
  return {"closure", true, std::nullopt};
}

AxiomResult check_closure_A(const Subspace& s, const Matrix& a) {
  TripleSystem t = TripleSystem::from_parameter(s, a);
  if (t.closed()) return {"closure", true, std::nullopt};
  const auto& w = *t.closure_witness();
  return {"closure", false, basis_witness(s, {w[0], w[1], w[2]})};
}

}  // namespace hom
