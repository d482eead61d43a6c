#pragma once
// Number-field scalars: elements of Q[t]/(m(t)) for a monic minimal polynomial
// m of degree 1..6.  An element with a null field pointer is a plain rational
// constant and lifts automatically when combined with field elements.
//
// Inversion runs the extended Euclidean algorithm in Q[t]; if it uncovers a
// nontrivial factor of m (i.e. m was not irreducible), it reports that factor
// in the exception message.  Complex embeddings come from a Durand-Kerner
// root finder with Newton polish; roots are ordered by (real, imaginary).

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat.hpp"

namespace psmat {

// ---------- dense univariate polynomials over Q (coeffs low -> high) ----------

using RatPoly = std::vector<Rat>;

inline void poly_trim(RatPoly& p) {
  while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
}

inline int poly_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

inline RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline RatPoly poly_scale(const RatPoly& a, const Rat& s) {
  RatPoly r = a;
  for (auto& c : r) c *= s;
  poly_trim(r);
  return r;
}

inline RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  return poly_add(a, poly_scale(b, Rat(-1)));
}

// Division with remainder; divisor need not be monic but must be nonzero.
inline void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  r = a;
  poly_trim(r);
  q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rat(0));
  while (poly_deg(r) >= poly_deg(b)) {
    int shift = poly_deg(r) - poly_deg(b);
    Rat f = r.back() / b.back();
    q[shift] += f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    poly_trim(r);
  }
  poly_trim(q);
}

inline RatPoly poly_mod(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

inline RatPoly poly_monic(const RatPoly& p) {
  if (p.empty()) return p;
  return poly_scale(p, Rat(1) / p.back());
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    RatPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : poly_monic(a);
}

inline RatPoly poly_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
  return d;
}

inline std::string poly_str(const RatPoly& p, const std::string& var = "t") {
  if (p.empty()) return "0";
  std::string out;
  for (int i = poly_deg(p); i >= 0; --i) {
    const Rat& c = p[static_cast<std::size_t>(i)];
    if (rat_is_zero(c)) continue;
    bool first = out.empty();
    Rat ac = rat_abs(c);
    if (first)
      out += (sgn(c) < 0) ? "-" : "";
    else
      out += (sgn(c) < 0) ? " - " : " + ";
    bool unit = (ac == 1) && i > 0;
    if (!unit) out += rat_str(ac);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// ---------- minimal polynomials ----------

struct MinPoly {
  RatPoly c;  // monic: c[degree] == 1
  int degree() const { return poly_deg(c); }
  bool operator==(const MinPoly& o) const { return c == o.c; }
};

using Field = std::shared_ptr<const MinPoly>;

namespace detail {

// Rational-root search for an integer polynomial, used as the (partial)
// irreducibility check.  Divisor enumeration stays cheap by trial-dividing
// only up to a fixed bound; constants larger than that skip the check.
inline bool find_rational_root(const RatPoly& p, Rat* root) {
  mpz_class den(1);
  for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(c.get_num() * (den / c.get_den()));
  std::size_t lo = 0;
  while (lo < z.size() && z[lo] == 0) ++lo;
  if (lo > 0) {
    if (root) *root = 0;
    return true;
  }
  mpz_class a0 = abs(z.front()), an = abs(z.back());
  const long kBound = 1000000;
  if (a0 > kBound || an > kBound) return false;  // out of reach; treat as rootless
  auto divisors = [](long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
      }
    return d;
  };
  auto eval = [&p](const Rat& x) {
    Rat v = 0;
    for (int i = poly_deg(p); i >= 0; --i) v = v * x + p[static_cast<std::size_t>(i)];
    return v;
  };
  for (long pn : divisors(a0.get_si()))
    for (long qn : divisors(an.get_si()))
      for (int s : {1, -1}) {
        Rat cand = rat_of(s * pn, qn);
        if (rat_is_zero(eval(cand))) {
          if (root) *root = cand;
          return true;
        }
      }
  return false;
}

}  // namespace detail

inline Field make_field(const RatPoly& coeffs) {
  RatPoly c = coeffs;
  poly_trim(c);
  int d = poly_deg(c);
  if (d < 1 || d > 6)
    throw std::invalid_argument("minimal polynomial degree must be between 1 and 6");
  if (c.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  if (d >= 2 && d <= 3) {
    Rat root;
    if (detail::find_rational_root(c, &root))
      throw std::invalid_argument("reducible minimal polynomial: root at t = " +
                                  rat_str(root) + " in " + poly_str(c));
  }
  return std::make_shared<const MinPoly>(MinPoly{c});
}

inline bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------- field elements ----------

struct NFElem {
  Field f;             // null: plain rational constant
  std::vector<Rat> c;  // size == (f ? f->degree() : 1)

  NFElem() : c{Rat(0)} {}
  NFElem(const Rat& q) : c{q} {}            // NOLINT: implicit by design
  NFElem(long n) : c{Rat(n)} {}             // NOLINT
  NFElem(Field field, std::vector<Rat> coeffs) : f(std::move(field)), c(std::move(coeffs)) {
    if (!f) throw std::invalid_argument("null field in NFElem constructor");
    if (static_cast<int>(c.size()) > f->degree())
      throw std::invalid_argument("coefficient vector longer than field degree");
    c.resize(static_cast<std::size_t>(f->degree()), Rat(0));
  }

  bool is_rational() const { return !f; }
  Rat rational_value() const {
    if (f)
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!rat_is_zero(c[i])) throw std::domain_error("field element is not rational");
    return c[0];
  }
};

inline bool nf_is_zero(const NFElem& x) {
  return std::all_of(x.c.begin(), x.c.end(), [](const Rat& q) { return rat_is_zero(q); });
}

namespace detail {

inline NFElem lift(const NFElem& x, const Field& f) {
  if (!f || x.f) return x;
  std::vector<Rat> c(static_cast<std::size_t>(f->degree()), Rat(0));
  c[0] = x.c[0];
  return NFElem(f, std::move(c));
}

inline Field unify(const NFElem& a, const NFElem& b) {
  if (!a.f) return b.f;
  if (!b.f) return a.f;
  if (!same_field(a.f, b.f))
    throw std::invalid_argument("mixing elements of different number fields: " +
                                poly_str(a.f->c) + " vs " + poly_str(b.f->c));
  return a.f;
}

inline std::vector<Rat> reduce_mod(const std::vector<Rat>& raw, const Field& f) {
  RatPoly r = poly_mod(RatPoly(raw.begin(), raw.end()), f->c);
  r.resize(static_cast<std::size_t>(f->degree()), Rat(0));
  return r;
}

}  // namespace detail

inline NFElem nf_gen(const Field& f) {
  std::vector<Rat> c(static_cast<std::size_t>(f->degree()), Rat(0));
  if (f->degree() >= 2)
    c[1] = 1;
  else
    c[0] = -f->c[0];  // degree-1 field: t is the rational root itself
  return NFElem(f, std::move(c));
}

inline NFElem operator+(const NFElem& a, const NFElem& b) {
  Field f = detail::unify(a, b);
  NFElem x = detail::lift(a, f), y = detail::lift(b, f);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
  return x;
}

inline NFElem operator-(const NFElem& a, const NFElem& b) {
  Field f = detail::unify(a, b);
  NFElem x = detail::lift(a, f), y = detail::lift(b, f);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
  return x;
}

inline NFElem operator-(const NFElem& a) {
  NFElem x = a;
  for (auto& q : x.c) q = -q;
  return x;
}

inline NFElem operator*(const NFElem& a, const NFElem& b) {
  Field f = detail::unify(a, b);
  if (!f) return NFElem(a.c[0] * b.c[0]);
  NFElem x = detail::lift(a, f), y = detail::lift(b, f);
  std::vector<Rat> raw(x.c.size() + y.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < y.c.size(); ++j) raw[i + j] += x.c[i] * y.c[j];
  return NFElem(f, detail::reduce_mod(raw, f));
}

inline NFElem nf_inv(const NFElem& a) {
  if (nf_is_zero(a)) throw std::domain_error("division by zero field element");
  if (!a.f) return NFElem(Rat(1) / a.c[0]);
  // extended Euclid: s*a + t*m = gcd
  RatPoly r0 = a.f->c, r1(a.c.begin(), a.c.end());
  poly_trim(r1);
  RatPoly s0 = {}, s1 = {Rat(1)};  // coefficients of the a-side combination
  while (!r1.empty()) {
    RatPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_deg(r0) >= 1)
    throw std::domain_error("cannot invert: minimal polynomial " + poly_str(a.f->c) +
                            " is reducible with factor " + poly_str(poly_monic(r0)));
  RatPoly inv = poly_scale(s0, Rat(1) / r0[0]);
  inv.resize(static_cast<std::size_t>(a.f->degree()), Rat(0));
  return NFElem(a.f, std::vector<Rat>(inv.begin(), inv.end()));
}

inline NFElem operator/(const NFElem& a, const NFElem& b) { return a * nf_inv(b); }

inline bool operator==(const NFElem& a, const NFElem& b) { return nf_is_zero(a - b); }
inline bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

inline NFElem nf_pow(const NFElem& x, unsigned e) {
  NFElem r(Rat(1)), base = x;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Evaluates the element's coefficient polynomial at a new value (Horner); with
// image = a root of the same minimal polynomial this realizes a field
// automorphism, e.g. t -> -1-t on Q[t]/(t^2+t+1).
inline NFElem nf_subst(const NFElem& x, const NFElem& image) {
  if (!x.f) return x;
  NFElem v(Rat(0));
  for (std::size_t i = x.c.size(); i-- > 0;) v = v * image + NFElem(x.c[i]);
  return v;
}

inline std::string nf_str(const NFElem& x) {
  if (!x.f) return rat_str(x.c[0]);
  return poly_str(RatPoly(x.c.begin(), x.c.end()));
}

// ---------- complex embeddings ----------

using Cplx = std::complex<double>;

namespace detail {

inline Cplx horner(const std::vector<Cplx>& coeffs, Cplx x) {
  Cplx v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

}  // namespace detail

// All complex roots of a monic polynomial (coeffs low -> high, c.back() == 1),
// sorted by real part then imaginary part.  Durand-Kerner iteration followed
// by Newton polish; intended for moderate degrees with distinct-ish roots.
inline std::vector<Cplx> poly_roots_numeric(const std::vector<Cplx>& c) {
  int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  double radius = 1.0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, 1.0 + std::abs(c[static_cast<std::size_t>(i)]));
  std::vector<Cplx> z(static_cast<std::size_t>(d));
  Cplx seed(0.4, 0.9);
  Cplx w = 1;
  for (auto& zi : z) {
    w *= seed;
    zi = radius * w / std::abs(w);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double move = 0;
    for (int i = 0; i < d; ++i) {
      Cplx num = detail::horner(c, z[static_cast<std::size_t>(i)]);
      Cplx den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      Cplx delta = num / den;
      z[static_cast<std::size_t>(i)] -= delta;
      move = std::max(move, std::abs(delta));
    }
    if (move < 1e-14) break;
  }
  // Newton polish sharpens each root independently.
  std::vector<Cplx> dc(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i)
    dc[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * static_cast<double>(i);
  for (auto& zi : z)
    for (int k = 0; k < 8; ++k) {
      Cplx fp = detail::horner(dc, zi);
      if (std::abs(fp) < 1e-300) break;
      zi -= detail::horner(c, zi) / fp;
    }
  std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

inline std::vector<Cplx> field_roots(const MinPoly& f) {
  std::vector<Cplx> c(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = rat_double(f.c[i]);
  return poly_roots_numeric(c);
}

// Embeds x into C by sending t to the root_choice-th root (in sorted order).
inline Cplx embed_complex(const NFElem& x, int root_choice = 0) {
  if (!x.f) return Cplx(rat_double(x.c[0]), 0.0);
  std::vector<Cplx> roots = field_roots(*x.f);
  if (root_choice < 0 || root_choice >= static_cast<int>(roots.size()))
    throw std::out_of_range("root_choice out of range");
  Cplx t = roots[static_cast<std::size_t>(root_choice)];
  std::vector<Cplx> coeffs(x.c.size());
  for (std::size_t i = 0; i < x.c.size(); ++i) coeffs[i] = rat_double(x.c[i]);
  return detail::horner(coeffs, t);
}

}  // namespace psmat
