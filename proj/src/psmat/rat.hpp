#pragma once
// Exact rational scalars backed by GMP's mpq_class, plus strict string I/O
// in the "p/q" (or "p") format used across the library's interfaces.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace psmat {

using Rat = mpq_class;

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts an optional sign, digits, and an optional "/digits" part.
// Rejects anything else (whitespace, decimals, empty numerator/denominator).
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  if (i != s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != s.size())
      throw std::invalid_argument("bad rational literal: " + s);
  }
  std::string body = (s[0] == '+') ? s.substr(1) : s;
  Rat q(body);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& q, unsigned e) {
  Rat r = 1;
  Rat base = q;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

// True iff q is the square of a rational; if so and root != nullptr, stores the
// nonnegative square root there.
inline bool rat_is_square(const Rat& q, Rat* root = nullptr) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    if (root) *root = 0;
    return true;
  }
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(rn) / Rat(rd);
  }
  return true;
}

}  // namespace psmat
