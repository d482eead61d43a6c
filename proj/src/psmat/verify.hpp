#pragma once
// Exact residual checking: system equations, the numbered relation families
// (2.1.x, 4.1.x, 5.1.x, the degree-4/5 monomial tables, 7.2.1, the pair
// system), and the commutator-nilpotency refutation of simultaneous
// triangularizability.  Exact scalar types must produce literally zero
// residuals; floating types pass under a 1e-9 max-entry tolerance.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "construct.hpp"
#include "matrix.hpp"

namespace psmat {

inline constexpr double kVerifyTol = 1e-9;

enum class RelationSet { SYS, R21, R41, R51, THM4_DEG4, THM4_DEG5, SIGMA, TSYS, PATTERN_721 };

std::string relation_set_name(RelationSet rs);
RelationSet relation_set_of(const std::string& name);  // throws on unknown names

namespace detail {

template <class K>
double resid_norm(const Mat<K>& m) {
  if constexpr (std::is_same_v<K, Rat>) {
    return mat_max_abs(mat_double_of(m));
  } else if constexpr (std::is_same_v<K, NFElem>) {
    return mat_is_zero(m) ? 0.0 : mat_max_abs(mat_embed(m, 0));
  } else {
    return mat_max_abs(m);
  }
}

}  // namespace detail

template <class K>
struct CheckLine {
  std::string name;
  bool pass = false;
  Mat<K> residual;
  double residual_norm = 0.0;
};

template <class K>
struct Report {
  std::vector<CheckLine<K>> lines;
  std::vector<std::string> notes;
  bool pass = true;

  void add(const std::string& name, const Mat<K>& residual) {
    CheckLine<K> line;
    line.name = name;
    line.residual = residual;
    if constexpr (ScalarOps<K>::exact) {
      line.pass = mat_is_zero(residual);
      line.residual_norm = line.pass ? 0.0 : detail::resid_norm(residual);
    } else {
      line.residual_norm = detail::resid_norm(residual);
      line.pass = line.residual_norm <= kVerifyTol;
    }
    pass = pass && line.pass;
    lines.push_back(std::move(line));
  }
};

template <class K>
struct RelationContext {
  std::optional<Mat<K>> u, v;
};

namespace detail {

template <class K>
void require_square_triple(const Mat<K>& a, const Mat<K>& b, const Mat<K>& c) {
  if (a.nr != a.nc || b.nr != b.nc || c.nr != c.nc || a.nr != b.nr || a.nr != c.nr)
    throw std::invalid_argument("matrices must be square and of equal size");
}

// evaluate a word over {a, b}, encoded as a string of 'a'/'b'
template <class K>
Mat<K> word_eval(const std::string& w, const Mat<K>& a, const Mat<K>& b) {
  Mat<K> m = mat_eye<K>(a.nr);
  for (char ch : w) m = m * (ch == 'a' ? a : b);
  return m;
}

}  // namespace detail

template <class K>
Report<K> check_system(const SolutionTriple<K>& t) {
  detail::require_square_triple(t.a, t.b, t.c);
  Mat<K> i = mat_eye<K>(t.a.nr);
  Report<K> rep;
  rep.add("a + b + c - alpha*I", t.a + t.b + t.c - t.params.alpha * i);
  rep.add("a^2 + b^2 + c^2 - beta*I",
          t.a * t.a + t.b * t.b + t.c * t.c - t.params.beta * i);
  rep.add("a^3 + b^3 + c^3 - gamma*I",
          mat_pow(t.a, 3) + mat_pow(t.b, 3) + mat_pow(t.c, 3) - t.params.gamma * i);
  return rep;
}

// matrix right-hand sides (the solver for U-valued systems)
template <class K>
Report<K> check_system_rhs(const Mat<K>& a, const Mat<K>& b, const Mat<K>& c,
                           const std::array<Mat<K>, 3>& rhs) {
  detail::require_square_triple(a, b, c);
  Report<K> rep;
  rep.add("a + b + c - rhs1", a + b + c - rhs[0]);
  rep.add("a^2 + b^2 + c^2 - rhs2", a * a + b * b + c * c - rhs[1]);
  rep.add("a^3 + b^3 + c^3 - rhs3", mat_pow(a, 3) + mat_pow(b, 3) + mat_pow(c, 3) - rhs[2]);
  return rep;
}

template <class K>
Report<K> check_thm4_monomials(const SolutionTriple<K>& t) {
  detail::require_square_triple(t.a, t.b, t.c);
  Report<K> rep;
  const Mat<K>& a = t.a;
  const Mat<K>& b = t.b;
  Mat<K> a4 = mat_pow(a, 4);
  K half = K(1) / (K(1) + K(1));
  K fivehalf = (K(5)) / (K(1) + K(1));
  for (int bits = 0; bits < 16; ++bits) {
    std::string w;
    for (int k = 3; k >= 0; --k) w += ((bits >> k) & 1) ? 'b' : 'a';
    Mat<K> val = detail::word_eval(w, a, b);
    if (w == "aaaa") continue;  // the reference value itself
    if (w == "bbbb")
      rep.add("b^4 - a^4", val - a4);
    else if (w == "abab" || w == "baba")
      rep.add(w + " - (5/2)a^4", val - fivehalf * a4);
    else
      rep.add(w + " + (1/2)a^4", val + half * a4);
  }
  for (int bits = 0; bits < 32; ++bits) {
    std::string w;
    for (int k = 4; k >= 0; --k) w += ((bits >> k) & 1) ? 'b' : 'a';
    rep.add("deg5 " + w, detail::word_eval(w, a, b));
  }
  bool a4_zero;
  if constexpr (ScalarOps<K>::exact)
    a4_zero = mat_is_zero(a4);
  else
    a4_zero = detail::resid_norm(a4) <= kVerifyTol;
  rep.notes.push_back(a4_zero ? "a^4 = 0: the identities hold trivially"
                              : "a^4 is nonzero: the table is a nontrivial constraint");
  return rep;
}

template <class K>
Report<K> check_relations(const SolutionTriple<K>& t, RelationSet rs,
                          const RelationContext<K>& ctx = {}) {
  detail::require_square_triple(t.a, t.b, t.c);
  const Mat<K>& a = t.a;
  const Mat<K>& b = t.b;
  Report<K> rep;
  switch (rs) {
    case RelationSet::SYS:
      return check_system(t);
    case RelationSet::THM4_DEG4:
    case RelationSet::THM4_DEG5: {
      Report<K> full = check_thm4_monomials(t);
      Report<K> part;
      part.notes = full.notes;
      for (auto& line : full.lines) {
        bool deg5 = line.name.rfind("deg5 ", 0) == 0;
        if ((rs == RelationSet::THM4_DEG5) == deg5) {
          part.pass = part.pass && line.pass;
          part.lines.push_back(std::move(line));
        }
      }
      return part;
    }
    case RelationSet::R21: {
      if (!ctx.u || !ctx.v)
        throw std::invalid_argument("relation set R21 needs context matrices u and v");
      const Mat<K>& u = *ctx.u;
      const Mat<K>& v = *ctx.v;
      Mat<K> u2 = u * u, v3 = mat_pow(v, 3);
      K two = K(1) + K(1);
      rep.add("context [a,u]", a * u - u * a);
      rep.add("context [b,u]", b * u - u * b);
      rep.add("2.1.0: 2b^2 + 2ab + 2a^2 - u^2", two * (b * b) + two * (a * b) + two * (a * a) - u2);
      rep.add("2.1.1: ab - ba", a * b - b * a);
      rep.add("2.1.2: 6a^3 - 3au^2 - 2v^3", K(6) * mat_pow(a, 3) - K(3) * (a * u2) - two * v3);
      rep.add("2.1.3: 2(a^2 + b^2) + ab + ba - u^2",
              two * (a * a + b * b) + a * b + b * a - u2);
      rep.add("2.1.4: b^3a - ab^3 - ba^3 + a^3b",
              mat_pow(b, 3) * a - a * mat_pow(b, 3) - b * mat_pow(a, 3) + mat_pow(a, 3) * b);
      rep.add("2.1.5: ba^3 - a^3b - a^2b^2 - abab + b^2a^2 + baba",
              b * mat_pow(a, 3) - mat_pow(a, 3) * b - (a * a) * (b * b) -
                  detail::word_eval<K>("abab", a, b) + (b * b) * (a * a) +
                  detail::word_eval<K>("baba", a, b));
      return rep;
    }
    case RelationSet::R41: {
      if (!ctx.u) throw std::invalid_argument("relation set R41 needs a context matrix u");
      const Mat<K>& u = *ctx.u;
      Mat<K> u2 = u * u;
      rep.add("context [a,u]", a * u - u * a);
      rep.add("context [b,u]", b * u - u * b);
      rep.add("4.1.1: a^2b - ba^2", (a * a) * b - b * (a * a));
      K two = K(1) + K(1);
      rep.add("4.1.2: -bab - a^2b + 2a^3 - u^2a",
              two * mat_pow(a, 3) - b * a * b - (a * a) * b - u2 * a);
      rep.add("4.1.3: 6a^5 - 5u^2a^3 + u^4a",
              K(6) * mat_pow(a, 5) - K(5) * (u2 * mat_pow(a, 3)) + (u2 * u2) * a);
      return rep;
    }
    case RelationSet::R51: {
      K two = K(1) + K(1);
      K half = K(1) / two;
      Mat<K> a3 = mat_pow(a, 3), a4 = mat_pow(a, 4);
      rep.add("5.1.0: a + b + c", a + b + t.c);
      rep.add("5.1.1: ab + ba + 2a^2 + 2b^2", a * b + b * a + two * (a * a) + two * (b * b));
      rep.add("5.1.2: a^2b - ba^2", (a * a) * b - b * (a * a));
      rep.add("5.1.3: 2a^3 - a^2b - bab", two * a3 - (a * a) * b - b * a * b);
      rep.add("5.1.4: a^2ba + (1/2)a^4", (a * a) * (b * a) + half * a4);
      rep.add("5.1.4': a^3b + (1/2)a^4", a3 * b + half * a4);
      rep.add("5.1.5: a^5", mat_pow(a, 5));
      return rep;
    }
    case RelationSet::SIGMA:
    case RelationSet::PATTERN_721:
      throw std::invalid_argument("relation set " + relation_set_name(rs) +
                                  " applies to four-matrix solutions");
    case RelationSet::TSYS:
      throw std::invalid_argument("relation set TSYS applies to pair solutions");
  }
  throw std::logic_error("unhandled relation set");
}

template <class K>
Report<K> check_relations(const SolutionQuad<K>& q, RelationSet rs) {
  detail::require_square_triple(q.a, q.b, q.c);
  if (q.d.nr != q.a.nr || q.d.nc != q.a.nr)
    throw std::invalid_argument("matrices must be square and of equal size");
  Report<K> rep;
  if (rs == RelationSet::SIGMA) {
    Mat<K> i = mat_eye<K>(q.a.nr);
    for (int k = 1; k <= 4; ++k) {
      Mat<K> s = mat_pow(q.a, k) + mat_pow(q.b, k) + mat_pow(q.c, k) + mat_pow(q.d, k);
      rep.add("power sum " + std::to_string(k) + " - alpha_" + std::to_string(k) + "*I",
              s - q.alphas[k - 1] * i);
    }
    return rep;
  }
  if (rs == RelationSet::PATTERN_721) {
    if constexpr (std::is_same_v<K, NFElem>) {
      Field f;
      for (const Mat<NFElem>* m : {&q.a, &q.b, &q.c, &q.d})
        for (const NFElem& e : m->e)
          if (!f && e.f) f = e.f;
      if (!f || poly_deg(f->c) != 2 || f->c[0] != Rat(1) || f->c[1] != Rat(1))
        throw std::invalid_argument("pattern 7.2.1 needs entries over Q(j), j^2 + j + 1 = 0");
      NFElem j = nf_gen(f);
      Mat<NFElem> i2 = mat_lift(mat_rat(2, 2, {1, 0, 0, 1}), f);
      if (q.a.nr != 2) throw std::invalid_argument("pattern 7.2.1 is a 2x2 identity set");
      rep.add("a + b + c + d", q.a + q.b + q.c + q.d);
      rep.add("a^2 - I", q.a * q.a - i2);
      rep.add("b^2 - j*I", q.b * q.b - j * i2);
      rep.add("c^2 - j^2*I", q.c * q.c - j * j * i2);
      rep.add("d^2", q.d * q.d);
      rep.add("a + jb + j^2c", q.a + j * q.b + j * j * q.c);
      return rep;
    } else {
      throw std::invalid_argument("pattern 7.2.1 requires the exact Q(j) representation");
    }
  }
  throw std::invalid_argument("relation set " + relation_set_name(rs) +
                              " does not apply to four-matrix solutions");
}

template <class K>
Report<K> check_relations(const SolutionPair<K>& p, RelationSet rs) {
  if (p.a.nr != p.a.nc || p.b.nr != p.a.nr || p.b.nc != p.a.nr)
    throw std::invalid_argument("matrices must be square and of equal size");
  if (rs != RelationSet::TSYS)
    throw std::invalid_argument("relation set " + relation_set_name(rs) +
                                " does not apply to pair solutions");
  int n = p.a.nr;
  Report<K> rep;
  Mat<K> ab = p.a * p.b;
  rep.add("ab + ba - I", ab + p.b * p.a - mat_eye<K>(n));
  rep.add("b a^2 b", p.b * p.a * p.a * p.b);
  rep.add("(ab)^2 - ab", ab * ab - ab);
  Mat<K> tr = mat_zeros<K>(1, 1);
  tr.at(0, 0) = mat_trace(ab) - K(n) / (K(1) + K(1));
  rep.add("trace(ab) - n/2", tr);
  return rep;
}

template <class K>
struct CommutatorVerdict {
  bool is_nilpotent = false;
  std::optional<int> index;  // least power with [a,b]^index = 0, when nilpotent
  Mat<K> commutator;
  std::string note;
};

// Nilpotency of [a,b]: a non-nilpotent commutator refutes simultaneous
// triangularizability; a nilpotent one is inconclusive.
template <class K>
CommutatorVerdict<K> commutator_nilpotency(const SolutionTriple<K>& t) {
  detail::require_square_triple(t.a, t.b, t.c);
  CommutatorVerdict<K> out;
  out.commutator = t.a * t.b - t.b * t.a;
  Mat<K> p = out.commutator;
  int idx = 1;
  auto zero = [](const Mat<K>& m) {
    if constexpr (ScalarOps<K>::exact)
      return mat_is_zero(m);
    else
      return mat_max_abs(m) <= kVerifyTol * std::max(1.0, mat_max_abs(m));
  };
  if constexpr (!ScalarOps<K>::exact) {
    // scale-aware: compare against the commutator's own magnitude
    double scale = std::max(1.0, mat_max_abs(out.commutator));
    while (idx <= t.a.nr && mat_max_abs(p) > kVerifyTol * scale) {
      p = p * out.commutator;
      ++idx;
      scale = std::max(scale, mat_max_abs(p));
    }
    out.is_nilpotent = mat_max_abs(p) <= kVerifyTol * scale;
  } else {
    while (idx <= t.a.nr && !zero(p)) {
      p = p * out.commutator;
      ++idx;
    }
    out.is_nilpotent = zero(p);
  }
  if (out.is_nilpotent) {
    out.index = idx;
    out.note = "commutator nilpotent (index " + std::to_string(idx) +
               "): no refutation of simultaneous triangularization";
  } else {
    out.note = "commutator not nilpotent: the triple is not simultaneously triangularizable";
  }
  return out;
}

}  // namespace psmat
