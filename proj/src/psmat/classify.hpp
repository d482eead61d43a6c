#pragma once
// Classification of the parameter space of the power-sum system
//   a+b+c = alpha*I,  a^2+b^2+c^2 = beta*I,  a^3+b^3+c^3 = gamma*I.
//
// Every solution's common eigenvalue data is governed by the cubic
//   r(x) = 6x^3 - 6*alpha*x^2 + (3*alpha^2-3*beta)*x + (3*alpha*beta - 2*gamma - alpha^3),
// whose shape is captured by two invariants:
//   delta = 2*alpha^3 - 9*alpha*beta + 9*gamma        (vanishes iff a root is
//                                                      the half-sum of the others)
//   dis   = 9a^4b - 8a^3g - 21a^2b^2 + 36abg - 18g^2 - a^6 + 3b^3
//                                                      (vanishes iff r has a
//                                                      repeated root)
// In the shifted coordinates sigma = beta - alpha^2/3, tau = delta/9 the
// identity dis = 3*(sigma^3 - 6*tau^2) holds; it is re-verified on every call.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "numfield.hpp"
#include "rat.hpp"

namespace psmat {

enum class CaseTag { Generic, MultipleRoot, HalfSum, Nilpotent };

inline std::string case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Generic: return "Generic";
    case CaseTag::MultipleRoot: return "MultipleRoot";
    case CaseTag::HalfSum: return "HalfSum";
    case CaseTag::Nilpotent: return "Nilpotent";
  }
  throw std::logic_error("bad CaseTag");
}

template <class K>
struct Params {
  K alpha, beta, gamma;
};

template <class K>
struct Analysis {
  Params<K> params;
  std::array<K, 4> r;  // r[0] x^3 + r[1] x^2 + r[2] x + r[3]
  K delta, dis, sigma, tau;
  CaseTag tag = CaseTag::Generic;
};

namespace detail {
template <class K>
bool scalar_zero(const K& x) {
  if constexpr (std::is_same_v<K, Rat>)
    return rat_is_zero(x);
  else
    return nf_is_zero(x);
}
}  // namespace detail

template <class K>
Analysis<K> analyze(const Params<K>& p) {
  const K &a = p.alpha, &b = p.beta, &g = p.gamma;
  K a2 = a * a, a3 = a2 * a;
  Analysis<K> out;
  out.params = p;
  out.r = {K(6), K(-6) * a, K(3) * a2 - K(3) * b, K(3) * a * b - K(2) * g - a3};
  out.delta = K(2) * a3 - K(9) * a * b + K(9) * g;
  out.dis = K(9) * a2 * a2 * b - K(8) * a3 * g - K(21) * a2 * b * b + K(36) * a * b * g -
            K(18) * g * g - a3 * a3 + K(3) * b * b * b;
  out.sigma = b - a2 / K(3);
  out.tau = out.delta / K(9);
  K check = K(3) * (out.sigma * out.sigma * out.sigma - K(6) * out.tau * out.tau);
  K diff = out.dis - check;
  if (!detail::scalar_zero(diff))
    throw std::logic_error("internal invariant dis = 3*(sigma^3 - 6*tau^2) failed");
  bool dz = detail::scalar_zero(out.delta), rz = detail::scalar_zero(out.dis);
  out.tag = dz ? (rz ? CaseTag::Nilpotent : CaseTag::HalfSum)
              : (rz ? CaseTag::MultipleRoot : CaseTag::Generic);
  return out;
}

// Newton power sums (p1, p2, p3) -> monic cubic x^3 - e1 x^2 + e2 x - e3 with
// those power sums; equals r(x)/6 for (alpha, beta, gamma) = (p1, p2, p3).
template <class K>
std::array<K, 4> power_sums_to_cubic(const K& p1, const K& p2, const K& p3) {
  K e1 = p1;
  K e2 = (p1 * p1 - p2) / K(2);
  K e3 = (p1 * p1 * p1 - K(3) * p1 * p2 + K(2) * p3) / K(6);
  return {K(1), K(0) - e1, e2, K(0) - e3};
}

struct CubicRoots {
  bool exact = false;
  // when exact: all three roots with multiplicity; entries are rational
  // constants or elements of one quadratic extension Q[t]/(t^2 - disc)
  std::vector<NFElem> exact_roots;
  std::array<Cplx, 3> numeric{};  // sorted by (real, imag)
};

// Roots of a cubic with rational coefficients.  Exact roots are produced when
// the cubic has a repeated root (gcd with the derivative), splits through a
// rational root, or reduces to the quadratic formula; otherwise only the
// numeric roots are filled.
CubicRoots cubic_roots(const std::array<Rat, 4>& cubic);

// Closed-form (Cardano) roots of the monic complex cubic x^3+c2x^2+c1x+c0,
// Newton-polished and sorted by (real, imag).  Robust for repeated roots.
std::array<Cplx, 3> cubic_roots_cplx(const Cplx& c2, const Cplx& c1, const Cplx& c0);

// Scale normalization for the repeated-root case (delta != 0, dis = 0): a
// scalar h in Q[s]/(s^3-6) with h^2*sigma = s and h^3*tau = 1, so that
// y = h*(x - alpha/3) carries solutions for (alpha,beta,gamma) to solutions of
// the model parameters (0, s, 1).  unity_twist records which cube root of
// unity aligns the chosen complex embedding of s with the real principal one.
struct Normalization {
  Field field;  // s^3 - 6
  NFElem h;
  int unity_twist = 0;
  Params<NFElem> star;  // (0, s, 1)
  NFElem shift;         // alpha/3
  int root_choice = 0;  // embedding index actually used
};

// root_choice: index into the sorted complex roots of s^3-6, or -1 for the
// real embedding.
template <class K>
Normalization normalize_multiple_root(const Params<K>& p, int root_choice = -1);

// ---------- implementation of templated pieces ----------

template <class K>
Normalization normalize_multiple_root(const Params<K>& p, int root_choice) {
  Analysis<K> an = analyze(p);
  if (an.tag != CaseTag::MultipleRoot)
    throw std::domain_error("normalization requires the repeated-root case (delta != 0, dis = 0), got " +
                            case_tag_name(an.tag));
  Field f6 = make_field({Rat(-6), Rat(0), Rat(0), Rat(1)});
  NFElem sigma, tau, alpha;
  if constexpr (std::is_same_v<K, Rat>) {
    sigma = NFElem(an.sigma);
    tau = NFElem(an.tau);
    alpha = NFElem(p.alpha);
  } else {
    auto check_field = [&f6](const NFElem& x) {
      if (x.f && !same_field(x.f, f6))
        throw std::domain_error("normalization is defined over Q[s]/(s^3-6); got field " +
                                poly_str(x.f->c));
    };
    check_field(an.sigma);
    check_field(an.tau);
    check_field(p.alpha);
    sigma = an.sigma;
    tau = an.tau;
    alpha = p.alpha;
  }
  NFElem s = nf_gen(f6);
  Normalization out;
  out.field = f6;
  out.h = sigma * s * s / (NFElem(Rat(6)) * tau);
  out.shift = alpha / NFElem(Rat(3));
  out.star = {NFElem(Rat(0)), s, NFElem(Rat(1))};
  if (out.h * out.h * sigma != s || out.h * out.h * out.h * tau != NFElem(Rat(1)))
    throw std::logic_error("normalization identities h^2*sigma = s, h^3*tau = 1 failed");
  auto roots = field_roots(*f6);
  if (root_choice == -1) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (std::fabs(roots[i].imag()) < 1e-9) root_choice = static_cast<int>(i);
  }
  if (root_choice < 0 || root_choice >= 3) throw std::out_of_range("root_choice out of range");
  out.root_choice = root_choice;
  Cplx sr = roots[static_cast<std::size_t>(root_choice)];
  // sr = 6^(1/3) * e^(2*pi*i*m/3); the twist k = (3 - m) mod 3 restores m = 0
  double ang = std::arg(sr);
  int m = static_cast<int>(std::lround(ang / (2.0 * 3.14159265358979323846 / 3.0)));
  m = ((m % 3) + 3) % 3;
  out.unity_twist = (3 - m) % 3;
  return out;
}

}  // namespace psmat
