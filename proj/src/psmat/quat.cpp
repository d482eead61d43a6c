#include "psmat/quat.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace psmat {

Quaternion quat_mul(const Quaternion& q, const Quaternion& r) {
  return {q.x1 * r.x1 - q.x2 * r.x2 - q.x3 * r.x3 - q.x4 * r.x4,
          q.x1 * r.x2 + q.x2 * r.x1 + q.x3 * r.x4 - q.x4 * r.x3,
          q.x1 * r.x3 - q.x2 * r.x4 + q.x3 * r.x1 + q.x4 * r.x2,
          q.x1 * r.x4 + q.x2 * r.x3 - q.x3 * r.x2 + q.x4 * r.x1};
}

Quaternion quat_conj(const Quaternion& q) { return {q.x1, -q.x2, -q.x3, -q.x4}; }

double quat_norm(const Quaternion& q) {
  return std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3 + q.x4 * q.x4);
}

Quaternion operator+(const Quaternion& q, const Quaternion& r) {
  return {q.x1 + r.x1, q.x2 + r.x2, q.x3 + r.x3, q.x4 + r.x4};
}

Quaternion operator-(const Quaternion& q, const Quaternion& r) {
  return {q.x1 - r.x1, q.x2 - r.x2, q.x3 - r.x3, q.x4 - r.x4};
}

Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.x1, s * q.x2, s * q.x3, s * q.x4};
}

Quaternion quat_pow(const Quaternion& q, int k) {
  Quaternion out{1, 0, 0, 0};
  for (int i = 0; i < k; ++i) out = quat_mul(out, q);
  return out;
}

RegionVerdict region_verdict(double v1, double v2) {
  if (v2 <= 0) throw std::invalid_argument("region_verdict needs v2 > 0");
  RegionVerdict out;
  double s = v2 * v2;
  out.delta_value = 4 * s * s * s + 18 * v1 * s + 3 * v1 * v1 * v1 - 18;
  out.separator_value = v2 * v2 - 3 * v1 * v1;
  out.on_boundary =
      std::abs(out.delta_value) <= 1e-9 || std::abs(out.separator_value) <= 1e-9;
  out.exists_noncommuting = out.delta_value > 0 && out.separator_value < 0;
  return out;
}

double l_threshold(double v1) {
  auto g = [v1](double s) { return 4 * s * s * s + 18 * v1 * s + 3 * v1 * v1 * v1 - 18; };
  if (g(0) >= 0)
    throw std::domain_error("the existence discriminant has no positive root in v2");
  double lo = 0, hi = 1;
  while (g(hi) < 0) hi *= 2;
  while (hi - lo > 1e-10) {
    double mid = (lo + hi) / 2;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return std::sqrt((lo + hi) / 2);
}

CommutingSolutions commuting_solutions(const Quaternion& u, const Quaternion& v,
                                       const Quaternion& w) {
  const double tol = 1e-9;
  const std::array<const Quaternion*, 3> data = {&u, &v, &w};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (quat_norm(quat_mul(*data[i], *data[j]) - quat_mul(*data[j], *data[i])) > tol)
        throw std::invalid_argument("the data u, v, w do not commute");

  CommutingSolutions out;
  out.rho = {0, 1, 0, 0};
  out.rho_free = true;
  for (const Quaternion* q : data) {
    Quaternion im{0, q->x2, q->x3, q->x4};
    double n = quat_norm(im);
    if (n > tol) {
      out.rho = (1 / n) * im;
      out.rho_free = false;
      break;
    }
  }
  // Project each datum onto R + R*rho; commuting quaternions share an
  // imaginary direction, so the projection is exact up to roundoff.
  auto to_c = [&](const Quaternion& q) {
    double mu = q.x2 * out.rho.x2 + q.x3 * out.rho.x3 + q.x4 * out.rho.x4;
    return Cplx(q.x1, mu);
  };
  Cplx p1 = to_c(u), p2 = to_c(v), p3 = to_c(w);
  std::array<Cplx, 4> cubic = power_sums_to_cubic(p1, p2, p3);
  std::array<Cplx, 3> roots = cubic_roots_cplx(cubic[1], cubic[2], cubic[3]);
  for (int k = 0; k < 3; ++k) {
    Quaternion r = Quaternion{roots[k].real(), 0, 0, 0} + roots[k].imag() * out.rho;
    out.roots[static_cast<std::size_t>(k)] = r;
  }
  for (int k = 1; k <= 3; ++k) {
    Quaternion s{0, 0, 0, 0};
    for (const Quaternion& r : out.roots) s = s + quat_pow(r, k);
    double defect = quat_norm(s - *data[static_cast<std::size_t>(k - 1)]);
    out.residual = std::max(out.residual, defect);
  }
  return out;
}

double system_residual(const Quaternion& a, const Quaternion& b, double v1, double v2) {
  Quaternion c = Quaternion{0, 0, 0, 0} - (a + b);
  Quaternion e1 = a + b + c;
  Quaternion e2 = (quat_pow(a, 2) + quat_pow(b, 2) + quat_pow(c, 2)) - Quaternion{v1, v2, 0, 0};
  Quaternion e3 = (quat_pow(a, 3) + quat_pow(b, 3) + quat_pow(c, 3)) - Quaternion{1, 0, 0, 0};
  double r = 0;
  for (const Quaternion& e : {e1, e2, e3})
    for (double x : {e.x1, e.x2, e.x3, e.x4}) r = std::max(r, std::abs(x));
  return r;
}

namespace {

using Vec8 = std::array<double, 8>;

Vec8 equations(const Vec8& x, double v1, double v2) {
  Quaternion a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  Quaternion c = Quaternion{0, 0, 0, 0} - (a + b);
  Quaternion e2 = (quat_pow(a, 2) + quat_pow(b, 2) + quat_pow(c, 2)) - Quaternion{v1, v2, 0, 0};
  Quaternion e3 = (quat_pow(a, 3) + quat_pow(b, 3) + quat_pow(c, 3)) - Quaternion{1, 0, 0, 0};
  return {e2.x1, e2.x2, e2.x3, e2.x4, e3.x1, e3.x2, e3.x3, e3.x4};
}

double max_abs(const Vec8& f) {
  double r = 0;
  for (double x : f) r = std::max(r, std::abs(x));
  return r;
}

// Solves J d = -f in place by partial-pivot elimination; false on a
// numerically singular Jacobian.
bool newton_step(std::array<Vec8, 8>& jac, Vec8& f, Vec8& d) {
  std::array<double, 8> rhs;
  for (int i = 0; i < 8; ++i) rhs[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(i)];
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    for (int r = col + 1; r < 8; ++r)
      if (std::abs(jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(jac[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (std::abs(jac[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) < 1e-12)
      return false;
    std::swap(jac[static_cast<std::size_t>(piv)], jac[static_cast<std::size_t>(col)]);
    std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
    for (int r = col + 1; r < 8; ++r) {
      double m = jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                 jac[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (m == 0) continue;
      for (int k = col; k < 8; ++k)
        jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -=
            m * jac[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
      rhs[static_cast<std::size_t>(r)] -= m * rhs[static_cast<std::size_t>(col)];
    }
  }
  for (int i = 7; i >= 0; --i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < 8; ++k)
      s -= jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
    d[static_cast<std::size_t>(i)] = s / jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  return true;
}

// The four sign variants of the packed unknown vector.
std::array<Vec8, 4> sign_variants(const Vec8& x) {
  Vec8 f3 = x, f4 = x, f34 = x;
  f3[2] = -x[2];
  f3[6] = -x[6];
  f4[3] = -x[3];
  f4[7] = -x[7];
  f34[2] = -x[2];
  f34[6] = -x[6];
  f34[3] = -x[3];
  f34[7] = -x[7];
  return {x, f3, f4, f34};
}

Vec8 canonical_rep(const Vec8& x) {
  auto vars = sign_variants(x);
  return *std::min_element(vars.begin(), vars.end());
}

bool same_solution(const Vec8& x, const Vec8& y) {
  for (int i = 0; i < 8; ++i)
    if (std::abs(x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)]) > 1e-6)
      return false;
  return true;
}

NCSolution pack_solution(const Vec8& x, double v1, double v2) {
  NCSolution s;
  s.a = {x[0], x[1], x[2], x[3]};
  s.b = {x[4], x[5], x[6], x[7]};
  s.c = Quaternion{0, 0, 0, 0} - (s.a + s.b);
  s.v1 = v1;
  s.v2 = v2;
  s.residual = system_residual(s.a, s.b, v1, v2);
  return s;
}

}  // namespace

std::vector<NCSolution> find_noncommuting(double v1, double v2, int attempts,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  std::vector<Vec8> found;
  for (int att = 0; att < attempts; ++att) {
    Vec8 x;
    for (double& xi : x) xi = box(rng);
    Vec8 f = equations(x, v1, v2);
    double fn = max_abs(f);
    bool diverged = false;
    for (int it = 0; it < 200 && fn > 1e-12; ++it) {
      std::array<Vec8, 8> jac;
      for (int j = 0; j < 8; ++j) {
        double h = 1e-7 * std::max(1.0, std::abs(x[static_cast<std::size_t>(j)]));
        Vec8 xh = x;
        xh[static_cast<std::size_t>(j)] += h;
        Vec8 fh = equations(xh, v1, v2);
        for (int i = 0; i < 8; ++i)
          jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              (fh[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i)]) / h;
      }
      Vec8 d;
      if (!newton_step(jac, f, d)) {
        diverged = true;
        break;
      }
      double t = 1;
      Vec8 xn;
      double fnn = 0;
      Vec8 fnv;
      bool improved = false;
      for (int half = 0; half < 30; ++half) {
        for (int i = 0; i < 8; ++i)
          xn[static_cast<std::size_t>(i)] =
              x[static_cast<std::size_t>(i)] + t * d[static_cast<std::size_t>(i)];
        fnv = equations(xn, v1, v2);
        fnn = max_abs(fnv);
        if (fnn < fn) {
          improved = true;
          break;
        }
        t /= 2;
      }
      if (!improved) break;
      x = xn;
      f = fnv;
      fn = fnn;
    }
    if (diverged || fn > 1e-9) continue;
    if (std::abs(x[2]) + std::abs(x[3]) <= 1e-6) continue;  // commuting with v
    Vec8 rep = canonical_rep(x);
    bool dup = false;
    for (const Vec8& g : found)
      if (same_solution(rep, g)) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(rep);
  }
  std::sort(found.begin(), found.end());
  std::vector<NCSolution> out;
  out.reserve(found.size());
  for (const Vec8& x : found) out.push_back(pack_solution(x, v1, v2));
  return out;
}

std::array<NCSolution, 4> solution_orbit(const NCSolution& sol) {
  Vec8 x = {sol.a.x1, sol.a.x2, sol.a.x3, sol.a.x4,
            sol.b.x1, sol.b.x2, sol.b.x3, sol.b.x4};
  auto vars = sign_variants(x);
  std::array<NCSolution, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = pack_solution(vars[i], sol.v1, sol.v2);
    if (out[i].residual > 1e-9)
      throw std::logic_error("a sign-symmetry variant fails the residual bound");
  }
  return out;
}

}  // namespace psmat
