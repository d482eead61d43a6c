#include "classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace psmat {

CubicRoots cubic_roots(const std::array<Rat, 4>& cubic) {
  if (rat_is_zero(cubic[0])) throw std::invalid_argument("leading cubic coefficient is zero");
  // monic, coefficients low -> high
  RatPoly p = {cubic[3] / cubic[0], cubic[2] / cubic[0], cubic[1] / cubic[0], Rat(1)};
  RatPoly g = poly_gcd(p, poly_derivative(p));
  CubicRoots out;
  std::vector<Rat> rational;  // rational roots with multiplicity
  Rat quad_b;                 // pending quadratic factor x^2 + Bx + C
  Rat quad_disc;
  bool quad_pair = false;
  if (poly_deg(g) == 2) {
    rational.assign(3, -p[2] / 3);
  } else if (poly_deg(g) == 1) {
    Rat rd = -g[0];  // g is monic linear
    rational = {rd, rd, -p[2] - rd - rd};
  } else {
    Rat root;
    if (detail::find_rational_root(p, &root)) {
      RatPoly q, rem;
      poly_divmod(p, RatPoly{-root, Rat(1)}, q, rem);
      Rat b = q[1], c = q[0];
      Rat disc = b * b - Rat(4) * c, sq;
      if (rat_is_square(disc, &sq)) {
        rational = {root, (-b - sq) / 2, (-b + sq) / 2};
      } else {
        rational = {root};
        quad_b = b;
        quad_disc = disc;
        quad_pair = true;
      }
    }
  }
  std::sort(rational.begin(), rational.end());
  if (!rational.empty()) {
    out.exact = true;
    for (const Rat& r : rational) out.exact_roots.emplace_back(r);
    if (quad_pair) {
      Field fd = make_field({-quad_disc, Rat(0), Rat(1)});
      NFElem t = nf_gen(fd);
      NFElem mb{-quad_b};
      out.exact_roots.push_back((mb - t) / NFElem(Rat(2)));
      out.exact_roots.push_back((mb + t) / NFElem(Rat(2)));
    }
  }
  // numeric roots: from the exact data when available, else root iteration
  std::vector<Cplx> num;
  if (out.exact) {
    for (const Rat& r : rational) num.emplace_back(rat_double(r), 0.0);
    if (quad_pair) {
      double b = rat_double(quad_b), d = rat_double(quad_disc);
      Cplx s = std::sqrt(Cplx(d, 0.0));
      num.push_back((-b - s) / 2.0);
      num.push_back((-b + s) / 2.0);
    }
  } else {
    std::vector<Cplx> mc(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mc[i] = rat_double(p[i]);
    num = poly_roots_numeric(mc);
  }
  std::sort(num.begin(), num.end(), [](const Cplx& x, const Cplx& y) {
    if (std::fabs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (std::size_t i = 0; i < 3; ++i) out.numeric[i] = num[i];
  return out;
}

std::array<Cplx, 3> cubic_roots_cplx(const Cplx& c2, const Cplx& c1, const Cplx& c0) {
  // depressed form y^3 + p y + q with x = y - c2/3
  Cplx p = c1 - c2 * c2 / 3.0;
  Cplx q = c2 * c2 * c2 * (2.0 / 27.0) - c2 * c1 / 3.0 + c0;
  std::array<Cplx, 3> y;
  Cplx sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // pick the sign that avoids cancellation in -q/2 +- sq
  Cplx u3 = (std::abs(-q / 2.0 + sq) >= std::abs(-q / 2.0 - sq)) ? -q / 2.0 + sq : -q / 2.0 - sq;
  if (std::abs(u3) == 0.0) {
    y = {Cplx(0), Cplx(0), Cplx(0)};  // p = q = 0: triple root
  } else {
    Cplx u = std::pow(u3, 1.0 / 3.0);
    Cplx v = -p / (3.0 * u);
    Cplx w(-0.5, std::sqrt(3.0) / 2.0);
    y = {u + v, w * u + w * w * v, w * w * u + w * v};
  }
  std::array<Cplx, 3> r;
  for (int i = 0; i < 3; ++i) {
    Cplx x = y[i] - c2 / 3.0;
    for (int it = 0; it < 12; ++it) {  // Newton polish
      Cplx f = ((x + c2) * x + c1) * x + c0;
      Cplx df = (3.0 * x + 2.0 * c2) * x + c1;
      if (std::abs(df) < 1e-14) break;
      Cplx step = f / df;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    r[i] = x;
  }
  std::sort(r.begin(), r.end(), [](const Cplx& a, const Cplx& b) {
    if (std::fabs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

}  // namespace psmat
