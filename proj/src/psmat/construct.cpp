#include "construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psmat {

namespace {

void check_assignments(const std::vector<std::array<int, 3>>& assign) {
  if (assign.empty()) throw std::invalid_argument("empty assignment list");
  for (const auto& pi : assign) {
    std::array<int, 3> s = pi;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 3>{0, 1, 2})
      throw std::invalid_argument("assignment entries must be permutations of 0,1,2");
  }
}

// coeff * sqrt(d) with d the squarefree part of the radicand
struct Radical {
  Rat coeff;
  mpz_class d;
};

Radical radical_decompose(const Rat& q) {
  if (sgn(q) < 0) throw std::domain_error("negative radicand " + rat_str(q));
  if (sgn(q) == 0) return {Rat(0), 1};
  mpz_class rem = q.get_num() * q.get_den();  // sqrt(n/d) = sqrt(n*d)/d
  mpz_class d = 1, e = 1;
  bool complete = true;
  for (unsigned long p = 2; mpz_class(p) * p <= rem; ++p) {
    if (p > 1000000ul) {
      complete = false;
      break;
    }
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    int k = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) e *= p;
    if (k % 2) d *= p;
  }
  if (rem > 1) {
    mpz_class r;
    if (complete) {
      d *= rem;  // leftover cofactor has no divisor below its square root: prime
    } else if (mpz_perfect_square_p(rem.get_mpz_t())) {
      mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
      e *= r;
    } else {
      throw std::domain_error("cannot extract the squarefree part of " + rat_str(q));
    }
  }
  return {Rat(e) / Rat(q.get_den()), d};
}

// Exact square roots of the radicands, all living in one field: Q, a quadratic
// Q(sqrt d), or Q(sqrt2 + sqrt3) = Q[t]/(t^4 - 10t^2 + 1) when two distinct
// radical types from {2, 3, 6} are needed.
std::vector<NFElem> exact_sqrts(const std::vector<Rat>& radicands) {
  std::vector<Radical> rads;
  std::vector<long> types;
  for (const Rat& q : radicands) {
    Radical r = radical_decompose(q);
    if (!(r.d == 1 || r.d == 2 || r.d == 3 || r.d == 6))
      throw std::domain_error("sqrt(" + rat_str(q) + ") has squarefree part " +
                              r.d.get_str() + " outside {1,2,3,6}; use the numeric form");
    rads.push_back(r);
    long dl = static_cast<long>(r.d.get_si());
    if (dl != 1 && std::find(types.begin(), types.end(), dl) == types.end())
      types.push_back(dl);
  }
  std::vector<NFElem> out;
  if (types.empty()) {
    for (const Radical& r : rads) out.emplace_back(r.coeff);
    return out;
  }
  if (types.size() == 1) {
    Field f = make_field({Rat(-types[0]), Rat(0), Rat(1)});
    NFElem t = nf_gen(f);
    for (const Radical& r : rads)
      out.push_back(r.d == 1 ? NFElem(f, {r.coeff}) : NFElem(r.coeff) * t);
    return out;
  }
  Field f = make_field({Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});  // t = sqrt2 + sqrt3
  const NFElem s2(f, {Rat(0), rat_of(-9, 2), Rat(0), rat_of(1, 2)});
  const NFElem s3(f, {Rat(0), rat_of(11, 2), Rat(0), rat_of(-1, 2)});
  const NFElem s6(f, {rat_of(-5, 2), Rat(0), rat_of(1, 2)});
  for (const Radical& r : rads) {
    NFElem c(f, {r.coeff});
    if (r.d == 1)
      out.push_back(c);
    else
      out.push_back(c * (r.d == 2 ? s2 : r.d == 3 ? s3 : s6));
  }
  return out;
}

Field common_field(const std::vector<NFElem>& xs) {
  for (const NFElem& x : xs)
    if (x.f) return x.f;
  return nullptr;
}

template <class K>
Mat<K> diag_of(const std::vector<K>& vals) {
  Mat<K> m = mat_zeros<K>(static_cast<int>(vals.size()), static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = vals[i];
  return m;
}

}  // namespace

SolutionTriple<NFElem> construct_generic(const Params<Rat>& params,
                                         const std::vector<std::array<int, 3>>& assign,
                                         const std::optional<Mat<Rat>>& p) {
  check_assignments(assign);
  Analysis<Rat> an = analyze(params);
  if (rat_is_zero(an.dis))
    throw std::domain_error("the cubic has repeated roots; the diagonalizable family does not apply");
  CubicRoots cr = cubic_roots(an.r);
  if (!cr.exact)
    throw std::domain_error(
        "the cubic does not split over the rationals or a quadratic extension; use the numeric form");
  Field f = common_field(cr.exact_roots);
  std::vector<NFElem> roots = cr.exact_roots;
  if (f)
    for (NFElem& r : roots)
      if (!r.f) r = NFElem(f, r.c);
  int n = static_cast<int>(assign.size());
  SolutionTriple<NFElem> out;
  std::vector<NFElem> va, vb, vc;
  for (const auto& pi : assign) {
    va.push_back(roots[pi[0]]);
    vb.push_back(roots[pi[1]]);
    vc.push_back(roots[pi[2]]);
  }
  out.a = diag_of(va);
  out.b = diag_of(vb);
  out.c = diag_of(vc);
  if (p) {
    if (p->nr != n || p->nc != n) throw std::invalid_argument("conjugator size mismatch");
    Mat<NFElem> pl = mat_lift(*p, f);
    out.a = conjugate(pl, out.a);
    out.b = conjugate(pl, out.b);
    out.c = conjugate(pl, out.c);
  }
  out.params = {NFElem(params.alpha), NFElem(params.beta), NFElem(params.gamma)};
  out.kind = "generic";
  out.tag = an.tag;
  return out;
}

SolutionTriple<Cplx> construct_generic_numeric(const Params<Rat>& params,
                                               const std::vector<std::array<int, 3>>& assign,
                                               const std::optional<Mat<Rat>>& p) {
  check_assignments(assign);
  Analysis<Rat> an = analyze(params);
  if (rat_is_zero(an.dis))
    throw std::domain_error("the cubic has repeated roots; the diagonalizable family does not apply");
  CubicRoots cr = cubic_roots(an.r);
  int n = static_cast<int>(assign.size());
  SolutionTriple<Cplx> out;
  std::vector<Cplx> va, vb, vc;
  for (const auto& pi : assign) {
    va.push_back(cr.numeric[pi[0]]);
    vb.push_back(cr.numeric[pi[1]]);
    vc.push_back(cr.numeric[pi[2]]);
  }
  out.a = diag_of(va);
  out.b = diag_of(vb);
  out.c = diag_of(vc);
  if (p) {
    if (p->nr != n || p->nc != n) throw std::invalid_argument("conjugator size mismatch");
    Mat<Cplx> pl = mat_cplx_of(mat_double_of(*p));
    out.a = conjugate(pl, out.a);
    out.b = conjugate(pl, out.b);
    out.c = conjugate(pl, out.c);
  }
  out.params = {Cplx(rat_double(params.alpha)), Cplx(rat_double(params.beta)),
                Cplx(rat_double(params.gamma))};
  out.kind = "generic";
  out.tag = an.tag;
  return out;
}

SolutionTriple<Rat> construct_theorem2(const Theorem2Shape& shape) {
  if (shape.phi < 0 || shape.psi < 0 || shape.theta < 0)
    throw std::invalid_argument("negative block size");
  int n = shape.phi + shape.psi + shape.theta;
  if (n < 1) throw std::invalid_argument("empty shape");
  auto check_block = [](const Mat<Rat>& m, int size, const char* name) {
    if (m.nr != size || m.nc != size)
      throw std::invalid_argument(std::string(name) + " block has the wrong size");
    if (!mat_is_zero(m * m))
      throw std::invalid_argument(std::string(name) + " is a nilpotent block with nonzero square");
  };
  check_block(shape.alphaN, shape.psi, "alphaN");
  check_block(shape.betaN, shape.theta, "betaN");
  check_block(shape.gammaN, shape.phi, "gammaN");
  SolutionTriple<Rat> out;
  out.a = block_diag<Rat>({mat_eye<Rat>(shape.phi), shape.alphaN, shape.betaN});
  out.b = block_diag<Rat>({shape.gammaN, mat_eye<Rat>(shape.psi), -shape.betaN});
  out.c = block_diag<Rat>({-shape.gammaN, -shape.alphaN, mat_eye<Rat>(shape.theta)});
  out.params = {Rat(1), Rat(1), Rat(1)};
  out.kind = "theorem2";
  out.tag = analyze(out.params).tag;
  return out;
}

namespace {

void check_theorem3_shape(const Theorem3Shape& shape) {
  if (shape.m < 0 || shape.m % 2 != 0) throw std::invalid_argument("the E dimension must be even");
  if (shape.m + static_cast<int>(shape.f_assign.size()) < 1)
    throw std::invalid_argument("empty shape");
  for (const auto& pi : shape.f_assign) {
    std::array<int, 3> s = pi;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 3>{0, 1, 2})
      throw std::invalid_argument("F assignments must be permutations of 0,1,2");
  }
  if (shape.conjugator) {
    int n = shape.m + static_cast<int>(shape.f_assign.size());
    if (shape.conjugator->nr != n || shape.conjugator->nc != n)
      throw std::invalid_argument("conjugator size mismatch");
  }
}

// E block pattern from a pair of scalar square roots ha = sqrt(sigma/3),
// hb = sqrt(sigma): A = ha*diag(1,-1) (x) I, B = [[-ha/2, hb/2],[hb/2, ha/2]] (x) I.
template <class K>
void theorem3_blocks(const K& ha, const K& hb, const K& s, const Theorem3Shape& shape,
                     Mat<K>& a, Mat<K>& b, Mat<K>& c) {
  std::vector<Mat<K>> pa, pb, pc;
  K two = K(1) + K(1);
  if (shape.m > 0) {
    Mat<K> a2 = mat_zeros<K>(2, 2), b2 = mat_zeros<K>(2, 2);
    a2.at(0, 0) = ha;
    a2.at(1, 1) = K(0) - ha;
    b2.at(0, 0) = K(0) - ha / two;
    b2.at(0, 1) = hb / two;
    b2.at(1, 0) = hb / two;
    b2.at(1, 1) = ha / two;
    Mat<K> im = mat_eye<K>(shape.m / 2);
    pa.push_back(kron(a2, im));
    pb.push_back(kron(b2, im));
    pc.push_back(-(pa.back() + pb.back()));
  }
  if (!shape.f_assign.empty()) {
    std::array<K, 3> vals = {K(0), s, K(0) - s};
    std::vector<K> da, db, dc;
    for (const auto& pi : shape.f_assign) {
      da.push_back(vals[pi[0]]);
      db.push_back(vals[pi[1]]);
      dc.push_back(vals[pi[2]]);
    }
    pa.push_back(diag_of(da));
    pb.push_back(diag_of(db));
    pc.push_back(diag_of(dc));
  }
  a = block_diag(pa);
  b = block_diag(pb);
  c = block_diag(pc);
}

}  // namespace

SolutionTriple<NFElem> construct_theorem3(const Theorem3Shape& shape) {
  check_theorem3_shape(shape);
  if (sgn(shape.sigma) < 0)
    throw std::domain_error("sigma must be nonnegative in the exact form");
  // only request the radicals the shape actually uses, so e.g. a pure F part
  // with sigma = 2k^2 stays rational
  std::vector<Rat> radicands;
  if (shape.m > 0) {
    radicands.push_back(shape.sigma / 3);
    radicands.push_back(shape.sigma);
  }
  if (!shape.f_assign.empty()) radicands.push_back(shape.sigma / 2);
  std::vector<NFElem> roots = exact_sqrts(radicands);
  Field f = common_field(roots);
  for (NFElem& r : roots)
    if (f && !r.f) r = NFElem(f, r.c);
  NFElem ha(Rat(0)), hb(Rat(0)), s(Rat(0));
  std::size_t k = 0;
  if (shape.m > 0) {
    ha = roots[k++];
    hb = roots[k++];
  }
  if (!shape.f_assign.empty()) s = roots[k++];
  SolutionTriple<NFElem> out;
  theorem3_blocks(ha, hb, s, shape, out.a, out.b, out.c);
  if (shape.conjugator) {
    Mat<NFElem> pl = mat_lift(*shape.conjugator, f);
    out.a = conjugate(pl, out.a);
    out.b = conjugate(pl, out.b);
    out.c = conjugate(pl, out.c);
  }
  out.params = {NFElem(Rat(0)), NFElem(shape.sigma), NFElem(Rat(0))};
  out.kind = "theorem3";
  out.tag = analyze(Params<Rat>{Rat(0), shape.sigma, Rat(0)}).tag;
  return out;
}

SolutionTriple<double> construct_theorem3_numeric(const Theorem3Shape& shape) {
  check_theorem3_shape(shape);
  double sg = rat_double(shape.sigma);
  if (sg < 0) throw std::domain_error("sigma must be nonnegative");
  double ha = std::sqrt(sg / 3), hb = std::sqrt(sg), s = std::sqrt(sg / 2);
  SolutionTriple<double> out;
  theorem3_blocks(ha, hb, s, shape, out.a, out.b, out.c);
  if (shape.conjugator) {
    Mat<double> pl = mat_double_of(*shape.conjugator);
    out.a = conjugate(pl, out.a);
    out.b = conjugate(pl, out.b);
    out.c = conjugate(pl, out.c);
  }
  out.params = {0.0, sg, 0.0};
  out.kind = "theorem3";
  out.tag = analyze(Params<Rat>{Rat(0), shape.sigma, Rat(0)}).tag;
  return out;
}

SolutionTriple<Rat> construct_nilpotent_n2(const Rat& x, const Rat& y) {
  Mat<Rat> j = mat_jordan<Rat>(2);
  SolutionTriple<Rat> out;
  out.a = x * j;
  out.b = y * j;
  out.c = -(out.a + out.b);
  out.params = {Rat(0), Rat(0), Rat(0)};
  out.kind = "nilpotent-n2";
  out.tag = CaseTag::Nilpotent;
  return out;
}

SolutionTriple<Rat> construct_nilpotent_n3(const Rat& x, const Rat& y) {
  if (x == rat_of(-1, 2)) throw std::domain_error("x = -1/2 is excluded");
  if (rat_is_zero(x * x + x + 1)) throw std::domain_error("x^2 + x + 1 = 0 is excluded");
  SolutionTriple<Rat> out;
  out.a = mat_jordan<Rat>(3);
  out.b = mat_zeros<Rat>(3, 3);
  out.b.at(0, 1) = x;
  out.b.at(0, 2) = y;
  out.b.at(1, 2) = (Rat(-2) - x) / (Rat(2) * x + 1);
  out.c = -(out.a + out.b);
  out.params = {Rat(0), Rat(0), Rat(0)};
  out.kind = "nilpotent-n3";
  out.tag = CaseTag::Nilpotent;
  return out;
}

SolutionTriple<Rat> construct_nilpotent_n9() {
  SolutionTriple<Rat> out;
  out.a = block_diag<Rat>({mat_jordan<Rat>(5), mat_jordan<Rat>(3), mat_zeros<Rat>(1, 1)});
  out.b = mat_zeros<Rat>(9, 9);
  auto set = [&](int i, int j, long num, long den) { out.b.at(i, j) = rat_of(num, den); };
  set(0, 1, -1, 2);
  set(0, 5, 3, 4);
  set(1, 2, -1, 2);
  set(1, 6, -9, 4);
  set(1, 8, 1, 1);
  set(2, 3, -1, 2);
  set(2, 7, 3, 4);
  set(3, 4, -1, 2);
  set(5, 2, -1, 1);
  set(5, 6, -1, 2);
  set(6, 3, 3, 1);
  set(6, 7, -1, 2);
  set(7, 4, -1, 1);
  set(8, 3, 6, 1);
  out.c = -(out.a + out.b);
  out.params = {Rat(0), Rat(0), Rat(0)};
  out.kind = "nilpotent-n9";
  out.tag = CaseTag::Nilpotent;
  return out;
}

namespace {

template <class K>
void real_even_blocks(const K& u, const K& v, const K& w, int m, Mat<K>& a, Mat<K>& b,
                      Mat<K>& c) {
  Mat<K> ba = mat_zeros<K>(2, 2), bb = mat_zeros<K>(2, 2), bc = mat_zeros<K>(2, 2);
  ba.at(0, 0) = u;
  ba.at(1, 1) = u;
  bb.at(0, 0) = v;
  bb.at(0, 1) = w;
  bb.at(1, 0) = K(0) - w;
  bb.at(1, 1) = v;
  bc.at(0, 0) = v;
  bc.at(0, 1) = K(0) - w;
  bc.at(1, 0) = w;
  bc.at(1, 1) = v;
  Mat<K> im = mat_eye<K>(m);
  a = kron(ba, im);
  b = kron(bb, im);
  c = kron(bc, im);
}

}  // namespace

SolutionTriple<Rat> construct_real_even(const Rat& u, const Rat& v, const Rat& w, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (rat_is_zero(w)) throw std::domain_error("w = 0 means three real roots; this family does not apply");
  SolutionTriple<Rat> out;
  real_even_blocks(u, v, w, m, out.a, out.b, out.c);
  Rat alpha = u + 2 * v;
  Rat beta = u * u + 2 * (v * v - w * w);
  Rat gamma = u * u * u + 2 * (v * v * v - 3 * v * w * w);
  out.params = {alpha, beta, gamma};
  out.kind = "real-even";
  out.tag = analyze(out.params).tag;
  return out;
}

SolutionTriple<double> construct_real_even_params(const Params<Rat>& params, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  Analysis<Rat> an = analyze(params);
  CubicRoots cr = cubic_roots(an.r);
  std::vector<Cplx> complex_pair;
  std::vector<double> real_roots;
  for (const Cplx& r : cr.numeric) {
    if (std::fabs(r.imag()) <= 1e-9)
      real_roots.push_back(r.real());
    else
      complex_pair.push_back(r);
  }
  if (complex_pair.size() != 2)
    throw std::domain_error("the cubic has three real roots; the even-size real family does not apply");
  double u = real_roots[0];
  double v = complex_pair[0].real();
  double w = std::fabs(complex_pair[0].imag());
  SolutionTriple<double> out;
  real_even_blocks(u, v, w, m, out.a, out.b, out.c);
  out.params = {rat_double(params.alpha), rat_double(params.beta), rat_double(params.gamma)};
  out.kind = "real-even";
  out.tag = an.tag;
  return out;
}

USolveResult solve_in_U(const Mat<double>& rhs1, const Mat<double>& rhs2,
                        const Mat<double>& rhs3) {
  std::array<Mat<double>, 3> rhs = {rhs1, rhs2, rhs3};
  USolveResult out;
  for (int k = 0; k < 3; ++k) {
    const Mat<double>& m = rhs[k];
    if (m.nr != 2 || m.nc != 2) throw std::invalid_argument("right-hand sides must be 2x2");
    double tol = 1e-9 * std::max(1.0, mat_max_abs(m));
    if (std::fabs(m.at(0, 0) - m.at(1, 1)) > tol || std::fabs(m.at(0, 1) + m.at(1, 0)) > tol)
      throw std::invalid_argument("right-hand side " + std::to_string(k + 1) +
                                  " is not of the form (y z; -z y)");
    out.rhs_values[k] = Cplx(m.at(0, 0), m.at(0, 1));
  }
  out.rhs = rhs;
  std::array<Cplx, 4> cubic =
      power_sums_to_cubic(out.rhs_values[0], out.rhs_values[1], out.rhs_values[2]);
  out.roots = cubic_roots_cplx(cubic[1], cubic[2], cubic[3]);
  auto to_u = [](const Cplx& z) {
    Mat<double> m = mat_zeros<double>(2, 2);
    m.at(0, 0) = z.real();
    m.at(1, 1) = z.real();
    m.at(0, 1) = z.imag();
    m.at(1, 0) = -z.imag();
    return m;
  };
  out.a = to_u(out.roots[0]);
  out.b = to_u(out.roots[1]);
  out.c = to_u(out.roots[2]);
  return out;
}

SolutionQuad<Rat> construct_sigma_generic(const Rat& u, const Rat& v, const Rat& w,
                                          const std::optional<Mat<Rat>>& p) {
  Rat disc1 = u * u - 4 * v, disc2 = u * u - 4 * w;
  Rat s1, s2;
  if (!rat_is_square(disc1, &s1) || !rat_is_square(disc2, &s2))
    throw std::domain_error("a quadratic factor does not split over the rationals; use the numeric form");
  Rat r1 = (-u - s1) / 2, r2 = (-u + s1) / 2;
  Rat r3 = (u - s2) / 2, r4 = (u + s2) / 2;
  Mat<Rat> da = diag_of<Rat>({r1, r2}), dc = diag_of<Rat>({r2, r1});
  Mat<Rat> db = diag_of<Rat>({r3, r4}), dd = diag_of<Rat>({r4, r3});
  SolutionQuad<Rat> out;
  out.a = da;
  out.c = dc;
  if (p) {
    if (p->nr != 2 || p->nc != 2) throw std::invalid_argument("conjugator must be 2x2");
    Mat<Rat> pinv = mat_inverse(*p);
    out.b = pinv * db * *p;
    out.d = pinv * dd * *p;
  } else {
    out.b = db;
    out.d = dd;
  }
  for (int k = 1; k <= 4; ++k)
    out.alphas[k - 1] = rat_pow(r1, k) + rat_pow(r2, k) + rat_pow(r3, k) + rat_pow(r4, k);
  out.kind = "sigma-generic";
  return out;
}

SolutionQuad<Cplx> construct_sigma_generic_numeric(const Rat& u, const Rat& v, const Rat& w,
                                                   const std::optional<Mat<Rat>>& p) {
  Cplx uc(rat_double(u)), vc(rat_double(v)), wc(rat_double(w));
  Cplx s1 = std::sqrt(uc * uc - 4.0 * vc), s2 = std::sqrt(uc * uc - 4.0 * wc);
  Cplx r1 = (-uc - s1) / 2.0, r2 = (-uc + s1) / 2.0;
  Cplx r3 = (uc - s2) / 2.0, r4 = (uc + s2) / 2.0;
  SolutionQuad<Cplx> out;
  out.a = diag_of<Cplx>({r1, r2});
  out.c = diag_of<Cplx>({r2, r1});
  Mat<Cplx> db = diag_of<Cplx>({r3, r4}), dd = diag_of<Cplx>({r4, r3});
  if (p) {
    if (p->nr != 2 || p->nc != 2) throw std::invalid_argument("conjugator must be 2x2");
    Mat<Cplx> pc = mat_cplx_of(mat_double_of(*p));
    Mat<Cplx> pinv = mat_inverse(pc);
    out.b = pinv * db * pc;
    out.d = pinv * dd * pc;
  } else {
    out.b = db;
    out.d = dd;
  }
  for (int k = 1; k <= 4; ++k) {
    Cplx s = 0;
    for (const Cplx& r : {r1, r2, r3, r4}) s += std::pow(r, k);
    out.alphas[k - 1] = s;
  }
  out.kind = "sigma-generic";
  return out;
}

SolutionQuad<NFElem> construct_sigma_pattern2() {
  Field f = make_field({Rat(1), Rat(1), Rat(1)});  // j^2 + j + 1 = 0
  NFElem j = nf_gen(f);
  NFElem j2 = j * j;
  NFElem half(f, {rat_of(1, 2)});
  NFElem one(f, {Rat(1)});
  SolutionQuad<NFElem> out;
  out.a = mat_zeros<NFElem>(2, 2);
  out.a.at(0, 0) = one;
  out.a.at(1, 1) = NFElem(Rat(0)) - one;
  out.b = mat_zeros<NFElem>(2, 2);
  out.b.at(0, 0) = NFElem(Rat(0)) - j2 * half;
  out.b.at(0, 1) = (j - one) * half;
  out.b.at(1, 0) = (one - j) * half;
  out.b.at(1, 1) = j2 * half;
  // c = b with j -> j^2 (the nontrivial automorphism of Q(j))
  out.c = mat_zeros<NFElem>(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int l = 0; l < 2; ++l) out.c.at(i, l) = nf_subst(out.b.at(i, l), j2);
  out.d = mat_lift(mat_rat(2, 2, {0, 0, 0, 0}), f);
  out.d.at(0, 0) = NFElem(f, {rat_of(-3, 2)});
  out.d.at(0, 1) = NFElem(f, {rat_of(3, 2)});
  out.d.at(1, 0) = NFElem(f, {rat_of(-3, 2)});
  out.d.at(1, 1) = NFElem(f, {rat_of(3, 2)});
  for (auto& al : out.alphas) al = NFElem(f, {Rat(0)});
  out.kind = "sigma-pattern2";
  return out;
}

SolutionQuad<NFElem> construct_sigma_nonnilpotent() {
  SolutionQuad<NFElem> p = construct_sigma_pattern2();
  SolutionQuad<NFElem> out;
  // cyclic role shift in the second block so every slot holds a non-nilpotent part
  out.a = block_diag<NFElem>({p.a, p.b});
  out.b = block_diag<NFElem>({p.b, p.c});
  out.c = block_diag<NFElem>({p.c, p.d});
  out.d = block_diag<NFElem>({p.d, p.a});
  out.alphas = p.alphas;
  out.kind = "sigma-nonnilpotent";
  return out;
}

SolutionPair<Rat> construct_tsys(int m, const Mat<Rat>& z, const Mat<Rat>& q) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (z.nr != m || z.nc != m || q.nr != m || q.nc != m)
    throw std::invalid_argument("z and q must be m x m");
  if (!mat_is_zero(z * q) || !mat_is_zero(q * z))
    throw std::invalid_argument("z and q must satisfy zq = qz = 0");
  SolutionPair<Rat> out;
  out.a = mat_zeros<Rat>(2 * m, 2 * m);
  out.b = mat_zeros<Rat>(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    out.a.at(i, m + i) = Rat(1);
    out.b.at(m + i, i) = Rat(1);
    for (int l = 0; l < m; ++l) {
      out.a.at(m + i, l) = z.at(i, l);
      out.b.at(i, m + l) = q.at(i, l);
    }
  }
  out.kind = "tsys";
  return out;
}

TsysCanon canonicalize_tsys(const Mat<Rat>& a, const Mat<Rat>& b) {
  if (a.nr != a.nc || b.nr != a.nr || b.nc != a.nr)
    throw std::invalid_argument("the pair must be square of equal size");
  int n = a.nr;
  if (n % 2 != 0) throw std::domain_error("no solution exists in odd size");
  if (!mat_is_zero(a * b + b * a - mat_eye<Rat>(n)))
    throw std::domain_error("ab + ba differs from the identity");
  if (!mat_is_zero(b * a * a * b)) throw std::domain_error("b a^2 b is nonzero");
  int m = n / 2;
  Mat<Rat> pr = a * b;  // projector of rank n/2 once the pair solves the system
  Echelon<Rat> colspace = reduced_echelon(mat_transpose(pr));
  std::vector<Mat<Rat>> kern = kernel_basis(pr);
  if (colspace.rank != m || static_cast<int>(kern.size()) != m)
    throw std::domain_error("ab is not a projector of rank n/2");
  Mat<Rat> s = mat_zeros<Rat>(n, n);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      s.at(i, j) = colspace.rre.at(j, i);
      s.at(i, m + j) = kern[j].at(i, 0);
    }
  Mat<Rat> sinv = mat_inverse(s);
  Mat<Rat> ap = sinv * a * s, bp = sinv * b * s;
  auto blk = [m](const Mat<Rat>& x, int bi, int bj) {
    Mat<Rat> r = mat_zeros<Rat>(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) r.at(i, j) = x.at(bi * m + i, bj * m + j);
    return r;
  };
  if (!mat_is_zero(blk(ap, 0, 0)) || !mat_is_zero(blk(ap, 1, 1)) || !mat_is_zero(blk(bp, 0, 0)) ||
      !mat_is_zero(blk(bp, 1, 1)))
    throw std::logic_error("conjugated pair is not anti-block-diagonal");
  Mat<Rat> y = blk(ap, 0, 1), z0 = blk(ap, 1, 0);
  Mat<Rat> q0 = blk(bp, 0, 1), w = blk(bp, 1, 0);
  if (!(y * w == mat_eye<Rat>(m)) || !(w * y == mat_eye<Rat>(m)))
    throw std::logic_error("off-diagonal blocks are not mutually inverse");
  TsysCanon out;
  out.m = m;
  out.z = z0 * y;
  out.q = w * q0;
  Mat<Rat> t = block_diag<Rat>({y, mat_eye<Rat>(m)});
  out.change_of_basis = s * t;
  SolutionPair<Rat> target = construct_tsys(m, out.z, out.q);
  Mat<Rat> cinv = mat_inverse(out.change_of_basis);
  if (!(cinv * a * out.change_of_basis == target.a) ||
      !(cinv * b * out.change_of_basis == target.b))
    throw std::logic_error("change of basis failed to reach the canonical pair");
  return out;
}

SolutionTriple<Cplx> triple_embed(const SolutionTriple<NFElem>& t, int root_choice) {
  SolutionTriple<Cplx> out;
  out.a = mat_embed(t.a, root_choice);
  out.b = mat_embed(t.b, root_choice);
  out.c = mat_embed(t.c, root_choice);
  out.params = {embed_complex(t.params.alpha, root_choice),
                embed_complex(t.params.beta, root_choice),
                embed_complex(t.params.gamma, root_choice)};
  out.kind = t.kind;
  out.tag = t.tag;
  return out;
}

SolutionTriple<double> triple_double(const SolutionTriple<Rat>& t) {
  SolutionTriple<double> out;
  out.a = mat_double_of(t.a);
  out.b = mat_double_of(t.b);
  out.c = mat_double_of(t.c);
  out.params = {rat_double(t.params.alpha), rat_double(t.params.beta),
                rat_double(t.params.gamma)};
  out.kind = t.kind;
  out.tag = t.tag;
  return out;
}

}  // namespace psmat
