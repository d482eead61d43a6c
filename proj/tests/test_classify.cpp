#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/classify.hpp"

using namespace psmat;

namespace {
Params<Rat> P(long a, long b, long g) { return {Rat(a), Rat(b), Rat(g)}; }
}

TEST_CASE("the four cases land where they should") {
  CHECK(analyze(P(1, 1, 1)).tag == CaseTag::MultipleRoot);
  CHECK(analyze(P(0, 0, 0)).tag == CaseTag::Nilpotent);
  CHECK(analyze(P(0, 2, 0)).tag == CaseTag::HalfSum);
  // roots 0, 1, 5: no root is the average of the other two
  CHECK(analyze(P(6, 26, 126)).tag == CaseTag::Generic);
  // roots 0, 1, 2: the middle root is the average of its neighbors
  CHECK(analyze(P(3, 5, 9)).tag == CaseTag::HalfSum);
  CHECK(analyze(P(1, 1, 1)).delta == 2);
  CHECK(analyze(P(1, 1, 1)).dis == 0);
  CHECK(analyze(P(0, 2, 0)).delta == 0);
  CHECK(analyze(P(0, 2, 0)).dis == 24);
}

TEST_CASE("half-sum means delta vanishes without a repeated root") {
  Analysis<Rat> an = analyze(P(0, 2, 0));
  // r(x) = 6x^3 - 6x = 6x(x-1)(x+1)
  CHECK(an.r == std::array<Rat, 4>{Rat(6), Rat(0), Rat(-6), Rat(0)});
  CHECK(an.delta == 0);
  CHECK(an.dis != 0);
}

TEST_CASE("power sums convert to elementary-symmetric coefficients") {
  // roots 1, 2, 3: p1 = 6, p2 = 14, p3 = 36
  auto c = power_sums_to_cubic<Rat>(Rat(6), Rat(14), Rat(36));
  CHECK(c == std::array<Rat, 4>{Rat(1), Rat(-6), Rat(11), Rat(-6)});
}

TEST_CASE("exact cubic roots over Q") {
  Analysis<Rat> an = analyze(P(0, 2, 0));
  CubicRoots cr = cubic_roots(an.r);
  REQUIRE(cr.exact);
  REQUIRE(cr.exact_roots.size() == 3);
  CHECK(cr.exact_roots[0] == NFElem(Rat(-1)));
  CHECK(cr.exact_roots[1] == NFElem(Rat(0)));
  CHECK(cr.exact_roots[2] == NFElem(Rat(1)));
}

TEST_CASE("exact cubic roots needing a quadratic extension") {
  // r has roots 0, ±sqrt(2): power sums (0, 4, 0)
  Analysis<Rat> an = analyze(P(0, 4, 0));
  CubicRoots cr = cubic_roots(an.r);
  REQUIRE(cr.exact);
  // rational roots come first, then the conjugate pair
  CHECK(cr.exact_roots[0] == NFElem(Rat(0)));
  NFElem s = cr.exact_roots[2];
  CHECK(s * s == NFElem(Rat(2)));
  CHECK(cr.exact_roots[1] == -s);
}

TEST_CASE("irreducible cubics fall back to numeric roots") {
  // x^3 - 2 up to scaling: power sums via roots of 6x^3 - 12 = 0
  Analysis<Rat> an = analyze(P(0, 0, 6));
  CubicRoots cr = cubic_roots(an.r);
  CHECK_FALSE(cr.exact);
  double cbrt2 = std::cbrt(2.0);
  bool found = false;
  for (const Cplx& z : cr.numeric)
    if (std::abs(z - Cplx(cbrt2, 0)) < 1e-9) found = true;
  CHECK(found);
}

TEST_CASE("numeric roots handle repeated roots exactly enough") {
  auto roots = cubic_roots_cplx(Cplx(-3, 0), Cplx(3, 0), Cplx(-1, 0));  // (x-1)^3
  for (const Cplx& z : roots) CHECK(std::abs(z - Cplx(1, 0)) < 1e-7);
}

TEST_CASE("multiple-root normalization hits the star parameters") {
  Params<Rat> p = P(1, 1, 1);
  Normalization nm = normalize_multiple_root(p);
  // the normalized parameters solve the same system shape with (0, s, 1)
  CHECK(nm.star.alpha == NFElem(Rat(0)));
  CHECK(nm.star.gamma == NFElem(Rat(1)));
  NFElem s = nm.star.beta;
  CHECK(s * s * s == NFElem(Rat(6)));
  CHECK_FALSE(nf_is_zero(nm.h));
  CHECK(nm.shift == NFElem(Rat(1)) / NFElem(Rat(3)));
  CHECK_THROWS_AS(normalize_multiple_root(P(0, 2, 0)), std::domain_error);
  CHECK_THROWS_AS(normalize_multiple_root(P(0, 0, 0)), std::domain_error);
}

TEST_CASE("analysis works over a number field") {
  Field f = make_field({-2, 0, 1});
  NFElem s = nf_gen(f);
  Params<NFElem> p{s, NFElem(Rat(2)), s};  // alpha = gamma = sqrt2, beta = 2
  Analysis<NFElem> an = analyze(p);
  CHECK(an.dis == NFElem(Rat(3)) * (an.sigma * an.sigma * an.sigma -
                                    NFElem(Rat(6)) * an.tau * an.tau));
}

TEST_CASE("delta vanishes exactly when some root averages the other two") {
  // a root equal to the average of the remaining pair is a root at alpha/3
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long g = -3; g <= 3; ++g) {
        Analysis<Rat> an = analyze(P(a, b, g));
        Rat third = an.params.alpha / 3;
        Rat val = an.r[0] * rat_pow(third, 3) + an.r[1] * rat_pow(third, 2) +
                  an.r[2] * third + an.r[3];
        CHECK((an.delta == 0) == (val == 0));
      }
}
