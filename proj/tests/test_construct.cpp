#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/construct.hpp"
#include "psmat/verify.hpp"

using namespace psmat;

namespace {
Params<Rat> P(long a, long b, long g) { return {Rat(a), Rat(b), Rat(g)}; }

template <class K>
bool commute(const Mat<K>& x, const Mat<K>& y) {
  return mat_is_zero(x * y - y * x);
}
}

TEST_CASE("diagonal solutions from split cubics") {
  auto t = construct_generic(P(0, 2, 0), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(t.a.nr == 3);
  CHECK(check_system(t).pass);
  CHECK(commute(t.a, t.b));

  // quadratic-extension roots
  auto q = construct_generic(P(0, 4, 0), {{0, 1, 2}, {2, 1, 0}});
  CHECK(check_system(q).pass);

  // conjugated variant is still a solution but no longer diagonal
  Mat<Rat> p = mat_rat(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  auto tc = construct_generic(P(0, 2, 0), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, p);
  CHECK(check_system(tc).pass);
  CHECK(tc.a != t.a);
}

TEST_CASE("generic constructor enforces its preconditions") {
  CHECK_THROWS(construct_generic(P(1, 1, 1), {{0, 1, 2}}));            // repeated root
  CHECK_THROWS(construct_generic(P(0, 0, 6), {{0, 1, 2}}));            // no exact splitting
  CHECK_THROWS(construct_generic(P(0, 2, 0), {{0, 0, 2}}));            // not a permutation
  CHECK_THROWS(construct_generic(P(0, 2, 0), {}));                     // empty assignment
  CHECK(check_system(construct_generic_numeric(P(0, 0, 6), {{0, 1, 2}, {1, 0, 2}})).pass);
}

TEST_CASE("unit-parameter block family") {
  for (int phi = 0; phi <= 2; ++phi)
    for (int psi = 0; psi <= 2; ++psi)
      for (int theta = 0; theta <= 2; ++theta) {
        if (phi + psi + theta == 0) continue;
        Theorem2Shape sh;
        sh.phi = phi;
        sh.psi = psi;
        sh.theta = theta;
        sh.alphaN = psi == 2 ? mat_jordan<Rat>(2) : mat_zeros<Rat>(psi, psi);
        sh.betaN = mat_zeros<Rat>(theta, theta);
        sh.gammaN = phi == 2 ? mat_jordan<Rat>(2) : mat_zeros<Rat>(phi, phi);
        auto t = construct_theorem2(sh);
        CHECK(t.params.alpha == 1);
        CHECK(check_system(t).pass);
        CHECK(commute(t.a, t.b));
        CHECK(commute(t.b, t.c));
        CHECK(commute(t.a, t.c));
        Mat<Rat> sq = t.a * t.a + t.b * t.b + t.c * t.c;
        CHECK(sq == mat_eye<Rat>(t.a.nr));
        CHECK(is_projector(t.a * t.a));
        CHECK(is_projector(t.b * t.b));
        CHECK(is_projector(t.c * t.c));
      }
  Theorem2Shape bad;
  bad.phi = 1;
  bad.alphaN = mat_rat(1, 1, {1});  // square not zero
  bad.psi = 1;
  CHECK_THROWS(construct_theorem2(bad));
}

TEST_CASE("noncommuting witness for sigma = 3") {
  Theorem3Shape sh;
  sh.m = 2;
  sh.sigma = 3;
  auto t = construct_theorem3(sh);
  CHECK(check_system(t).pass);
  Mat<NFElem> comm = t.a * t.b - t.b * t.a;
  CHECK(comm * comm == NFElem(Rat(-3)) * mat_eye<NFElem>(2));
  CHECK_FALSE(commute(t.a, t.b));
  auto verdict = commutator_nilpotency(t);
  CHECK_FALSE(verdict.is_nilpotent);
}

TEST_CASE("mixed block-plus-diagonal family up to size six") {
  for (int m = 0; m <= 4; m += 2) {
    for (int fcols = 0; fcols <= 2; ++fcols) {
      if (m + fcols == 0) continue;
      Theorem3Shape sh;
      sh.m = m;
      sh.sigma = 6;
      for (int i = 0; i < fcols; ++i)
        sh.f_assign.push_back(i % 2 ? std::array<int, 3>{1, 2, 0} : std::array<int, 3>{0, 1, 2});
      auto t = construct_theorem3(sh);
      CHECK(t.a.nr == m + fcols);
      CHECK(check_system(t).pass);
    }
  }
  // numeric variant accepts sigma whose radicals are not quadratic-friendly
  Theorem3Shape sh;
  sh.m = 2;
  sh.sigma = 5;
  CHECK_THROWS(construct_theorem3(sh));
  CHECK(check_system(construct_theorem3_numeric(sh)).pass);
  sh.m = 3;
  sh.sigma = 3;
  CHECK_THROWS(construct_theorem3(sh));  // odd block dimension
}

TEST_CASE("nilpotent families") {
  auto n2 = construct_nilpotent_n2(Rat(2), Rat(-3));
  CHECK(check_system(n2).pass);
  CHECK(n2.params.alpha == 0);
  CHECK(nilpotency_index(n2.a) == 2);

  auto n3 = construct_nilpotent_n3(Rat(1), Rat(1));
  CHECK(check_system(n3).pass);
  CHECK(nilpotency_index(n3.a * n3.b).has_value());

  auto n9 = construct_nilpotent_n9();
  CHECK(n9.a.nr == 9);
  CHECK(check_system(n9).pass);
  CHECK(nilpotent_jordan_type(n9.a) == std::vector<int>{5, 3, 1});
  CHECK_FALSE(mat_is_zero(mat_pow(n9.a, 4)));
}

TEST_CASE("even-size real solutions from one real root and a complex pair") {
  auto t = construct_real_even(Rat(2), Rat(-1), Rat(3), 1);
  CHECK(t.a.nr == 2);
  CHECK(check_system(t).pass);
  auto big = construct_real_even(Rat(1) / 2, Rat(1), Rat(1), 2);
  CHECK(big.a.nr == 4);
  CHECK(check_system(big).pass);
  CHECK_THROWS(construct_real_even(Rat(1), Rat(1), Rat(0), 1));  // w = 0 is not a complex pair

  auto num = construct_real_even_params(P(1, 2, 3), 1);
  CHECK(check_system(num).pass);
  // three real roots have no complex pair to build from
  CHECK_THROWS(construct_real_even_params(P(0, 2, 0), 1));
}

TEST_CASE("solving with prescribed commuting right-hand sides") {
  auto u = [](double y, double z) {
    Mat<double> m = mat_zeros<double>(2, 2);
    m.at(0, 0) = y;
    m.at(0, 1) = z;
    m.at(1, 0) = -z;
    m.at(1, 1) = y;
    return m;
  };
  USolveResult r = solve_in_U(u(1, 2), u(0.5, -1), u(3, 0.25));
  CHECK(check_system_rhs(r.a, r.b, r.c, r.rhs).pass);
  Mat<double> bad = mat_zeros<double>(2, 2);
  bad.at(0, 1) = 1;  // not of the (y, z; -z, y) shape
  CHECK_THROWS(solve_in_U(bad, u(0, 0), u(0, 0)));
}

TEST_CASE("four-matrix generic family") {
  auto q = construct_sigma_generic(Rat(0), Rat(-1), Rat(-4));
  CHECK(check_relations(q, RelationSet::SIGMA).pass);
  Mat<Rat> p = mat_rat(2, 2, {1, 2, 0, 1});
  auto qc = construct_sigma_generic(Rat(0), Rat(-1), Rat(-4), p);
  CHECK(check_relations(qc, RelationSet::SIGMA).pass);
  CHECK(qc.b != q.b);
  auto qn = construct_sigma_generic_numeric(Rat(1), Rat(2), Rat(3));
  CHECK(check_relations(qn, RelationSet::SIGMA).pass);
}

TEST_CASE("pattern quadruple and its nonnilpotent double") {
  auto q = construct_sigma_pattern2();
  CHECK(check_relations(q, RelationSet::PATTERN_721).pass);
  CHECK(check_relations(q, RelationSet::SIGMA).pass);
  CHECK(nilpotency_index(q.d) == 2);  // the pattern has one nilpotent slot

  auto nn = construct_sigma_nonnilpotent();
  CHECK(check_relations(nn, RelationSet::SIGMA).pass);
  for (const auto* m : {&nn.a, &nn.b, &nn.c, &nn.d})
    CHECK_FALSE(nilpotency_index(*m).has_value());
}

TEST_CASE("pair system construction and canonical recovery") {
  Mat<Rat> z = mat_rat(2, 2, {0, 1, 0, 0});
  Mat<Rat> q = mat_rat(2, 2, {0, 3, 0, 0});  // zq = qz = 0 as the pair system needs
  auto pr = construct_tsys(2, z, q);
  CHECK(pr.a.nr == 4);
  CHECK(check_relations(pr, RelationSet::TSYS).pass);

  TsysCanon canon = canonicalize_tsys(pr.a, pr.b);
  CHECK(canon.m == 2);
  CHECK(canon.z == z);
  CHECK(canon.q == q);

  // the recovered change of basis maps the pair to the canonical block shape
  Mat<Rat> cinv = mat_inverse(canon.change_of_basis);
  Mat<Rat> ca = cinv * pr.a * canon.change_of_basis;
  for (int i = 0; i < canon.m; ++i)
    for (int j = 0; j < canon.m; ++j) {
      CHECK(ca.at(i, j) == 0);
      CHECK(ca.at(i, canon.m + j) == (i == j ? 1 : 0));
      CHECK(ca.at(canon.m + i, canon.m + j) == 0);
      CHECK(ca.at(canon.m + i, j) == canon.z.at(i, j));
    }

  // conjugating the pair leaves the recovered data similar to the original
  Mat<Rat> s = mat_rat(4, 4, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 1});
  TsysCanon canon2 = canonicalize_tsys(conjugate(s, pr.a), conjugate(s, pr.b));
  CHECK(canon2.m == 2);
  Mat<Rat> c2 = canon2.change_of_basis;
  Mat<Rat> a2 = conjugate(s, pr.a);
  Mat<Rat> b2 = conjugate(s, pr.b);
  Mat<Rat> c2inv = mat_inverse(c2);
  Mat<Rat> ra = c2inv * a2 * c2;
  Mat<Rat> rb = c2inv * b2 * c2;
  for (int i = 0; i < canon2.m; ++i)
    for (int j = 0; j < canon2.m; ++j) {
      CHECK(ra.at(canon2.m + i, j) == canon2.z.at(i, j));
      CHECK(rb.at(i, canon2.m + j) == canon2.q.at(i, j));
    }
}

TEST_CASE("exact-to-numeric conversions preserve solutions") {
  Theorem3Shape sh;
  sh.m = 2;
  sh.sigma = 3;
  auto t = construct_theorem3(sh);
  auto z = triple_embed(t);
  CHECK(check_system(z).pass);
  auto n9 = construct_nilpotent_n9();
  auto d = triple_double(n9);
  CHECK(check_system(d).pass);
}
