#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/construct.hpp"
#include "psmat/nilflag.hpp"

using namespace psmat;

namespace {

// column indices (0-based) of the standard basis vectors spanning v
std::vector<int> support(const Mat<Rat>& v) {
  std::vector<int> out;
  for (int j = 0; j < v.nc; ++j)
    for (int i = 0; i < v.nr; ++i)
      if (v.at(i, j) != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

}  // namespace

TEST_CASE("flag of the nine-dimensional canonical solution") {
  auto t = construct_nilpotent_n9();
  Flag f = semigroup_flag(t);
  CHECK(f.length() == 5);
  CHECK(support(f.subspaces[1]) == std::vector<int>{0});
  CHECK(support(f.subspaces[2]) == std::vector<int>{0, 1, 5});
  CHECK(support(f.subspaces[3]) == std::vector<int>{0, 1, 2, 5, 6, 8});
  CHECK(support(f.subspaces[4]) == std::vector<int>{0, 1, 2, 3, 5, 6, 7, 8});
  CHECK(f.subspaces[5].nc == 9);
  CHECK(flag_signature(f) == std::vector<int>{1, 2, 3, 2, 1});
}

TEST_CASE("flag is invariant under the semigroup") {
  auto t = construct_nilpotent_n9();
  Flag f = semigroup_flag(t);
  for (const Mat<Rat>* m : {&t.a, &t.b, &t.c}) {
    for (std::size_t k = 0; k + 1 < f.subspaces.size(); ++k) {
      // m * V_k+1 lies inside V_k
      Mat<Rat> image = *m * f.subspaces[k + 1];
      Mat<Rat> joint = hstack(f.subspaces[k], image);
      CHECK(mat_rank(joint) == f.subspaces[k].nc);
    }
  }
}

TEST_CASE("algebra and center of the canonical solution") {
  auto t = construct_nilpotent_n9();
  AlgebraBasis alg = algebra_basis(t);
  CHECK(alg.dimension == 8);
  CHECK(alg.words == std::vector<std::string>{"a", "b", "ab", "ba", "a^2", "aba", "ab^2", "a^4"});
  AlgebraBasis cen = center_basis(t, alg);
  CHECK(cen.dimension == 5);
  CHECK(cen.words == std::vector<std::string>{"a^2", "b^2", "aba", "ab^2", "a^4"});
}

TEST_CASE("varpi vanishes on the canonical solution and its identities hold") {
  auto t = construct_nilpotent_n9();
  CHECK(varpi(t) == 0);
  // the two degree-four identities it asserts internally, with varpi = 0
  const Mat<Rat>&a = t.a, &b = t.b;
  CHECK(mat_is_zero(b * a * b + a * b * a + Rat(4) * (a * b * b)));
  CHECK(mat_is_zero(a * a * b - a * b * b));
}

TEST_CASE("varpi requires the canonical jordan shape") {
  auto t = construct_nilpotent_n2(Rat(1), Rat(1));
  CHECK_THROWS_AS(varpi(t), std::invalid_argument);
}

TEST_CASE("triangularizing basis strictly uppers the triple") {
  auto t = construct_nilpotent_n9();
  Mat<Rat> p = triangularizing_basis(t);
  CHECK(support(p) == std::vector<int>{0, 1, 5, 2, 6, 8, 3, 7, 4});
  Mat<Rat> pinv = mat_inverse(p);
  for (const Mat<Rat>* m : {&t.a, &t.b, &t.c}) {
    Mat<Rat> u = pinv * *m * p;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j <= i; ++j) CHECK(u.at(i, j) == 0);
  }
}

TEST_CASE("small nilpotent families") {
  auto n2 = construct_nilpotent_n2(Rat(1), Rat(1));
  Flag f2 = semigroup_flag(n2);
  CHECK(f2.length() == 2);
  CHECK(flag_signature(f2) == std::vector<int>{1, 1});
  CHECK(algebra_basis(n2).dimension == 1);

  auto n3 = construct_nilpotent_n3(Rat(1), Rat(0));
  Flag f3 = semigroup_flag(n3);
  CHECK(f3.length() == 3);
  CHECK(flag_signature(f3) == std::vector<int>{1, 1, 1});
  AlgebraBasis alg3 = algebra_basis(n3);
  CHECK(alg3.dimension == 3);
  AlgebraBasis cen3 = center_basis(n3, alg3);
  CHECK(cen3.dimension == 1);
  CHECK(cen3.words == std::vector<std::string>{"ab"});
}

TEST_CASE("the zero solution has the one-step flag") {
  SolutionTriple<Rat> t;
  t.a = mat_zeros<Rat>(2, 2);
  t.b = mat_zeros<Rat>(2, 2);
  t.c = mat_zeros<Rat>(2, 2);
  t.params = {Rat(0), Rat(0), Rat(0)};
  t.kind = "zero";
  Flag f = semigroup_flag(t);
  CHECK(f.length() == 1);
  CHECK(flag_signature(f) == std::vector<int>{2});
  CHECK(algebra_basis(t).dimension == 0);
}

TEST_CASE("non-nilpotent triples are rejected") {
  Theorem2Shape sh;
  sh.phi = 1;
  sh.alphaN = mat_zeros<Rat>(0, 0);
  sh.betaN = mat_zeros<Rat>(0, 0);
  sh.gammaN = mat_zeros<Rat>(1, 1);
  auto t = construct_theorem2(sh);  // parameters (1,1,1): not the zero system
  CHECK_THROWS(semigroup_flag(t));
  CHECK_THROWS(algebra_basis(t));
}

TEST_CASE("flags transform with conjugation") {
  auto t = construct_nilpotent_n9();
  Mat<Rat> p = mat_eye<Rat>(9);
  p.at(0, 3) = 2;
  p.at(4, 7) = -1;
  SolutionTriple<Rat> tc = t;
  tc.a = conjugate(p, t.a);
  tc.b = conjugate(p, t.b);
  tc.c = conjugate(p, t.c);
  Flag fc = semigroup_flag(tc);
  CHECK(flag_signature(fc) == flag_signature(semigroup_flag(t)));
  AlgebraBasis alg = algebra_basis(tc);
  CHECK(alg.dimension == 8);
}
