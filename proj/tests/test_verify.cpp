#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/construct.hpp"
#include "psmat/verify.hpp"

using namespace psmat;

TEST_CASE("system check accepts solutions and flags perturbations") {
  auto t = construct_nilpotent_n9();
  Report<Rat> rep = check_system(t);
  CHECK(rep.pass);
  REQUIRE(rep.lines.size() == 3);
  for (const auto& l : rep.lines) CHECK(l.residual_norm == 0.0);

  t.a.at(0, 1) = t.a.at(0, 1) + 1;
  Report<Rat> bad = check_system(t);
  CHECK_FALSE(bad.pass);
  CHECK(bad.lines[1].residual_norm > 0);
}

TEST_CASE("degree-five relation family holds on the canonical nilpotent") {
  auto t = construct_nilpotent_n9();
  Report<Rat> rep = check_relations(t, RelationSet::R51, {});
  CHECK(rep.pass);
  REQUIRE(rep.lines.size() == 7);
  CHECK(rep.lines[0].name == "5.1.0: a + b + c");
  CHECK(rep.lines[6].name == "5.1.5: a^5");
}

TEST_CASE("degree-four and degree-five monomial tables") {
  auto t = construct_nilpotent_n9();
  Report<Rat> deg4 = check_relations(t, RelationSet::THM4_DEG4, {});
  CHECK(deg4.pass);
  CHECK(deg4.lines.size() == 15);
  REQUIRE(deg4.notes.size() == 1);
  CHECK(deg4.notes[0] == "a^4 is nonzero: the table is a nontrivial constraint");

  Report<Rat> deg5 = check_relations(t, RelationSet::THM4_DEG5, {});
  CHECK(deg5.pass);
  CHECK(deg5.lines.size() == 32);

  // on 2x2 and 3x3 nilpotent solutions the degree-four table is trivial
  auto n3 = construct_nilpotent_n3(Rat(1), Rat(0));
  Report<Rat> small = check_relations(n3, RelationSet::THM4_DEG4, {});
  CHECK(small.pass);
  REQUIRE(small.notes.size() == 1);
  CHECK(small.notes[0] == "a^4 = 0: the identities hold trivially");
}

TEST_CASE("homothety relation family needs its context") {
  SolutionTriple<Rat> t;
  t.a = mat_eye<Rat>(2);
  t.b = Rat(-1) * mat_eye<Rat>(2);
  t.c = mat_zeros<Rat>(2, 2);
  t.params = {Rat(0), Rat(2), Rat(0)};
  t.kind = "manual";

  RelationContext<Rat> ctx;
  ctx.u = mat_rat(2, 2, {0, 1, 2, 0});  // u^2 = 2I
  Report<Rat> rep = check_relations(t, RelationSet::R41, ctx);
  CHECK(rep.pass);

  CHECK_THROWS_AS(check_relations(t, RelationSet::R41, {}), std::invalid_argument);
  CHECK_THROWS_AS(check_relations(t, RelationSet::R21, ctx), std::invalid_argument);
}

TEST_CASE("commutator-context relations on a commuting field solution") {
  Theorem3Shape sh;
  sh.m = 0;
  sh.sigma = 2;
  sh.f_assign = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto t3 = construct_theorem3(sh);  // rational diagonal triple

  Field f = make_field({-2, 0, 1});
  RelationContext<NFElem> ctx;
  Mat<NFElem> u = mat_zeros<NFElem>(3, 3);
  for (int i = 0; i < 3; ++i) u.at(i, i) = nf_gen(f);
  ctx.u = u;
  ctx.v = mat_zeros<NFElem>(3, 3);

  Report<NFElem> rep = check_relations(t3, RelationSet::R21, ctx);
  CHECK(rep.pass);
  REQUIRE(rep.lines.size() == 8);
  CHECK(rep.lines[0].name == "context [a,u]");
}

TEST_CASE("four-matrix power sums") {
  auto q = construct_sigma_generic(Rat(0), Rat(-1), Rat(-4));
  Report<Rat> rep = check_relations(q, RelationSet::SIGMA);
  CHECK(rep.pass);
  REQUIRE(rep.lines.size() == 4);
  q.d.at(0, 0) = q.d.at(0, 0) + 1;
  CHECK_FALSE(check_relations(q, RelationSet::SIGMA).pass);
}

TEST_CASE("pattern relations require the cube-root-of-unity field") {
  auto q = construct_sigma_pattern2();
  Report<NFElem> rep = check_relations(q, RelationSet::PATTERN_721);
  CHECK(rep.pass);
  bool found = false;
  for (const auto& l : rep.lines)
    if (l.name == "a + jb + j^2c") found = true;
  CHECK(found);
}

TEST_CASE("pair relations") {
  Mat<Rat> z = mat_zeros<Rat>(1, 1), q = mat_zeros<Rat>(1, 1);
  auto pr = construct_tsys(1, z, q);
  CHECK(check_relations(pr, RelationSet::TSYS).pass);
  CHECK_THROWS_AS(check_relations(pr, RelationSet::SIGMA), std::invalid_argument);
}

TEST_CASE("numeric right-hand-side checks use a scaled tolerance") {
  auto u = [](double y, double zz) {
    Mat<double> m = mat_zeros<double>(2, 2);
    m.at(0, 0) = y;
    m.at(0, 1) = zz;
    m.at(1, 0) = -zz;
    m.at(1, 1) = y;
    return m;
  };
  USolveResult r = solve_in_U(u(1, 2), u(0.5, -1), u(3, 0.25));
  CHECK(check_system_rhs(r.a, r.b, r.c, r.rhs).pass);
  std::array<Mat<double>, 3> wrong = r.rhs;
  wrong[0].at(0, 0) += 0.5;
  CHECK_FALSE(check_system_rhs(r.a, r.b, r.c, wrong).pass);
}

TEST_CASE("commutator verdicts") {
  auto n9 = construct_nilpotent_n9();
  auto v1 = commutator_nilpotency(n9);
  CHECK(v1.is_nilpotent);
  CHECK(v1.index.has_value());

  Theorem3Shape sh;
  sh.m = 2;
  sh.sigma = 3;
  auto t3 = construct_theorem3(sh);
  auto v2 = commutator_nilpotency(t3);
  CHECK_FALSE(v2.is_nilpotent);
  CHECK(v2.note == "commutator not nilpotent: the triple is not simultaneously triangularizable");

  auto diag = construct_generic(Params<Rat>{Rat(0), Rat(2), Rat(0)}, {{0, 1, 2}});
  auto v3 = commutator_nilpotency(diag);
  CHECK(v3.is_nilpotent);
  CHECK(v3.index == 1);  // commuting: the commutator is already zero
}

TEST_CASE("relation set names round-trip") {
  for (const char* name : {"SYS", "R21", "R41", "R51", "THM4_DEG4", "THM4_DEG5", "SIGMA",
                           "TSYS", "PATTERN_721"})
    CHECK(relation_set_name(relation_set_of(name)) == name);
  CHECK(relation_set_of("r51") == RelationSet::R51);
  CHECK_THROWS_AS(relation_set_of("bogus"), std::invalid_argument);
}
