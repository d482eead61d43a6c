#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/ncpoly.hpp"

using namespace psmat;

TEST_CASE("words, parsing, printing") {
  NCContext ctx(default_gens());
  NCPoly p = ctx.parse("2*a.b - 1/2*b.a + 3");
  CHECK(ctx.str(p) == "-1/2*b.a + 2*a.b + 3");
  CHECK(ctx.parse(ctx.str(p)) == p);
  CHECK(ctx.degree(p) == 2);
  CHECK(p.lead_word() == ctx.word_of("ba"));
  CHECK(ctx.parse("a.b - a.b").zero());
  CHECK_THROWS_AS(ctx.parse("2*x.y"), std::invalid_argument);
  CHECK_THROWS_AS(ctx.parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic in the free algebra") {
  NCContext ctx(default_gens());
  NCPoly a = ctx.parse("1*a"), b = ctx.parse("1*b");
  NCPoly ab = ctx.mul(a, b), ba = ctx.mul(b, a);
  CHECK(ab != ba);  // noncommutative
  CHECK(ctx.str(ctx.sub(ab, ba)) == "-b.a + a.b");
  NCPoly s = ctx.add(a, b);
  NCPoly s2 = ctx.mul(s, s);
  CHECK(ctx.str(s2) == "b.b + b.a + a.b + a.a");
  CHECK(ctx.mul_word(ctx.word_of("a"), b, ctx.word_of("a")) == ctx.parse("1*a.b.a"));
  int deg = -1;
  CHECK(ctx.homogeneous(s2, &deg));
  CHECK(deg == 2);
  CHECK_FALSE(ctx.homogeneous(ctx.add(s2, a), nullptr));
}

TEST_CASE("normal form against a basis with cofactors") {
  NCContext ctx(default_gens());
  // basis: {ab - ba} is not closed; use the closed ideal {a} for determinism
  std::vector<NCPoly> basis = {ctx.monic(ctx.parse("1*a.b - 1*b.a"))};
  NCPoly target = ctx.parse("1*a.a.b - 1*a.b.a");
  std::vector<CofactorStep> steps;
  NCPoly nf = normal_form(ctx, target, basis, &steps);
  CHECK(nf.zero());
  // replaying the cofactor steps reconstructs the target
  NCPoly acc = nf;
  for (const CofactorStep& st : steps) {
    NCPoly piece = ctx.mul_word(st.left, basis[static_cast<std::size_t>(st.basis_index)], st.right);
    acc = ctx.add(acc, ctx.scale(piece, st.coeff));
  }
  CHECK(acc == target);
}

TEST_CASE("preset system shapes") {
  CHECK(preset_names() == std::vector<std::string>{"s4", "s2", "s3", "s21", "remark121"});
  CHECK(preset_system("s4").generators.size() == 3);
  CHECK(preset_system("s2").generators.size() == 6);
  CHECK(preset_system("s3").generators.size() == 8);
  CHECK(preset_system("s21").generators.size() == 10);
  CHECK(preset_system("remark121").generators.size() == 6);
  CHECK_THROWS_AS(preset_system("nope"), std::invalid_argument);
}

TEST_CASE("truncated basis of the identity-parameter system") {
  PresetSystem ps = preset_system("s4");
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, 6);
  CHECK(gb.complete_below_bound);
  CHECK(gb.basis.size() == 7);
  CHECK(gb.count_by_degree == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 1}});
  auto reduces = [&](const std::string& s) {
    return normal_form(ps.ctx, ps.ctx.parse(s), gb.basis).zero();
  };
  CHECK(reduces("1*a.a.a.a.a"));
  CHECK(reduces("1*a.b.a.b - 5/2*a.a.a.a"));
  CHECK(reduces("1*b.a.b.a - 5/2*a.a.a.a"));
  CHECK(reduces("1*a.a.a.a - 1*b.b.b.b"));
  CHECK_FALSE(reduces("1*a.a"));
}

TEST_CASE("commutator-context system kills the degree-five relation") {
  PresetSystem ps = preset_system("s2");
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, 6);
  CHECK(gb.count_by_degree == std::map<int, int>{{1, 1}, {2, 3}, {3, 3}, {4, 1}});
  auto reduces = [&](const std::string& s) {
    return normal_form(ps.ctx, ps.ctx.parse(s), gb.basis).zero();
  };
  CHECK(reduces("1*a.a.b - 1*b.a.a"));
  CHECK(reduces("-1*b.a.b - 1*a.a.b + 2*a.a.a - 1*u.u.a"));
  CHECK(reduces("6*a.a.a.a.a - 5*u.u.a.a.a + 1*u.u.u.u.a"));
}

TEST_CASE("equal-cube system leaves the commutator alive") {
  PresetSystem ps = preset_system("s3");
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, 6);
  CHECK(gb.basis.size() == 9);
  CHECK(gb.count_by_degree == std::map<int, int>{{1, 1}, {2, 3}, {3, 5}});
  NCPoly comm = ps.ctx.parse("1*a.b - 1*b.a");
  CHECK_FALSE(normal_form(ps.ctx, comm, gb.basis).zero());
  // ...but every u^2-multiple of it dies
  Word u = ps.ctx.word_of("u");
  CHECK(normal_form(ps.ctx, ps.ctx.mul_word(u + u, comm, Word{}), gb.basis).zero());
  CHECK(normal_form(ps.ctx, ps.ctx.mul_word(Word{}, comm, u + u), gb.basis).zero());
  CHECK(normal_form(ps.ctx, ps.ctx.mul_word(u, comm, u), gb.basis).zero());
}

TEST_CASE("central-powers system reduces its slow relations") {
  PresetSystem ps = preset_system("s21");
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, 6);
  CHECK(gb.basis.size() == 19);
  auto reduces = [&](const std::string& s) {
    return normal_form(ps.ctx, ps.ctx.parse(s), gb.basis).zero();
  };
  CHECK(reduces("2*a.a + 2*b.b + 1*a.b + 1*b.a - 1*u.u"));
  CHECK(reduces("1*b.b.b.a - 1*a.b.b.b - 1*b.a.a.a + 1*a.a.a.b"));
  CHECK(reduces("1*b.a.a.a - 1*a.a.a.b - 1*a.a.b.b - 1*a.b.a.b + 1*b.b.a.a + 1*b.a.b.a"));
}

TEST_CASE("homogeneous cyclic system keeps growing") {
  PresetSystem ps = preset_system("remark121");
  std::map<int, std::size_t> sizes;
  for (int bound : {3, 4, 5, 6}) {
    GBResult gb = truncated_buchberger(ps.ctx, ps.generators, bound);
    sizes[bound] = gb.basis.size();
  }
  CHECK(sizes[3] == 10);
  CHECK(sizes[4] == 17);
  CHECK(sizes[5] == 26);
  CHECK(sizes[6] == 30);
}

TEST_CASE("membership report lines") {
  PresetSystem ps = preset_system("s4");
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, 6);
  std::vector<std::pair<std::string, NCPoly>> targets = {
      {"a5", ps.ctx.parse("1*a.a.a.a.a")}, {"a2", ps.ctx.parse("1*a.a")}};
  auto lines = membership_report(ps.ctx, gb, targets);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].in_ideal);
  CHECK(lines[0].residual.zero());
  CHECK_FALSE(lines[1].in_ideal);
}
