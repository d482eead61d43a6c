#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psmat/quat.hpp"

using namespace psmat;

namespace {
Quaternion Q(double w, double x, double y, double z) { return {w, x, y, z}; }
bool close(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  return quat_norm(a - b) <= tol;
}
}

TEST_CASE("hamilton product") {
  Quaternion i = Q(0, 1, 0, 0), j = Q(0, 0, 1, 0), k = Q(0, 0, 0, 1);
  CHECK(close(quat_mul(i, j), k));
  CHECK(close(quat_mul(j, i), Q(0, 0, 0, -1)));
  CHECK(close(quat_mul(j, k), i));
  CHECK(close(quat_mul(k, i), j));
  CHECK(close(quat_mul(i, i), Q(-1, 0, 0, 0)));
  Quaternion q = Q(1, 2, 3, 4);
  CHECK(close(quat_mul(q, quat_conj(q)), Q(30, 0, 0, 0)));
  CHECK(quat_norm(q) == doctest::Approx(std::sqrt(30.0)));
  CHECK(close(quat_pow(q, 2), quat_mul(q, q)));
}

TEST_CASE("existence region verdicts") {
  RegionVerdict in = region_verdict(-4, 4);
  CHECK(in.delta_value == doctest::Approx(15022));
  CHECK(in.separator_value == doctest::Approx(-32));
  CHECK(in.exists_noncommuting);
  CHECK_FALSE(in.on_boundary);

  RegionVerdict out = region_verdict(-4, 2);
  CHECK(out.delta_value == doctest::Approx(-242));
  CHECK_FALSE(out.exists_noncommuting);

  CHECK(region_verdict(1, 1).exists_noncommuting);       // delta 7, separator -2
  CHECK_FALSE(region_verdict(0, 1).exists_noncommuting);  // delta -14

  CHECK_THROWS_AS(region_verdict(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(region_verdict(1, -2), std::invalid_argument);
}

TEST_CASE("existence threshold by bisection") {
  double l = l_threshold(-4);
  CHECK(l > 2.28);
  CHECK(l < 2.31);
  CHECK(l == doctest::Approx(2.2989573311).epsilon(1e-8));
  // delta vanishes at the threshold (to bisection accuracy)
  CHECK(std::abs(region_verdict(-4, l).delta_value) < 1e-6);
  CHECK(region_verdict(-4, 4 + 1e-12).on_boundary == false);
  // monotone in the severity of v1
  CHECK(l_threshold(0) < l_threshold(-2));
  CHECK(l_threshold(-2) < l_threshold(-4));
  // for v1 large enough, delta is positive at every v2
  CHECK_THROWS_AS(l_threshold(2), std::domain_error);
}

TEST_CASE("commuting solutions from the scalar cubic") {
  Quaternion zero = Q(0, 0, 0, 0);

  // real power sums (0, -2, 0): roots 0, +/- rho with the representative rho = i
  auto cs = commuting_solutions(zero, Q(-2, 0, 0, 0), zero);
  CHECK(cs.residual <= 1e-9);
  CHECK(cs.rho_free);
  bool zero_found = false, unit_found = false;
  for (const auto& r : cs.roots) {
    if (quat_norm(r) < 1e-9) zero_found = true;
    if (std::abs(quat_norm(r) - 1.0) < 1e-9) unit_found = true;
  }
  CHECK(zero_found);
  CHECK(unit_found);

  // data along a genuinely quaternionic imaginary direction stays in its plane
  double s = 1.0 / std::sqrt(2.0);
  auto cs2 = commuting_solutions(zero, Q(-4, 0, 4 * s, 4 * s), zero);
  CHECK(cs2.residual <= 1e-9);
  CHECK_FALSE(cs2.rho_free);
  for (const auto& r : cs2.roots) {
    CHECK(std::abs(r.x2) < 1e-9);
    CHECK(r.x3 == doctest::Approx(r.x4));
  }

  // non-commuting data is refused
  CHECK_THROWS_AS(commuting_solutions(Q(0, 1, 0, 0), Q(0, 0, 1, 0), Q(0, 0, 0, 1)),
                  std::invalid_argument);
}

TEST_CASE("noncommuting search inside the region") {
  auto sols = find_noncommuting(-4, 4, 60, 0);
  REQUIRE(!sols.empty());
  Quaternion v = Q(-4, 4, 0, 0);
  for (const auto& s : sols) {
    CHECK(s.residual <= 1e-9);
    CHECK(system_residual(s.a, s.b, -4, 4) <= 1e-9);
    // noncommuting with v: av != va
    CHECK(quat_norm(quat_mul(s.a, v) - quat_mul(v, s.a)) > 1e-6);
    // the constraint c = -a - b holds by construction
    CHECK(close(s.c, Q(0, 0, 0, 0) - s.a - s.b));
  }
}

TEST_CASE("searching an empty region finds nothing") {
  CHECK(find_noncommuting(-4, 2, 60, 0).empty());
}

TEST_CASE("sign-variant orbit") {
  auto sols = find_noncommuting(-4, 4, 40, 1);
  REQUIRE(!sols.empty());
  auto orbit = solution_orbit(sols[0]);
  CHECK(close(orbit[0].a, sols[0].a));
  for (const auto& o : orbit) CHECK(o.residual <= 1e-9);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      bool distinct = quat_norm(orbit[i].a - orbit[j].a) > 1e-6 ||
                      quat_norm(orbit[i].b - orbit[j].b) > 1e-6;
      CHECK(distinct);
    }
}

TEST_CASE("quaternion conjugation preserves the system") {
  auto sols = find_noncommuting(-4, 4, 40, 0);
  REQUIRE(!sols.empty());
  CHECK(system_residual(quat_conj(sols[0].a), quat_conj(sols[0].b), -4, -4) <= 1e-9);
}

TEST_CASE("search is deterministic in the seed") {
  auto a = find_noncommuting(-4, 4, 50, 7);
  auto b = find_noncommuting(-4, 4, 50, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a.x1 == b[i].a.x1);
    CHECK(a[i].b.x4 == b[i].b.x4);
  }
}
