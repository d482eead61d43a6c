#pragma once

// Quaternion solutions of a + b + c = u, a^2 + b^2 + c^2 = v, a^3 + b^3 + c^3 = w.
//
// Commuting solutions reduce to the complex (size-1) problem: data lying in a
// common plane R + R*rho with rho^2 = -1 maps isomorphically onto C, where the
// cubic machinery applies.  Non-commuting solutions exist only for special v;
// with (u, w) = (0, 1) and v = v1 + v2 i, v2 > 0, the existence region is cut
// out by the discriminant Delta = 3 v1^3 + 4 v2^6 + 18 v1 v2^2 - 18 > 0 and the
// separator v2^2 - 3 v1^2 < 0.  This module evaluates those conditions, locates
// the v2-threshold where Delta changes sign, and exhibits non-commuting
// solutions by a multistart damped Newton search on the 8 remaining real
// unknowns after eliminating c = -a - b.

#include <array>
#include <cstdint>
#include <vector>

#include "psmat/classify.hpp"

namespace psmat {

struct Quaternion {
  double x1 = 0, x2 = 0, x3 = 0, x4 = 0;  // components on {1, i, j, k}
};

Quaternion quat_mul(const Quaternion& q, const Quaternion& r);
Quaternion quat_conj(const Quaternion& q);
double quat_norm(const Quaternion& q);

Quaternion operator+(const Quaternion& q, const Quaternion& r);
Quaternion operator-(const Quaternion& q, const Quaternion& r);
Quaternion operator*(double s, const Quaternion& q);
Quaternion quat_pow(const Quaternion& q, int k);

// Existence verdict for non-commuting solutions at v = v1 + v2 i.
// exists_noncommuting holds exactly when both inequalities are strict;
// a point within 1e-9 of either curve is flagged on_boundary and the
// verdict there is not meaningful.
struct RegionVerdict {
  double delta_value = 0;      // 3 v1^3 + 4 v2^6 + 18 v1 v2^2 - 18
  double separator_value = 0;  // v2^2 - 3 v1^2
  bool exists_noncommuting = false;
  bool on_boundary = false;
};

// Requires v2 > 0 (conjugation symmetry covers v2 < 0; v2 = 0 is the
// commuting line).  Throws std::invalid_argument otherwise.
RegionVerdict region_verdict(double v1, double v2);

// The positive root in v2 of Delta(v1, .) = 0, found by bisection on
// s = v2^2 (Delta is the cubic 4 s^3 + 18 v1 s + 3 v1^3 - 18 in s) to
// absolute tolerance 1e-10.  Throws std::domain_error when Delta has no
// positive root, i.e. when Delta(v1, 0+) >= 0 already.
double l_threshold(double v1);

// Solutions of the full system when the data u, v, w pairwise commute.
// rho is the common unit imaginary direction (rho^2 = -1); when the data
// are all real any rho works and rho_free is set (the returned rho is i,
// one representative of the sphere of choices).  roots are the three
// solutions x with (x, one per root, repeated by multiplicity) -- the
// triple (a, b, c) is the root list in any order.
struct CommutingSolutions {
  Quaternion rho;
  bool rho_free = false;
  std::array<Quaternion, 3> roots;
  double residual = 0;  // max power-sum defect over the three equations
};

// Throws std::invalid_argument when u, v, w do not pairwise commute.
CommutingSolutions commuting_solutions(const Quaternion& u, const Quaternion& v,
                                       const Quaternion& w);

// A non-commuting solution of {a+b+c = 0, a^2+b^2+c^2 = v1 + v2 i,
// a^3+b^3+c^3 = 1}, stored with the data it solves for.
struct NCSolution {
  Quaternion a, b, c;
  double v1 = 0, v2 = 0;
  double residual = 0;  // max abs over the 12 real equation components
};

// Max absolute residual of the 12 real components of the three quaternion
// equations at c = -a - b.
double system_residual(const Quaternion& a, const Quaternion& b, double v1, double v2);

// Multistart damped-Newton search: `attempts` random starts in [-3,3]^8
// seeded by `seed`, each polished for up to 200 iterations; a start is
// accepted when the residual falls below 1e-9 and (a3, a4) != (0, 0), so
// only genuinely non-commuting solutions are kept.  Results are
// deduplicated up to the sign symmetries (a3,b3) -> (-a3,-b3) and
// (a4,b4) -> (-a4,-b4), represented canonically, and sorted; the list may
// be empty (it always is, up to numerical luck, outside the existence
// region).  Conjugation by unit elements of R + Ri fixes the data and
// rotates the (x3, x4) components, so solutions come in circles; the
// sign-symmetry quotient keeps each sampled point of a circle, and the
// list size therefore grows with `attempts`.
std::vector<NCSolution> find_noncommuting(double v1, double v2, int attempts,
                                          std::uint64_t seed = 0);

// The four sign-symmetry variants of a found solution (identity first),
// each re-verified against the stored data; a variant failing the 1e-9
// residual bound signals an implementation bug and throws std::logic_error.
std::array<NCSolution, 4> solution_orbit(const NCSolution& sol);

}  // namespace psmat
