#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suites.hpp"

// Reduced-count runs of the randomized suites; the acceptance gate repeats
// them at full volume.

TEST_CASE("constructors produce verified solutions") {
  CHECK(psmat_props::suite_construct_verify(150, 11) == 0);
}

TEST_CASE("conjugation preserves solutions, traces, ranks and jordan types") {
  CHECK(psmat_props::suite_conjugation(150, 22) == 0);
}

TEST_CASE("normal forms are idempotent and differences lie in the ideal") {
  CHECK(psmat_props::suite_normal_form(150, 33) == 0);
}

TEST_CASE("dis matches the coefficient discriminant of r") {
  CHECK(psmat_props::suite_dis(150, 44) == 0);
}

TEST_CASE("delta vanishes exactly when a root sits at alpha/3") {
  CHECK(psmat_props::suite_delta_halfsum(150, 55) == 0);
}
