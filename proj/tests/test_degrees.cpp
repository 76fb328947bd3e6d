#include "doctest.h"
#include "minrep/arith.hpp"
#include "minrep/catalog.hpp"
#include "minrep/degrees.hpp"
#include "minrep/errors.hpp"

using namespace minrep;

TEST_CASE("p_sl2") {
  CHECK(p_sl2(5).value == 24);
  CHECK(p_sl2(9).value == 80);
  CHECK(p_sl2(3).value == 8);
  CHECK(p_sl2(3).status == DegreeStatus::theorem);
  CHECK_THROWS_AS(p_sl2(4), InvalidInput);
  CHECK_THROWS_AS(p_sl2(1), InvalidInput);
}

TEST_CASE("p_sl3 cases") {
  DegreeResult r = p_sl3(5);
  CHECK(r.value == 31);
  CHECK(r.status == DegreeStatus::theorem);

  r = p_sl3(7);
  CHECK(r.value == 114);
  CHECK(r.status == DegreeStatus::unresolved_construction);

  r = p_sl3(13);
  CHECK(r.value == 549);
  CHECK(r.status == DegreeStatus::theorem);

  CHECK_THROWS_AS(p_sl3(3), InvalidInput);
}

TEST_CASE("p_sln for very divisible dimensions") {
  DegreeResult r = p_sln_very_divisible(5, 11);
  CHECK(r.value == 32210);
  CHECK(r.status == DegreeStatus::unresolved_construction);

  r = p_sln_very_divisible(6, 43);
  CHECK(r.value == 752543220ull);
  CHECK(r.status == DegreeStatus::theorem);

  // boundary: both candidate formulas agree in value
  r = p_sln_very_divisible(6, 31);
  CHECK(r.status == DegreeStatus::ambiguous_tie);
  CHECK(r.value == (887503681ull - 1) / 6);
  CHECK(r.value == (887503681ull - 1) / 30 * 5);

  CHECK_THROWS_AS(p_sln_very_divisible(4, 41), InvalidInput);  // not very divisible
  CHECK_THROWS_AS(p_sln_very_divisible(5, 7), InvalidInput);   // gcd = 1
}

TEST_CASE("p_gl2") {
  CHECK(p_gl2(7).value == 19);
  CHECK(p_gl2(5).value == 24);
  CHECK(p_gl2(13).value == 59);
  CHECK(p_gl2(3).value == 8);
  CHECK(p_gl2(7).status == DegreeStatus::theorem);
}

TEST_CASE("p_gl3") {
  CHECK(p_gl3(5).value == 35);
  CHECK(p_gl3(7).value == 116);
  CHECK(p_gl3(7).status == DegreeStatus::unresolved_construction);
  CHECK(p_gl3(13).value == 553);
  CHECK(p_gl3(13).status == DegreeStatus::theorem);
}

TEST_CASE("p_gln conjecture values") {
  CHECK(p_gln_conjectured(3, 7).value == 116);

  DegreeResult r = p_gln_conjectured(4, 41);
  CHECK(r.value == 565152 + 5);
  CHECK(r.status == DegreeStatus::conjecture);

  CHECK(p_gln_conjectured(2, 9).value == 80);

  r = p_gln_conjectured(5, 11);  // very divisible, unresolved witness
  CHECK(r.value == 32210 + 2);
  CHECK(r.status == DegreeStatus::unresolved_construction);

  r = p_gln_conjectured(4, 7);  // very divisible: (6)_2 = 2 divides 4
  CHECK(r.value == (2401 - 1) / 6 * 2 + 3);
  CHECK(r.status == DegreeStatus::conjecture);

  r = p_gln_conjectured(5, 7);  // g = 1
  CHECK(r.value == (16807 - 1) / 6 + 5);
  CHECK(r.status == DegreeStatus::conjecture);
}

TEST_CASE("upper bound for GL_n") {
  CHECK(upper_bound_gln(3, 7).value == 173);
  CHECK(upper_bound_gln(3, 5).value == 35);
  CHECK(upper_bound_gln(2, 7).value == 19);
  CHECK(upper_bound_gln(3, 7).status == DegreeStatus::upper_bound);
}

TEST_CASE("minimal central-index subgroup cost") {
  CHECK(h_t_cost(2, 13, 3) == 3);
  CHECK(h_t_cost(2, 13, 4) == 8);
  CHECK(h_t_cost(3, 7, 3) == 9);
  CHECK(h_t_cost(2, 13, 2) == 4);
  CHECK_THROWS_AS(h_t_cost(2, 13, 12), InvalidInput);  // t = q-1 excluded
  CHECK_THROWS_AS(h_t_cost(2, 13, 5), InvalidInput);   // t does not divide q-1
}

TEST_CASE("formulas stay within the upper bound across the sweep") {
  for (std::uint64_t q : odd_prime_powers(5, 200)) {
    CHECK(p_gl2(q).value <= upper_bound_gln(2, q).value);
    CHECK(p_gl3(q).value <= upper_bound_gln(3, q).value);
    // with gcd = 1 the bound is attained exactly
    if ((q - 1) % 3 != 0) CHECK(p_gl3(q).value == upper_bound_gln(3, q).value);
  }
}

TEST_CASE("cofactor sum stays below the SL degree") {
  for (std::uint64_t q : odd_prime_powers(5, 200)) {
    CHECK(cofactor_degree_sum(2, q, q - 1) < p_sl2(q).value);
    CHECK(cofactor_degree_sum(3, q, q - 1) < p_sl3(q).value);
  }
}

TEST_CASE("formula equals collection degree across the sweep") {
  for (std::uint64_t q : odd_prime_powers(3, 200)) {
    CHECK(p_gl2(q).value == gl2_collection(field_of_order(q)).claimed_degree);
    if (q >= 5) CHECK(p_gl3(q).value == gl3_collection(field_of_order(q)).claimed_degree);
  }
}
