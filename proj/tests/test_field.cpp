#include <numeric>

#include "doctest.h"
#include "minrep/arith.hpp"
#include "minrep/errors.hpp"
#include "minrep/field.hpp"

using namespace minrep;

TEST_CASE("prime field construction picks the least generator") {
  const Field F7 = Field::make(7, 1);
  CHECK(F7.q() == 7);
  CHECK(F7.primitive() == 3);  // 2 has order 3 mod 7
  CHECK(F7.modulus() == std::vector<std::uint32_t>{0, 1});

  const Field F5 = Field::make(5, 1);
  CHECK(F5.primitive() == 2);  // order 4 mod 5
}

TEST_CASE("F_9 has modulus x^2+1 and a primitive element of order 8") {
  const Field F = Field::make(3, 2);
  CHECK(F.q() == 9);
  CHECK(F.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const Field::Elt w = F.primitive();
  CHECK(F.pow(w, 4) != F.one());
  CHECK(F.pow(w, 8) == F.one());
}

TEST_CASE("construction rejections") {
  CHECK_THROWS_AS(Field::make(2, 3), InvalidInput);
  CHECK_THROWS_AS(Field::make(9, 1), InvalidInput);
  CHECK_THROWS_AS(Field::make(3, 0), InvalidInput);
  CHECK_THROWS_AS(Field::make(3, 21), InvalidInput);  // 3^21 > 2^31
  CHECK_THROWS_AS(Field::from_order(15), InvalidInput);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (std::uint64_t q : {5ull, 9ull, 27ull, 49ull}) {
    const Field F = Field::from_order(q);
    for (Field::Elt a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.mul(a, F.one()) == a);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.pow(a, q - 1) == F.one());
      }
      for (Field::Elt b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Field::Elt c = 0; c < q; ++c) {
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("inverse and power basics") {
  const Field F = Field::make(5, 1);
  CHECK(F.inv(2) == 3);
  CHECK_THROWS_AS(F.inv(0), InvalidInput);
  const Field F7 = Field::make(7, 1);
  CHECK(F7.mul(F7.primitive(), F7.pow(F7.primitive(), 5)) == F7.one());
}

TEST_CASE("index subgroup membership") {
  const Field F = Field::make(7, 1);
  const Field::Elt w = F.primitive();
  for (Field::Elt x = 1; x < 7; ++x) CHECK(F.in_index_subgroup(x, 1));
  CHECK_FALSE(F.in_index_subgroup(w, 2));  // a generator is a non-square
  CHECK(F.in_index_subgroup(F.mul(w, w), 2));
  CHECK_THROWS_AS(F.in_index_subgroup(0, 2), InvalidInput);
  CHECK_THROWS_AS(F.in_index_subgroup(1, 4), InvalidInput);  // 4 does not divide 6
}

TEST_CASE("index subgroup sizes and intersections, exhaustive up to 81") {
  for (std::uint64_t q : {5ull, 7ull, 9ull, 13ull, 25ull, 27ull, 49ull, 81ull}) {
    const Field F = Field::from_order(q);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t t = 1; t <= q - 1; ++t)
      if ((q - 1) % t == 0) divisors.push_back(t);

    for (std::uint64_t t : divisors) {
      std::uint64_t count = 0;
      for (Field::Elt x = 1; x < q; ++x)
        if (F.in_index_subgroup(x, t)) ++count;
      CHECK(count == (q - 1) / t);
    }

    for (std::uint64_t s : divisors)
      for (std::uint64_t t : divisors) {
        const std::uint64_t l = std::lcm(s, t);
        for (Field::Elt x = 1; x < q; ++x) {
          const bool both = F.in_index_subgroup(x, s) && F.in_index_subgroup(x, t);
          CHECK(both == F.in_index_subgroup(x, l));
        }
      }
  }
}

TEST_CASE("dlog inverts primitive powers") {
  const Field F = Field::from_order(27);
  for (std::uint64_t k = 0; k < 26; ++k)
    CHECK(F.dlog(F.pow(F.primitive(), k)) == k);
}
