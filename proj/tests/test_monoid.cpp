#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "convalg/monoid.hpp"

#include <cstdint>
#include <limits>

#include "oracles.hpp"

using namespace convalg;
using convalg::testing::Rng;

TEST_CASE("combine is coordinatewise addition") {
  CHECK(combine(nat_monoid(), Element{2}, Element{3}) == Element{5});
  CHECK(combine(nat_monoid(2), Element{1, 0}, Element{0, 2}) == Element{1, 2});
  CHECK(combine(int_monoid(), Element{-4}, Element{4}) == Element{0});
}

TEST_CASE("identity is the all-zeros tuple and a two-sided unit") {
  CHECK(identity(nat_monoid()) == Element{0});
  CHECK(identity(int_monoid(3)) == Element{0, 0, 0});
  const MonoidDescriptor m = int_monoid(3);
  CHECK(combine(m, identity(m), identity(m)) == identity(m));

  Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    const Element a = rng.element(m, -100, 100);
    CHECK(combine(m, a, identity(m)) == a);
    CHECK(combine(m, identity(m), a) == a);
  }
}

TEST_CASE("combine is commutative and associative on sampled triples") {
  Rng rng(102);
  for (const MonoidDescriptor& m : {nat_monoid(), int_monoid(), nat_monoid(2), int_monoid(3)}) {
    for (int i = 0; i < 100; ++i) {
      const Element a = rng.element(m, -50, 50);
      const Element b = rng.element(m, -50, 50);
      const Element c = rng.element(m, -50, 50);
      CHECK(combine(m, a, b) == combine(m, b, a));
      CHECK(combine(m, combine(m, a, b), c) == combine(m, a, combine(m, b, c)));
    }
  }
}

TEST_CASE("combine rejects mismatched and invalid elements") {
  CHECK_THROWS_AS(combine(nat_monoid(2), Element{1}, Element{1, 2}), ValidationError);
  CHECK_THROWS_AS(combine(nat_monoid(), Element{-1}, Element{2}), ValidationError);
  CHECK_NOTHROW(combine(int_monoid(), Element{-1}, Element{2}));
}

TEST_CASE("combine checks for integer overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(combine(nat_monoid(), Element{big}, Element{1}), OverflowError);
  CHECK_THROWS_AS(combine(int_monoid(), Element{-big}, Element{-big}), OverflowError);
  CHECK(combine(nat_monoid(), Element{big - 1}, Element{1}) == Element{big});
}

TEST_CASE("decompositions of 2 in N") {
  const auto pairs = decompositions(nat_monoid(), Element{2});
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair{Element{0}, Element{2}});
  CHECK(pairs[1] == std::pair{Element{1}, Element{1}});
  CHECK(pairs[2] == std::pair{Element{2}, Element{0}});
}

TEST_CASE("only the identity decomposes 0") {
  const auto pairs = decompositions(nat_monoid(), Element{0});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair{Element{0}, Element{0}});
}

TEST_CASE("decompositions match the exhaustive scan on N^k") {
  for (const MonoidDescriptor& m : {nat_monoid(), nat_monoid(2), nat_monoid(3)}) {
    Rng rng(103);
    for (int i = 0; i < 20; ++i) {
      const Element z = rng.element(m, 0, 4);
      const auto got = decompositions(m, z);
      const auto expected = testing::decompositions_bruteforce(m, z);
      CHECK(got == expected);

      // product formula and recombination
      std::size_t count = 1;
      for (std::int64_t c : z.coords) count *= static_cast<std::size_t>(c) + 1;
      CHECK(got.size() == count);
      for (const auto& [x, y] : got) CHECK(combine(m, x, y) == z);
    }
  }
}

TEST_CASE("fiber of (1,1) in N^2 has four ordered pairs") {
  CHECK(decompositions(nat_monoid(2), Element{1, 1}).size() == 4);
}

TEST_CASE("decompositions is rejected on infinite-fiber monoids") {
  CHECK_THROWS_AS(decompositions(int_monoid(), Element{2}), ValidationError);
  CHECK_THROWS_AS(decompositions(int_monoid(2), Element{0, 0}), ValidationError);
}

TEST_CASE("oversized fibers are rejected rather than enumerated") {
  CHECK_THROWS_AS(decompositions(nat_monoid(), Element{std::int64_t{1} << 40}), ValidationError);
}
