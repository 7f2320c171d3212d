#include <doctest.h>

#include "opair/rational.hpp"

using namespace opair;

TEST_CASE("parsing accepts integers and fractions, normalizes to lowest terms") {
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-7") == Rat(-7));
  CHECK(rat_parse("4/6") == Rat(2, 3));
  CHECK(rat_parse("-4/6") == Rat(-2, 3));
  CHECK(rat_str(rat_parse("4/6")) == "2/3");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rat x(1, 3);
  Rat acc = 0;
  for (int i = 0; i < 3000; ++i) acc += x;
  CHECK(acc == Rat(1000));
  CHECK(Rat(1, 7) + Rat(1, 7) * Rat(6) == Rat(1));
}
