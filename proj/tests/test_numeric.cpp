#include "cusplat/numeric.hpp"

#include "doctest.h"

using namespace cusplat;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("0.65") == Rat(13, 20));
  CHECK(parse_rat("-0.5") == Rat(-1, 2));
  CHECK(parse_rat("2.8") == Rat(14, 5));
  CHECK(fmt_rat(Rat(3, 4)) == "3/4");
  CHECK(fmt_rat(Rat(-2)) == "-2");
  CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("floor, ceil, round") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_round(Rat(7, 2)) == 4);
  CHECK(rat_round(Rat(-7, 2)) == -3);
  CHECK(rat_round(Rat(1, 3)) == 0);
}

TEST_CASE("surd arithmetic and ordering") {
  Surd x(Rat(1), Rat(1), 7);  // 1 + sqrt(7)
  Surd y(Rat(4));
  CHECK(x < y);                      // 3.645 < 4
  CHECK((x * x) == Surd(Rat(8), Rat(2), 7));
  CHECK((x - x).is_zero());
  Surd z(Rat(-5), Rat(2), 7);  // 2 sqrt7 - 5 ~ 0.29
  CHECK(z.sign() == 1);
  Surd w(Rat(-6), Rat(2), 7);  // ~ -0.708
  CHECK(w.sign() == -1);
  CHECK((x * x.inverse()) == Surd(1));
  // d = 1 folds into the rational part.
  Surd f(Rat(2), Rat(3), 1);
  CHECK(f.is_rational());
  CHECK(f.rational() == Rat(5));
}

TEST_CASE("surd parsing") {
  Surd a = parse_surd("3/2 s", 7);
  CHECK(a == Surd(Rat(0), Rat(3, 2), 7));
  CHECK(parse_surd("2s", 3) == Surd(Rat(0), Rat(2), 3));
  CHECK(parse_surd("-1+2s", 3) == Surd(Rat(-1), Rat(2), 3));
  CHECK(parse_surd("14/5", 7) == Surd(Rat(14, 5)));
  CHECK(parse_surd("0.65", 7) == Surd(Rat(13, 20)));
  CHECK(parse_surd("s", 7) == Surd(Rat(0), Rat(1), 7));
  CHECK(parse_surd("-s", 7) == Surd(Rat(0), Rat(-1), 7));
}
