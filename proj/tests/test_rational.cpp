#include <doctest.h>

#include "grc/error.hpp"
#include "grc/rational.hpp"

using namespace grc;

TEST_CASE("rationals normalize and serialize canonically") {
  CHECK(rat_to_string(Rat(2, 4)) == "1/2");
  CHECK(rat_to_string(Rat(3, 1)) == "3");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * 3 == 1);
}

TEST_CASE("rational parsing accepts canonical and redundant forms") {
  CHECK(rat_from_string("1/2") == Rat(1, 2));
  CHECK(rat_from_string("2/4") == Rat(1, 2));
  CHECK(rat_from_string("-3/9") == Rat(-1, 3));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("0") == Rat(0));
}

TEST_CASE("rational parsing rejects everything else") {
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "+1", " 1", "1 ", "1/2/3", "--1", "0x1",
                          "1/-2", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(rat_from_string(bad), Error);
  }
  try {
    rat_from_string("1/0");
    FAIL("zero denominator accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("probability bounds are inclusive") {
  CHECK(is_probability(Rat(0)));
  CHECK(is_probability(Rat(1)));
  CHECK(is_probability(Rat(1, 3)));
  CHECK_FALSE(is_probability(Rat(-1, 3)));
  CHECK_FALSE(is_probability(Rat(4, 3)));
}

TEST_CASE("conversion to double is exact on dyadic values") {
  CHECK(rat_to_double(Rat(1, 2)) == 0.5);
  CHECK(rat_to_double(Rat(3, 8)) == 0.375);
  CHECK(rat_to_double(Rat(1, 3)) == doctest::Approx(1.0 / 3.0));
}
