// Unit tests for the exact Gaussian-rational scalar type: canonical
// construction, field arithmetic, conjugation and norm, the canonical
// text form, and the parser.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "spinorbit/gaussrat.hpp"

using spinorbit::GaussRat;
using spinorbit::parse_gaussrat;
using spinorbit::to_string;

TEST_CASE("construction canonicalizes rationals") {
  GaussRat z(2, 4, -2, 8);
  CHECK(z.re == mpq_class(1, 2));
  CHECK(z.im == mpq_class(-1, 4));
  CHECK(GaussRat(0).is_zero());
  CHECK(GaussRat(1).is_one());
  CHECK(GaussRat(mpq_class(7, 3)).is_real());
  CHECK_FALSE(GaussRat::i().is_real());
}

TEST_CASE("field arithmetic") {
  GaussRat a(mpq_class(1), mpq_class(2));   // 1 + 2i
  GaussRat b(mpq_class(3), mpq_class(-1));  // 3 - i
  CHECK(a * b == GaussRat(mpq_class(5), mpq_class(5)));
  CHECK(a + b == GaussRat(mpq_class(4), mpq_class(1)));
  CHECK(a - b == GaussRat(mpq_class(-2), mpq_class(3)));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK((a * b) / b == a);
  CHECK(a * a.inv() == GaussRat(1));
  CHECK(-a + a == GaussRat(0));
  CHECK_THROWS(GaussRat(0).inv());
}

TEST_CASE("conjugate and norm") {
  GaussRat a(mpq_class(2, 3), mpq_class(-5, 7));
  CHECK(a.conj().im == -a.im);
  CHECK(a * a.conj() == GaussRat(a.norm()));
  CHECK(a.norm() == mpq_class(2, 3) * mpq_class(2, 3) +
                        mpq_class(5, 7) * mpq_class(5, 7));
}

TEST_CASE("total order is consistent with equality") {
  GaussRat a(mpq_class(1), mpq_class(0));
  GaussRat b(mpq_class(1), mpq_class(1));
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK_FALSE(a < a);
  CHECK(a != b);
}

TEST_CASE("canonical text of the special values") {
  CHECK(to_string(GaussRat()) == "0");
  CHECK(to_string(GaussRat(3)) == "3");
  CHECK(to_string(GaussRat::i()) == "i");
  CHECK(to_string(-GaussRat::i()) == "-i");
  CHECK(to_string(GaussRat(mpq_class(-1, 2))) == "-1/2");
}

TEST_CASE("parser round-trips the canonical text") {
  std::vector<GaussRat> samples = {
      GaussRat(0),
      GaussRat(5),
      GaussRat(-7),
      GaussRat(mpq_class(3, 4)),
      GaussRat(mpq_class(-11, 6)),
      GaussRat::i(),
      -GaussRat::i(),
      GaussRat(mpq_class(0), mpq_class(5, 2)),
      GaussRat(mpq_class(1, 2), mpq_class(3, 4)),
      GaussRat(mpq_class(1), mpq_class(-1)),
      GaussRat(mpq_class(-2, 7), mpq_class(-9, 5)),
  };
  for (const GaussRat& z : samples) {
    auto back = parse_gaussrat(to_string(z));
    REQUIRE(back.has_value());
    CHECK(*back == z);
  }
}

TEST_CASE("parser accepts convenient variants") {
  CHECK(*parse_gaussrat("2*i") == GaussRat(mpq_class(0), mpq_class(2)));
  CHECK(*parse_gaussrat("1-i") == GaussRat(mpq_class(1), mpq_class(-1)));
  CHECK(*parse_gaussrat("1/2+3/4*i") ==
        GaussRat(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(*parse_gaussrat("-i") == -GaussRat::i());
}

TEST_CASE("parser rejects malformed text") {
  CHECK_FALSE(parse_gaussrat("").has_value());
  CHECK_FALSE(parse_gaussrat("x").has_value());
  CHECK_FALSE(parse_gaussrat("1+").has_value());
  CHECK_FALSE(parse_gaussrat("1/0").has_value());
  CHECK_FALSE(parse_gaussrat("2..5").has_value());
}
