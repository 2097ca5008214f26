// Unit tests for orbit analysis: Pfaffians and characteristic
// polynomials, semisimplicity/nilpotency certificates, the degree-1
// Jordan decomposition, centralizer signatures, sl2 completion,
// characteristics (absolute and relative), and the property drivers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "spinorbit/e8.hpp"
#include "spinorbit/orbit.hpp"
#include "spinorbit/spinor.hpp"
#include "spinorbit/tables.hpp"
#include "spinorbit/upoly.hpp"

using namespace spinorbit;

namespace {

LieElement el(const std::string& text) {
  auto x = parse_spinor(text);
  REQUIRE_MESSAGE(x.has_value(), "bad spinor text " << text);
  return G1Dictionary::get().map(*x);
}

Mat antisym(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      m.at(r, c) = GaussRat(d(rng));
      m.at(c, r) = -m.at(r, c);
    }
  return m;
}

GaussRat det_via_charpoly(const Mat& m) {
  UPoly p = char_poly(m);  // det(tI - m); det m = (-1)^n * p(0)
  GaussRat c0 = p.eval(GaussRat(0));
  return (m.rows % 2 == 0) ? c0 : -c0;
}

}  // namespace

TEST_CASE("pfaffian squares to the determinant") {
  Mat two(2, 2);
  two.at(0, 1) = GaussRat(5);
  two.at(1, 0) = GaussRat(-5);
  CHECK(pfaffian_of(two) == GaussRat(5));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    Mat m = antisym(6, rng);
    GaussRat pf = pfaffian_of(m);
    CHECK(pf * pf == det_via_charpoly(m));
  }
  CHECK_THROWS_AS(pfaffian_of(Mat(3, 3)), std::invalid_argument);
}

TEST_CASE("characteristic polynomial of small operators") {
  Mat d(2, 2);
  d.at(0, 0) = GaussRat(1);
  d.at(1, 1) = GaussRat(2);
  UPoly expect = UPoly({GaussRat(-1), GaussRat(1)}) *
                 UPoly({GaussRat(-2), GaussRat(1)});
  CHECK(char_poly(d) == expect);
  // companion matrix of t^2 + 1
  Mat c(2, 2);
  c.at(0, 1) = GaussRat(-1);
  c.at(1, 0) = GaussRat(1);
  CHECK(char_poly(c) == UPoly({GaussRat(1), GaussRat(0), GaussRat(1)}));
}

TEST_CASE("semisimplicity and nilpotency certificates") {
  const E8& e8 = E8::get();
  LieElement cartan = LieElement::basis(0);
  LieElement rootvec = LieElement::basis(e8.component(1).front());
  CHECK(is_semisimple(cartan));
  CHECK_FALSE(is_nilpotent(cartan));
  CHECK(is_nilpotent(rootvec));
  CHECK_FALSE(is_semisimple(rootvec));
  CHECK(is_semisimple(LieElement::zero()));
  CHECK(is_nilpotent(LieElement::zero()));
}

TEST_CASE("Jordan decomposition in the degree-1 component") {
  LieElement p1 = el(cartan_p_texts()[0]);
  LieElement e = el("(1,4)x1");

  JordanParts nil = jordan_g1(e);
  CHECK(nil.s.is_zero());
  CHECK(nil.n == e);

  JordanParts semi = jordan_g1(p1);
  CHECK(semi.s == p1);
  CHECK(semi.n.is_zero());

  JordanParts mixed = jordan_g1(p1 + e);
  CHECK(mixed.s == p1);
  CHECK(mixed.n == e);
  CHECK(bracket(mixed.s, mixed.n).is_zero());

  CHECK_THROWS_AS(jordan_g1(LieElement::basis(0)), std::invalid_argument);
}

TEST_CASE("centralizer of the first base point") {
  const E8& e8 = E8::get();
  LieElement p1 = el(cartan_p_texts()[0]);
  std::vector<LieElement> z0 = centralizer_in(p1, e8.component(0));
  CHECK(z0.size() == 15);
  for (const LieElement& y : z0) CHECK(bracket(p1, y).is_zero());

  Signature sig = signature_of(z0);
  CHECK(sig.str() == "2A1+A2+t1");
  auto printed = parse_signature("2A1+A2+T1");
  REQUIRE(printed.has_value());
  CHECK(sig == *printed);
}

TEST_CASE("signature text round-trips") {
  auto s = parse_signature("2A1+t2+u3");
  REQUIRE(s.has_value());
  CHECK(s->simple_types == std::vector<std::string>{"A1", "A1"});
  CHECK(s->toral_dim == 2);
  CHECK(s->nilpotent_dim == 3);
  CHECK(s->str() == "2A1+t2+u3");

  auto trivial = parse_signature("1");
  REQUIRE(trivial.has_value());
  CHECK(trivial->str() == "0");
  CHECK(parse_signature("0").has_value());
  CHECK_FALSE(parse_signature("Z5").has_value());
  CHECK_FALSE(parse_signature("").has_value());
}

TEST_CASE("sl2 completion and the absolute characteristic") {
  LieElement e = el("(3,5)x1+(1,3)x4");
  Sl2Triple t = sl2_complete(e);
  CHECK(bracket(t.h, t.e) == t.e * GaussRat(2));
  CHECK(bracket(t.h, t.f) == t.f * GaussRat(-2));
  CHECK(bracket(t.e, t.f) == t.h);
  int deg = -1;
  CHECK((t.h.homogeneous_degree(deg) && deg == 0));
  CHECK((t.f.homogeneous_degree(deg) && deg == 3));

  std::array<GaussRat, 8> ch = characteristic(t.h);
  std::array<GaussRat, 8> expect = {GaussRat(0), GaussRat(0), GaussRat(1),
                                    GaussRat(0), GaussRat(0), GaussRat(0),
                                    GaussRat(1), GaussRat(0)};
  CHECK(ch == expect);

  CHECK_THROWS(sl2_complete(el(cartan_p_texts()[0])));  // not nilpotent
  CHECK_THROWS(sl2_complete(LieElement::zero()));
}

TEST_CASE("the relative frame and relative characteristics") {
  const RelativeFrame& frame = RelativeFrame::get();
  CHECK(frame.p1() == el(cartan_p_texts()[0]));
  CHECK(frame.z0().size() == 15);
  CHECK(frame.ideals()[0].size() == 3);
  CHECK(frame.ideals()[1].size() == 3);
  CHECK(frame.ideals()[2].size() == 8);
  CHECK_FALSE(frame.center().is_zero());

  LieElement e = el("(1,4)x1");
  Sl2Triple t = sl2_complete_in(e, frame.z3());
  std::array<GaussRat, 5> raw = frame.raw_characteristic(t.h);
  std::array<GaussRat, 5> expect = {GaussRat(0), GaussRat(1), GaussRat(1),
                                    GaussRat(0),
                                    GaussRat(mpq_class(-3, 2))};
  CHECK(raw == expect);
}

TEST_CASE("orbit dimensions inside a centralizer") {
  LieElement p1 = el(cartan_p_texts()[0]);
  LieElement e = el("(1,4)x1");
  CHECK(orbit_dim_in_centralizer(p1, e) == 4);
  // elements that do not commute are rejected
  CHECK_THROWS_AS(orbit_dim_in_centralizer(p1, el("(3,5)x1+(1,3)x4")),
                  std::invalid_argument);
}

TEST_CASE("tabulated mixed-element data is well-formed") {
  for (int i = 2; i <= 8; ++i) {
    const MixedTable& t = mixed_table(i);
    CHECK(t.index == i);
    CHECK(t.base_coeffs.size() == 4);
    CHECK_FALSE(t.rows.empty());
    for (const MixedRow& row : t.rows) {
      CHECK_FALSE(row.element.empty());
      CHECK(row.dim >= 0);
      if (i == 8) CHECK(row.char_quadruple.size() == 4);
    }
  }
  CHECK(mixed_table(8).rows.size() == 35);
}

TEST_CASE("verification drivers on a reduced budget") {
  CHECK(verify_mixed_table(2).all_ok());
  CHECK(verify_cartan_subspace().all_ok());
  CHECK(verify_jordan_random(25, 20260815).all_ok());
  CHECK(verify_characteristic_properties(6, 20260815).all_ok());
}
