// Unit tests for multivariate polynomials: ring arithmetic in the
// graded-lex term order, substitution (linear and general), exact
// division, determinants of polynomial matrices, and Hessians.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"
#include "spinorbit/mpoly.hpp"

using namespace spinorbit;

namespace {

const std::vector<std::string> XY = {"x", "y"};

MPoly X() { return MPoly::variable(XY, 0); }
MPoly Y() { return MPoly::variable(XY, 1); }
MPoly C(long v) { return MPoly::constant(XY, GaussRat(v)); }

}  // namespace

TEST_CASE("ring arithmetic and degrees") {
  MPoly p = X() * X() + Y() * C(2);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(MPoly(XY).total_degree() == -1);
  MPoly q = (X() + Y()).pow(2);
  CHECK(q == X() * X() + X() * Y() * C(2) + Y() * Y());
  CHECK((p * q).total_degree() == 4);
  CHECK(-p + p == MPoly(XY));
}

TEST_CASE("evaluation and derivatives") {
  MPoly p = X() * X() * Y() - Y() * C(3);  // x^2 y - 3y
  Vec at = {GaussRat(2), GaussRat(5)};
  CHECK(p.eval(at) == GaussRat(4 * 5 - 15));
  CHECK(p.derivative(0) == X() * Y() * C(2));
  CHECK(p.derivative(1) == X() * X() - C(3));
  CHECK(p.derivative(0).derivative(1) == X() * C(2));
}

TEST_CASE("linear substitution matches explicit images") {
  MPoly p = X() * X() + X() * Y();
  // x -> x + y, y -> 2y
  Mat m(2, 2);
  m.at(0, 0) = GaussRat(1);
  m.at(0, 1) = GaussRat(1);
  m.at(1, 1) = GaussRat(2);
  MPoly via_mat = poly_substitute(p, m);
  MPoly via_images =
      poly_substitute(p, std::vector<MPoly>{X() + Y(), Y() * C(2)});
  CHECK(via_mat == via_images);
  CHECK(via_mat == (X() + Y()).pow(2) + (X() + Y()) * Y() * C(2));
}

TEST_CASE("general substitution composes") {
  MPoly p = X() * Y();
  MPoly sub = poly_substitute(p, std::vector<MPoly>{X() + C(1), Y() - C(1)});
  CHECK(sub == X() * Y() - X() + Y() - C(1));
}

TEST_CASE("exact division succeeds exactly on multiples") {
  MPoly d = X() + Y();
  MPoly p = d * (X() * X() - Y() + C(5));
  auto q = try_divide(p, d);
  REQUIRE(q.has_value());
  CHECK(*q * d == p);
  CHECK_FALSE(try_divide(p + C(1), d).has_value());
}

TEST_CASE("polynomial determinants") {
  // det [[x, y], [y, x]] = x^2 - y^2
  std::vector<std::vector<MPoly>> m2 = {{X(), Y()}, {Y(), X()}};
  CHECK(poly_determinant(m2) == X() * X() - Y() * Y());
  // block upper-triangular 3x3
  std::vector<std::vector<MPoly>> m3 = {
      {X(), C(1), C(0)}, {MPoly(XY), Y(), C(2)}, {MPoly(XY), MPoly(XY), X()}};
  CHECK(poly_determinant(m3) == X() * Y() * X());
}

TEST_CASE("hessian of a quadratic form is its constant coefficient matrix") {
  // f = x^2 + 3xy + 5y^2; Hessian = [[2,3],[3,10]]
  MPoly f = X() * X() + X() * Y() * C(3) + Y() * Y() * C(5);
  auto h = hessian_matrix(f);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == C(2));
  CHECK(h[0][1] == C(3));
  CHECK(h[1][0] == C(3));
  CHECK(h[1][1] == C(10));
  CHECK(poly_determinant(h) == C(2 * 10 - 9));
}

TEST_CASE("canonical text is stable") {
  MPoly p = X() * X() - Y() * C(2) + C(1);
  CHECK(p.str() == "x^2-2*y+1");
  CHECK(MPoly(XY).str() == "0");
  MPoly q = X() * GaussRat::i() * GaussRat(-1);
  CHECK(q.str() == "-i*x");
}
