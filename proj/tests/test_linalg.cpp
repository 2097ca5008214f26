// Unit tests for exact dense/sparse linear algebra: products, inverses,
// reduced echelon forms, kernels, linear solving, incremental span
// tracking, and Krylov minimal polynomials.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"
#include "spinorbit/upoly.hpp"

using namespace spinorbit;

namespace {

Mat random_mat(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = GaussRat(d(rng));
  return m;
}

}  // namespace

TEST_CASE("product, transpose, identity") {
  Mat a(2, 3), b(3, 2);
  int v = 1;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = GaussRat(v++);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) b.at(r, c) = GaussRat(v++);
  Mat ab = a * b;
  CHECK(ab.rows == 2);
  CHECK(ab.cols == 2);
  CHECK(ab.at(0, 0) == GaussRat(7 + 2 * 9 + 3 * 11));
  CHECK(a.transpose().at(2, 1) == a.at(1, 2));
  CHECK(Mat::identity(3) * b == b);
}

TEST_CASE("inverse round-trips and detects singularity") {
  std::mt19937_64 rng(11);
  Mat m = random_mat(4, rng);
  m.at(0, 0) += GaussRat(9);  // keep it comfortably nonsingular
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Mat::identity(4));
  CHECK(m * *inv == Mat::identity(4));

  Mat sing(2, 2);
  sing.at(0, 0) = GaussRat(1);
  sing.at(0, 1) = GaussRat(2);
  sing.at(1, 0) = GaussRat(2);
  sing.at(1, 1) = GaussRat(4);
  CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("rref reaches the unique reduced form") {
  Mat m(3, 4);
  // rows: r2 = 2*r1, plus an independent third row
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = GaussRat(c + 1);
    m.at(1, c) = GaussRat(2 * (c + 1));
    m.at(2, c) = GaussRat(c * c);
  }
  RrefResult rr = rref(m);
  CHECK(rr.rank == 2);
  REQUIRE(rr.pivot_cols.size() == 2);
  for (int k = 0; k < rr.rank; ++k)
    CHECK(rr.echelon.at(k, rr.pivot_cols[static_cast<size_t>(k)]) ==
          GaussRat(1));
  RrefResult again = rref(rr.echelon);
  CHECK(again.echelon == rr.echelon);
  CHECK(rref(SparseMat::from_dense(m)).echelon == rr.echelon);
}

TEST_CASE("kernel vectors annihilate and span the right dimension") {
  Mat m(2, 4);
  m.at(0, 0) = GaussRat(1);
  m.at(0, 2) = GaussRat(-1);
  m.at(1, 1) = GaussRat(2);
  m.at(1, 3) = GaussRat(2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const Vec& v : ker) {
    Vec image = m.apply(v);
    for (const GaussRat& z : image) CHECK(z.is_zero());
  }
  CHECK(kernel_basis(SparseMat::from_dense(m)).size() == 2);
  CHECK(rank_of(m) == 2);
}

TEST_CASE("solve returns a witness exactly when one exists") {
  Mat m(2, 2);
  m.at(0, 0) = GaussRat(1);
  m.at(0, 1) = GaussRat(1);
  m.at(1, 0) = GaussRat(2);
  m.at(1, 1) = GaussRat(2);
  auto none = solve(m, Vec{GaussRat(1), GaussRat(3)});
  CHECK_FALSE(none.has_value());
  auto some = solve(m, Vec{GaussRat(3), GaussRat(6)});
  REQUIRE(some.has_value());
  Vec check = m.apply(*some);
  CHECK(check[0] == GaussRat(3));
  CHECK(check[1] == GaussRat(6));
}

TEST_CASE("sparse and dense agree") {
  std::mt19937_64 rng(5);
  Mat d = random_mat(6, rng);
  SparseMat s = SparseMat::from_dense(d);
  CHECK(s.dense() == d);
  CHECK(s.transpose().dense() == d.transpose());
  CHECK((s * s).dense() == d * d);
  Vec v(6);
  for (auto& z : v) z = GaussRat(std::uniform_int_distribution<int>(-3, 3)(rng));
  CHECK(s.apply(v) == d.apply(v));
  CHECK(s.nnz() <= 36);
}

TEST_CASE("span builder tracks rank and membership") {
  SpanBuilder sb(3);
  CHECK(sb.add(Vec{GaussRat(1), GaussRat(0), GaussRat(1)}));
  CHECK(sb.add(Vec{GaussRat(0), GaussRat(1), GaussRat(0)}));
  // dependent on the first two
  CHECK_FALSE(sb.add(Vec{GaussRat(1), GaussRat(1), GaussRat(1)}));
  CHECK(sb.rank() == 2);
  CHECK(sb.add(Vec{GaussRat(0), GaussRat(0), GaussRat(1)}));
  CHECK(sb.rank() == 3);
}

TEST_CASE("minimal polynomials of small operators") {
  // diagonal (1,1,2): minimal polynomial (t-1)(t-2)
  Mat d(3, 3);
  d.at(0, 0) = GaussRat(1);
  d.at(1, 1) = GaussRat(1);
  d.at(2, 2) = GaussRat(2);
  UPoly expect = UPoly({GaussRat(-1), GaussRat(1)}) *
                 UPoly({GaussRat(-2), GaussRat(1)});
  CHECK(min_poly(d).monic() == expect.monic());
  CHECK(min_poly(SparseMat::from_dense(d)).monic() == expect.monic());

  // nilpotent Jordan block: minimal polynomial t^2
  Mat j(2, 2);
  j.at(0, 1) = GaussRat(1);
  UPoly t2 = UPoly::t() * UPoly::t();
  CHECK(min_poly(j).monic() == t2);

  UPoly via_op = min_poly_of_operator(
      3, [&](const Vec& v) { return d.apply(v); });
  CHECK(via_op.monic() == expect.monic());
}
