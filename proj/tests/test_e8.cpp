// Unit tests for the graded Lie-algebra model: root inventory, bracket
// antisymmetry and Jacobi samples, the Killing form against ad-traces,
// the order-4 automorphism, element arithmetic, root-system
// recognition, and the pinned grading dump.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinorbit/e8.hpp"

using namespace spinorbit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LieElement basis_bracket(int bi, int bj) {
  return bracket(LieElement::basis(bi), LieElement::basis(bj));
}

}  // namespace

TEST_CASE("root inventory") {
  const E8& e8 = E8::get();
  CHECK(e8.roots().size() == 240);
  int positives = 0;
  for (int r = 0; r < E8::NROOTS; ++r) {
    CHECK(e8.negative_of(e8.negative_of(r)) == r);
    CHECK(e8.negative_of(r) != r);
    if (e8.is_positive(r)) ++positives;
    CHECK(e8.pairing(r, r) == 2);
    CHECK(e8.root_index(e8.roots()[static_cast<size_t>(r)].simple) == r);
  }
  CHECK(positives == 120);
  CHECK(e8.describe_root(0).front() == '(');
}

TEST_CASE("grading splits the algebra") {
  const E8& e8 = E8::get();
  CHECK(e8.component(0).size() == 60);
  CHECK(e8.component(1).size() == 64);
  CHECK(e8.component(2).size() == 60);
  CHECK(e8.component(3).size() == 64);
  for (int b : e8.component(2)) CHECK(e8.theta_scalar(b) == GaussRat(-1));
  for (int b : e8.component(1)) CHECK(e8.theta_scalar(b) == GaussRat::i());
  CHECK(e8.g0_simple_roots().size() == 8);
}

TEST_CASE("bracket antisymmetry and Jacobi on a random sample") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(0, E8::DIM - 1);
  for (int trial = 0; trial < 120; ++trial) {
    int bi = pick(rng), bj = pick(rng), bk = pick(rng);
    LieElement x = LieElement::basis(bi);
    LieElement y = LieElement::basis(bj);
    LieElement z = LieElement::basis(bk);
    CHECK(bracket(x, y) + bracket(y, x) == LieElement::zero());
    LieElement jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                     bracket(bracket(z, x), y);
    CHECK(jac == LieElement::zero());
  }
}

TEST_CASE("Killing form equals the trace of ad products on a sample") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, E8::DIM - 1);
  const E8& e8 = E8::get();
  for (int trial = 0; trial < 10; ++trial) {
    int bi = pick(rng), bj = pick(rng);
    GaussRat trace(0);
    for (int b = 0; b < E8::DIM; ++b) {
      LieElement around =
          bracket(LieElement::basis(bi),
                  bracket(LieElement::basis(bj), LieElement::basis(b)));
      trace += around.coeff(b);
    }
    CHECK(e8.killing_basis(bi, bj) == trace);
    CHECK(killing(LieElement::basis(bi), LieElement::basis(bj)) == trace);
  }
}

TEST_CASE("element arithmetic and coordinates") {
  LieElement x = LieElement::basis(3) * GaussRat(2) - LieElement::basis(10);
  CHECK(x.coeff(3) == GaussRat(2));
  CHECK(x.coeff(10) == GaussRat(-1));
  CHECK(x.coeff(5).is_zero());
  CHECK(LieElement::from_vec(x.to_vec()) == x);

  std::vector<int> labels = {3, 10};
  auto coords = x.to_vec_in(labels);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == GaussRat(2));
  CHECK((*coords)[1] == GaussRat(-1));
  CHECK(LieElement::from_vec_in(*coords, labels) == x);
  CHECK_FALSE(x.to_vec_in({3}).has_value());

  x.set(10, GaussRat(0));
  int deg = -1;
  CHECK(x.homogeneous_degree(deg));
  CHECK(deg == 0);  // basis 3 is a Cartan element
}

TEST_CASE("ad matrices respect the grading") {
  const E8& e8 = E8::get();
  // a degree-1 element maps degree 0 into degree 1
  LieElement y = LieElement::basis(e8.component(1).front());
  SparseMat m = ad_matrix(y, e8.component(0), e8.component(1));
  CHECK(m.rows == 64);
  CHECK(m.cols == 60);
  CHECK_THROWS_AS(ad_matrix(y, e8.component(0), e8.component(2)),
                  GradingViolation);
  CHECK(ad_matrix_full(y).rows == E8::DIM);
  CHECK(all_basis_labels().size() == E8::DIM);
}

TEST_CASE("simple-type recognition") {
  auto cartan = [](std::vector<std::vector<int>> rows) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows.size(); ++c)
        m.at(static_cast<int>(r), static_cast<int>(c)) = GaussRat(rows[r][c]);
    return m;
  };
  CHECK(cartan_type(cartan({{2}})) == std::vector<std::string>{"A1"});
  CHECK(cartan_type(cartan({{2, -1}, {-1, 2}})) ==
        std::vector<std::string>{"A2"});
  CHECK(cartan_type(cartan({{2, -1, 0, 0},
                            {-1, 2, -1, -1},
                            {0, -1, 2, 0},
                            {0, -1, 0, 2}})) ==
        std::vector<std::string>{"D4"});
  // two disjoint A1 components, sorted output
  CHECK(cartan_type(cartan({{2, 0}, {0, 2}})) ==
        std::vector<std::string>{"A1", "A1"});
  const E8& e8 = E8::get();
  CHECK(cartan_type(cartan_matrix_of(e8.g0_simple_roots())) ==
        std::vector<std::string>{"A3", "D5"});
}

TEST_CASE("grading verifier and pinned dump") {
  Report rep = verify_grading();
  CHECK(rep.all_ok());
  CHECK(grading_dump() == read_file(std::string(SPINORBIT_GOLDEN_DIR) +
                                    "/grading.txt"));
}
