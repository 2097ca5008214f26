// Unit tests for the 64-dimensional spinor four-tuple module: labels
// and parsing, weights and their scalar products, the Clifford/half-spin
// matrix model, Dynkin schemes, and the identification with the
// degree-1 component of the graded algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "spinorbit/e8.hpp"
#include "spinorbit/spinor.hpp"

using namespace spinorbit;

namespace {

const char* kExample =
    "()x1+(1,3,4,5)x1+(1,2,3,4)x2+(1,5)x3+(2,3,4,5)x3+(2,3)x4+(4,5)x4"
    "+(1,2,4,5)x4";

}  // namespace

TEST_CASE("the 64 labels are canonical and indexable") {
  const auto& labels = all_labels();
  REQUIRE(labels.size() == 64);
  std::set<std::string> seen;
  for (size_t k = 0; k < labels.size(); ++k) {
    CHECK(label_index(labels[k]) == static_cast<int>(k));
    CHECK(seen.insert(labels[k].str()).second);
    CHECK(labels[k].set.size() % 2 == 0);
    CHECK(labels[k].j >= 1);
    CHECK(labels[k].j <= 4);
  }
  SpinorLabel bogus;
  bogus.set = {1, 2, 3};  // odd size is not a label
  bogus.j = 1;
  CHECK(label_index(bogus) == -1);
}

TEST_CASE("tensor text parses and round-trips") {
  auto x = parse_spinor(kExample);
  REQUIRE(x.has_value());
  CHECK(x->coords.size() == 8);
  auto again = parse_spinor(x->str());
  REQUIRE(again.has_value());
  CHECK(*again == *x);

  auto scaled = parse_spinor("-2*(1,2)x1+1/3*(3,4)x2-i*()x3");
  REQUIRE(scaled.has_value());
  CHECK(scaled->coords.size() == 3);
  auto back = parse_spinor(scaled->str());
  REQUIRE(back.has_value());
  CHECK(*back == *scaled);

  CHECK_FALSE(parse_spinor("").has_value());
  CHECK_FALSE(parse_spinor("(1,2)").has_value());
  CHECK_FALSE(parse_spinor("(1,2,3)x1").has_value());
  CHECK_FALSE(parse_spinor("(1,2)x9").has_value());
  auto cancel = parse_spinor("()x1-()x1");
  REQUIRE(cancel.has_value());
  CHECK(cancel->is_zero());
}

TEST_CASE("weights pair integrally with the expected value set") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 63);
  for (int trial = 0; trial < 200; ++trial) {
    int a = pick(rng), b = pick(rng);
    GaussRat d = weight_dot(weight_of(a), weight_of(b));
    if (a == b) {
      CHECK(d == GaussRat(2));
    } else {
      CHECK((d == GaussRat(1) || d == GaussRat(0) || d == GaussRat(-1)));
    }
  }
}

TEST_CASE("Clifford generators anticommute correctly") {
  // a sample of pairs; the full 55-pair sweep runs in the verifier
  Mat id = Mat::identity(32);
  Mat zero(32, 32);
  CHECK(gamma_action(1) * gamma_action(10) +
            gamma_action(10) * gamma_action(1) ==
        id);  // dual pair: contraction against wedge by the same vector
  CHECK(gamma_action(1) * gamma_action(7) + gamma_action(7) * gamma_action(1) ==
        zero);
  CHECK(gamma_action(2) * gamma_action(2) == zero);
  CHECK(gamma_action(8) * gamma_action(8) == zero);
}

TEST_CASE("the half-spin map is a bracket homomorphism on a sample") {
  const auto& basis = o10_basis();
  REQUIRE(basis.size() == 45);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, 44);
  for (int trial = 0; trial < 12; ++trial) {
    const Mat& a = basis[static_cast<size_t>(pick(rng))];
    const Mat& b = basis[static_cast<size_t>(pick(rng))];
    Mat lhs = rho(a * b - b * a);
    Mat rhs = rho(a) * rho(b) - rho(b) * rho(a);
    CHECK(lhs == rhs);
  }
  CHECK(sl4_basis().size() == 15);
}

TEST_CASE("Dynkin schemes of tensors") {
  SpinorTensor single = SpinorTensor::basis(0);
  DynkinScheme s1 = dynkin_scheme(single);
  CHECK(s1.nodes.size() == 1);
  CHECK(s1.edges.empty());

  auto x = parse_spinor(kExample);
  REQUIRE(x.has_value());
  DynkinScheme s8 = dynkin_scheme(*x);
  CHECK(s8.nodes.size() == 8);
  CHECK(s8.edges.size() == 8);
  int dashed = 0;
  for (const auto& e : s8.edges) {
    CHECK(e.a < e.b);
    if (e.dashed) ++dashed;
  }
  CHECK(dashed == 1);
  CHECK(s8.dot().find("style=dashed") != std::string::npos);
  CHECK(s8.dot().rfind("graph", 0) == 0);

  CHECK_THROWS(dynkin_scheme(SpinorTensor::zero()));
}

TEST_CASE("identification with the degree-1 component") {
  const G1Dictionary& dict = G1Dictionary::get();
  const E8& e8 = E8::get();
  REQUIRE(dict.images().size() == 64);

  // every image is a degree-1 root line, and unmap inverts map
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(0, 63);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SpinorTensor x;
    for (int terms = 0; terms < 4; ++terms)
      x.set(pick(rng), GaussRat(coeff(rng)));
    LieElement lifted = dict.map(x);
    int deg = -1;
    CHECK((lifted.is_zero() || (lifted.homogeneous_degree(deg) && deg == 1)));
    auto back = dict.unmap(lifted);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }

  // label_of_root is inverse to the image support
  for (int l = 0; l < 64; ++l) {
    const LieElement& img = dict.images()[static_cast<size_t>(l)];
    REQUIRE(img.coords.size() == 1);
    int root = img.coords.front().first - 8;
    CHECK(e8.degree_of_basis(img.coords.front().first) == 1);
    CHECK(dict.label_of_root(root) == l);
  }

  // degree-0 elements are not in the module image
  CHECK_FALSE(dict.unmap(LieElement::basis(0)).has_value());
}

TEST_CASE("structural verifiers") {
  CHECK(verify_spin_model().all_ok());
  CHECK(verify_weight_dictionary().all_ok());
}
