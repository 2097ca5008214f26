// Unit tests for the order-46080 reflection group: generator
// involutions, exact closure, the reflection/hyperplane inventory, the
// nine tabulated subgroups with fixed spaces and normalizers, and
// stabilizer-based stratum classification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"
#include "spinorbit/reflgroup.hpp"

using namespace spinorbit;

namespace {

Vec negate(const Vec& v) {
  Vec out = v;
  for (auto& z : out) z = -z;
  return out;
}

GaussRat dot(const Vec& a, const Vec& b) {
  GaussRat s(0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

TEST_CASE("generators are involutions and words multiply") {
  const auto& gens = w0_generators();
  W0Elem id = W0Elem::identity();
  for (const W0Elem& g : gens) {
    CHECK(g * g == id);
    CHECK(g != id);
  }
  CHECK(w0_word({}) == id);
  CHECK(w0_word({1, 1}) == id);
  CHECK(w0_word({1, 2}) == gens[0] * gens[1]);
  CHECK(w0_word({2, 1}) * w0_word({1, 2}) == id);
}

TEST_CASE("dyadic matrix encoding round-trips") {
  const auto& gens = w0_generators();
  for (const W0Elem& g : gens) {
    auto back = W0Elem::from_mat(g.to_mat());
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
  Mat bad = Mat::identity(4);
  bad.at(0, 0) = GaussRat(mpq_class(1, 3));  // not dyadic
  CHECK_FALSE(W0Elem::from_mat(bad).has_value());
}

TEST_CASE("closure of a single generator") {
  std::vector<W0Elem> two = generate({w0_generators()[0]});
  CHECK(two.size() == 2);
}

TEST_CASE("full group closure and multiplication tables") {
  const W0Group& g = W0Group::get();
  CHECK(g.order() == 46080);
  CHECK(g.contains(W0Elem::identity()));

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pick(0, 46079);
  for (int trial = 0; trial < 50; ++trial) {
    int a = pick(rng), b = pick(rng);
    int ab = g.mul(a, b);
    CHECK(g.elements()[static_cast<size_t>(a)] *
              g.elements()[static_cast<size_t>(b)] ==
          g.elements()[static_cast<size_t>(ab)]);
    CHECK(g.mul(g.inv(a), a) ==
          g.index_of(W0Elem::identity()));
  }
}

TEST_CASE("sixty reflections across sixty hyperplanes") {
  const W0Group& g = W0Group::get();
  REQUIRE(g.reflections().size() == 60);
  CHECK(g.hyperplanes().size() == 60);
  W0Elem id = W0Elem::identity();
  for (const W0Reflection& r : g.reflections()) {
    const W0Elem& w = g.elements()[static_cast<size_t>(r.elem)];
    CHECK(w * w == id);
    Mat m = w.to_mat();
    CHECK(m.apply(r.root) == negate(r.root));       // root is inverted
    CHECK_FALSE(dot(r.covector, r.root).is_zero()); // root is off the wall
    CHECK(r.hyperplane >= 0);
    CHECK(r.hyperplane < 60);
  }
}

TEST_CASE("tabulated subgroups have the tabulated sizes and fixed spaces") {
  const auto& subs = table1_subgroups();
  const long sizes[9] = {1, 2, 4, 6, 16, 12, 24, 192, 46080};
  const int fixed_dims[9] = {4, 3, 2, 2, 2, 1, 1, 1, 0};
  const W0Group& g = W0Group::get();
  int id_idx = g.index_of(W0Elem::identity());
  for (int i = 0; i < 9; ++i) {
    const SubgroupW0& m = subs[static_cast<size_t>(i)];
    CHECK(static_cast<long>(m.order()) == sizes[i]);
    CHECK(m.contains(id_idx));
    CHECK(fixed_space(m).size() ==
          static_cast<size_t>(fixed_dims[i]));
  }
  CHECK(conjugate_subgroups(subs[1], subs[1]));
  CHECK_FALSE(conjugate_subgroups(subs[1], subs[2]));
  CHECK(normalizer_order(subs[1]) == 2 * 384);  // |N(M)| = |M| * |N(M)/M|
}

TEST_CASE("generating sets regenerate their subgroup") {
  const auto& subs = table1_subgroups();
  const W0Group& g = W0Group::get();
  for (int i : {1, 3, 5}) {
    const SubgroupW0& m = subs[static_cast<size_t>(i)];
    std::vector<W0Elem> gens;
    for (int e : generating_set(m))
      gens.push_back(g.elements()[static_cast<size_t>(e)]);
    CHECK(generate(gens).size() == m.order());
  }
}

TEST_CASE("word-generated subgroups live inside the group") {
  SubgroupW0 m = subgroup_from_words({{1}, {2}});
  const W0Group& g = W0Group::get();
  CHECK(m.order() >= 4);
  for (int e : m.elems) {
    CHECK(e >= 0);
    CHECK(e < static_cast<int>(g.order()));
  }
}

TEST_CASE("stabilizers classify points into strata") {
  // certifiably generic: every wall covector has entries of modulus
  // at most 2, so it cannot vanish on a geometric progression in 10
  Vec generic = {GaussRat(1), GaussRat(10), GaussRat(100), GaussRat(1000)};
  const W0Group& g = W0Group::get();
  for (const Vec& wall : g.hyperplanes())
    REQUIRE_FALSE(dot(wall, generic).is_zero());
  CHECK(stabilizer(generic).order() == 1);
  CHECK(stratum_of(generic) == 1);

  Vec axis = {GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0)};
  SubgroupW0 stab = stabilizer(axis);
  CHECK(stab.order() == 192);
  CHECK(stratum_of(axis) == 8);
  CHECK(stabilizer_raw(axis).order() == stab.order());

  Vec origin(4, GaussRat(0));
  CHECK(stratum_of(origin) == 9);
}
