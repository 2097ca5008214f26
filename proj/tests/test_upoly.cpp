// Unit tests for univariate polynomials over the Gaussian rationals:
// ring arithmetic, division with remainder, gcd/lcm, squarefree parts,
// root extraction with multiplicities, and the word-size-prime helpers
// used by the modular Jordan pipeline.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/upoly.hpp"

using namespace spinorbit;

namespace {

UPoly linear(const GaussRat& root) {  // t - root
  return UPoly({-root, GaussRat(1)});
}

}  // namespace

TEST_CASE("degree bookkeeping and trimming") {
  CHECK(UPoly::zero().deg() == -1);
  CHECK(UPoly::constant(GaussRat(4)).deg() == 0);
  CHECK(UPoly::t().deg() == 1);
  UPoly trimmed({GaussRat(1), GaussRat(0), GaussRat(0)});
  CHECK(trimmed.deg() == 0);
}

TEST_CASE("divmod is an exact division with remainder") {
  UPoly a = linear(GaussRat(1)) * linear(GaussRat(2)) * linear(GaussRat(3)) +
            UPoly::constant(GaussRat(7));
  UPoly b = linear(GaussRat(5)) * linear(GaussRat(-1));
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.deg() < b.deg());
}

TEST_CASE("gcd and lcm of factored polynomials") {
  UPoly p = linear(GaussRat(1)) * linear(GaussRat(2));
  UPoly q = linear(GaussRat(2)) * linear(GaussRat::i());
  UPoly g = gcd(p, q);
  CHECK(g.monic() == linear(GaussRat(2)));
  UPoly l = lcm(p, q);
  CHECK(l.deg() == 3);
  CHECK(divmod(l, p).second.is_zero());
  CHECK(divmod(l, q).second.is_zero());
}

TEST_CASE("squarefree detection and squarefree part") {
  UPoly sq = linear(GaussRat(1)) * linear(GaussRat(1)) * linear(GaussRat(3));
  CHECK_FALSE(squarefree(sq));
  UPoly part = squarefree_part(sq).monic();
  CHECK(part == (linear(GaussRat(1)) * linear(GaussRat(3))).monic());
  CHECK(squarefree(part));
  CHECK(squarefree(UPoly::t()));
}

TEST_CASE("roots in the scalar field, with multiplicity") {
  GaussRat half(mpq_class(1, 2));
  UPoly p = linear(half) * linear(half) * linear(-GaussRat::i()) *
            linear(GaussRat(-3));
  RootList rl = gauss_rational_roots(p);
  CHECK(rl.complete());
  REQUIRE(rl.roots.size() == 3);
  int total = 0;
  bool saw_half = false;
  for (const auto& [root, mult] : rl.roots) {
    total += mult;
    if (root == half) {
      saw_half = true;
      CHECK(mult == 2);
    }
  }
  CHECK(total == 4);
  CHECK(saw_half);
}

TEST_CASE("irreducible factors are reported as a remaining factor") {
  // t^2 - 2 has no roots in the scalar field
  UPoly p({GaussRat(-2), GaussRat(0), GaussRat(1)});
  RootList rl = gauss_rational_roots(p);
  CHECK(rl.roots.empty());
  CHECK_FALSE(rl.complete());
  CHECK(rl.remaining.deg() == 2);
  // t^2 + 1 splits as (t-i)(t+i)
  UPoly q({GaussRat(1), GaussRat(0), GaussRat(1)});
  RootList rq = gauss_rational_roots(q);
  CHECK(rq.complete());
  CHECK(rq.roots.size() == 2);
}

TEST_CASE("evaluation, derivative, inflate, primitive part") {
  UPoly p = linear(GaussRat(2)) * linear(GaussRat(-1));  // t^2 - t - 2
  CHECK(p.eval(GaussRat(2)).is_zero());
  CHECK(p.eval(GaussRat(0)) == GaussRat(-2));
  CHECK(p.derivative().eval(GaussRat(1)) == GaussRat(1));
  UPoly infl = p.inflate(3);
  CHECK(infl.deg() == 6);
  CHECK(infl.eval(GaussRat(0)) == p.eval(GaussRat(0)));
  UPoly frac({GaussRat(mpq_class(2, 3)), GaussRat(mpq_class(4, 3))});
  UPoly prim = frac.primitive_part();
  CHECK(prim == UPoly({GaussRat(1), GaussRat(2)}));
  CHECK_THROWS(UPoly::zero().monic());
}

TEST_CASE("split primes and reduction mod p") {
  // every table slot must yield a genuine prime in 1 (mod 4) with a
  // correct square root of -1; a bad slot silently corrupts (or hangs)
  // any modular computation that falls through to it
  std::vector<uint64_t> seen;
  for (int skip = 0; skip < 6; skip++) {
    auto [pk, rk] = split_prime(skip);
    CHECK(pk % 4 == 1);
    CHECK(pk < (1ULL << 31));
    CHECK((static_cast<__uint128_t>(rk) * rk + 1) % pk == 0);
    bool prime = pk % 2 != 0;
    for (uint64_t d = 3; prime && d * d <= pk; d += 2) prime = pk % d != 0;
    CHECK(prime);
    seen.push_back(pk);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

  auto [p, r] = split_prime();
  auto [p2, r2] = split_prime(1);
  CHECK(p2 != p);

  // (t - i)(t + i) reduces to (t - r)(t + r) mod (p, i - r)
  UPoly q({GaussRat(1), GaussRat(0), GaussRat(1)});
  auto fq = reduce_mod(q, p, r);
  REQUIRE(fq.has_value());
  CHECK(fq->deg() == 2);
  FpPoly lin;
  lin.p = p;
  lin.c = {p - r, 1};  // t - r
  FpPoly g = fp_gcd(*fq, lin);
  CHECK(g.deg() == 1);
  CHECK(fp_derivative(*fq).deg() == 1);
}

TEST_CASE("reduction fails cleanly when a denominator vanishes mod p") {
  auto [p, r] = split_prime();
  UPoly bad({GaussRat(mpq_class(1, static_cast<long>(p)))});
  CHECK_FALSE(reduce_mod(bad, p, r).has_value());
}
