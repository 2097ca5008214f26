// Dense univariate polynomials over the Gaussian rationals, with the
// services minimal-polynomial work needs: division, monic-Euclid gcd
// (with content stripping to control coefficient growth), derivative,
// squarefree parts, t -> t^k inflation, and small Gaussian-rational
// root extraction.  A reduction mod a split prime p = 1 (mod 4) gives a
// fast squarefree certificate that is sound in the positive direction;
// callers fall back to the exact gcd when it is inconclusive.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinorbit/gaussrat.hpp"

namespace spinorbit {

struct UPoly {
  // c[k] is the coefficient of t^k; invariant: no trailing zeros.
  std::vector<GaussRat> c;

  UPoly() = default;
  explicit UPoly(std::vector<GaussRat> coeffs) : c(std::move(coeffs)) {
    trim();
  }
  static UPoly zero() { return UPoly(); }
  static UPoly constant(const GaussRat& a);
  static UPoly t();  // the monomial t

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const GaussRat& lead() const { return c.back(); }
  void trim();

  GaussRat eval(const GaussRat& x) const;
  UPoly derivative() const;
  UPoly monic() const;                 // throws on zero
  UPoly inflate(int k) const;          // p(t) -> p(t^k)
  // Divides out the rational content (gcd of all numerators over lcm of
  // denominators of re/im parts), returning a primitive integer-ish poly.
  UPoly primitive_part() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const GaussRat& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

  std::string str() const;  // e.g. "t^3 - 2*t + 1/2+i" (descending powers)
};

// Quotient and remainder with deg(r) < deg(b); b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

// Monic gcd by the Euclidean algorithm with per-step content stripping.
UPoly gcd(UPoly a, UPoly b);

UPoly lcm(const UPoly& a, const UPoly& b);

// Exact: true iff gcd(p, p') is constant.  Tries the mod-p certificate
// first (sound when it answers true); falls back to the exact gcd.
bool squarefree(const UPoly& p);

// p / gcd(p, p'): the radical (product of distinct irreducible factors).
UPoly squarefree_part(const UPoly& p);

// All roots of p lying in Q(i), each with multiplicity; the remaining
// factor after dividing the found linear factors out is also returned.
struct RootList {
  std::vector<std::pair<GaussRat, int>> roots;
  UPoly remaining;  // constant iff p splits over Q(i)
  bool complete() const { return remaining.deg() <= 0; }
};
RootList gauss_rational_roots(const UPoly& p);

// --- arithmetic mod a word-size prime (for certificates) ---

struct FpPoly {
  uint64_t p;
  std::vector<uint64_t> c;  // no trailing zeros
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim();
};

// Reduces q mod p with i -> r where r^2 = -1 (mod p); fails (nullopt)
// if any denominator is divisible by p.
std::optional<FpPoly> reduce_mod(const UPoly& q, uint64_t p, uint64_t r);

FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_derivative(const FpPoly& a);

// Finds a prime p = 1 (mod 4) (skipping `skip` earlier candidates) and a
// square root r of -1 mod p.
std::pair<uint64_t, uint64_t> split_prime(int skip = 0);

}  // namespace spinorbit
