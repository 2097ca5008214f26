// Exact Gaussian-rational scalars: a + b*i with arbitrary-precision
// rational a, b (GMP mpq_class).  Values are always canonical (lowest
// terms, positive denominators), so equality is structural and the type
// can key ordered containers.
//
// Canonical text form, used everywhere a coefficient is printed:
//   0            zero
//   a/b          pure real (denominator 1 omitted, e.g. "3", "-1/2")
//   c/d*i        pure imaginary ("i" and "-i" abbreviate 1*i, -1*i)
//   a/b+c/d*i    general (the imaginary sign folds into the joiner)
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace spinorbit {

struct GaussRat {
  mpq_class re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}
  GaussRat(int v) : re(v), im(0) {}
  GaussRat(const mpq_class& r) : re(r), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long num, long den, long inum, long iden)
      : re(mpq_class(num, den)), im(mpq_class(inum, iden)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return im == 0 && re == 1; }

  GaussRat conj() const { return GaussRat(re, -im); }
  mpq_class norm() const { return re * re + im * im; }  // |z|^2
  GaussRat inv() const;                                 // throws on zero

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat operator-() const { return GaussRat(-re, -im); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
  // Lexicographic on (re, im); an arbitrary total order for container keys.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }
};

std::string to_string(const GaussRat& z);
std::string to_string(const mpq_class& q);

// Parses the canonical form plus convenient variants: "3", "-1/2",
// "i", "-i", "2*i", "1/2+3/4*i", "1-i".  Whole string must match.
std::optional<GaussRat> parse_gaussrat(std::string_view s);

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace spinorbit
