// Sparse multivariate polynomials over the Gaussian rationals with a
// graded-lexicographic term order (total degree first, then lex with
// the first declared variable highest).  Iteration and printing run in
// descending order, which fixes the canonical text form used by golden
// files: terms joined with +/-, coefficients in the GaussRat canonical
// form ("a/b", "c/d*i", "a/b+c/d*i"), monomials like "x1^2*x3".
#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"

namespace spinorbit {

using Expo = std::vector<int>;

struct GrlexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // lex, first variable dominant
  }
};

struct MPoly {
  std::vector<std::string> vars;
  std::map<Expo, GaussRat, GrlexDesc> terms;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> names) : vars(std::move(names)) {}

  static MPoly variable(const std::vector<std::string>& names, int idx);
  static MPoly constant(const std::vector<std::string>& names,
                        const GaussRat& c);

  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_zero() const { return terms.empty(); }
  int total_degree() const;  // -1 for zero
  void add_term(const Expo& e, const GaussRat& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const GaussRat& s) const;
  MPoly operator-() const { return *this * GaussRat(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms == b.terms;
  }
  MPoly pow(int e) const;
  MPoly derivative(int var) const;

  GaussRat eval(const Vec& point) const;

  std::string str() const;
};

// p evaluated at the linear change of variables x -> m*x (column
// convention: new x_i = sum_j m[i][j] * x_j).
MPoly poly_substitute(const MPoly& p, const Mat& m);

// Substitute each variable by the given polynomial (general images).
MPoly poly_substitute(const MPoly& p, const std::vector<MPoly>& images);

// Exact division: returns q with p = q*d if the division leaves no
// remainder, otherwise nullopt.  Single-divisor multivariate division
// in the graded-lex order.
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d);

MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m);

// Matrix of second partials.
std::vector<std::vector<MPoly>> hessian_matrix(const MPoly& p);

}  // namespace spinorbit
