// The 64-dimensional module of spinor four-tuples: basis labels
// (i1,...,ik)xj with {i1<...<ik} an even subset of {1..5} and j in 1..4,
// the Clifford-algebra realization of the half-spin representation on
// the exterior algebra E of a 5-dimensional space, weights and their
// scalar products, Dynkin schemes, and the equivariant identification
// of the module with the degree-1 component of the graded E8.
//
// Matrix conventions: o(10) is defined against the antidiagonal form
// (x^T A + A x = 0), with basis elements E_ij - E_{11-j,11-i}; sl4 is
// the usual traceless 4x4 algebra.  The identification is built by
// matching Chevalley generators on both sides and propagating
// equivariance constraints; it fails loudly on any inconsistency.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinorbit/e8.hpp"
#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"
#include "spinorbit/report.hpp"

namespace spinorbit {

// ---- labels ----

struct SpinorLabel {
  std::vector<int> set;  // strictly increasing subset of {1..5}, size 0/2/4
  int j = 1;             // 1..4
  std::string str() const;  // "(1,2)x3", "()x1"
  friend bool operator==(const SpinorLabel& a, const SpinorLabel& b) {
    return a.set == b.set && a.j == b.j;
  }
};

// The 64 labels in canonical order: j ascending, then set size, then set
// lexicographic.  Printing and node orders all use this order.
const std::vector<SpinorLabel>& all_labels();
int label_index(const SpinorLabel& l);  // -1 if not a valid label

// ---- spinor four-tuples ----

struct SpinorTensor {
  // (label index, coefficient), sorted by label index, no zeros
  std::vector<std::pair<int, GaussRat>> coords;

  static SpinorTensor basis(int label_idx);
  static SpinorTensor zero() { return {}; }
  bool is_zero() const { return coords.empty(); }
  GaussRat coeff(int label_idx) const;
  void set(int label_idx, const GaussRat& v);

  SpinorTensor operator+(const SpinorTensor& o) const;
  SpinorTensor operator-(const SpinorTensor& o) const;
  SpinorTensor operator*(const GaussRat& s) const;
  SpinorTensor operator-() const { return *this * GaussRat(-1); }
  friend bool operator==(const SpinorTensor& a, const SpinorTensor& b) {
    return a.coords == b.coords;
  }

  std::string str() const;
};

// Text form: terms like "-(3,5)x1", "(1,2,4,5)x2", "3/2*(1,2)x1",
// "1+2*i*(1,2)x1" (the coefficient is everything before the '*' that
// precedes the label), joined by +/-.  A +/- splits terms only once the
// running term is complete (label parenthesis, 'x', digit all seen).
std::optional<SpinorTensor> parse_spinor(std::string_view text);

// ---- weights ----

struct Weight {
  std::array<GaussRat, 5> d5;  // coordinates in the orthonormal basis
  std::array<GaussRat, 4> a3;  // sum-zero 4-vector model of the e_j span
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.d5 == b.d5 && a.a3 == b.a3;
  }
  bool operator<(const Weight& o) const;  // lexicographic
};

Weight weight_of(int label_idx);
// Euclidean scalar product; takes values in {2,1,0,-1} on label weights.
GaussRat weight_dot(const Weight& a, const Weight& b);

// ---- Clifford model ----

// E = exterior algebra on u_1..u_5, dim 32; basis index is a bitmask
// (bit i-1 set iff u_i occurs), monomials written with ascending factors.
// gamma_action(g) is the operator of the Clifford generator v_g
// (g = 1..5: contraction generators; g = 6..10: wedge by u_{g-5}).
Mat gamma_action(int generator);

// Basis of o(10) w.r.t. the antidiagonal form: E_ij - E_{11-j,11-i} for
// representative index pairs, deterministic order, 45 elements.
const std::vector<Mat>& o10_basis();

// Half-spin representation on E: rho(a) = lambda(f(a)) with
// f(a) = 1/2 sum_i (a v_i) v_{11-i}.  Throws if a is not in o(10).
Mat rho(const Mat& a);

// Basis of sl4 (E_ij for i != j, then diagonal differences), 15 elements.
const std::vector<Mat>& sl4_basis();

// ---- Dynkin schemes ----

struct DynkinScheme {
  std::vector<int> nodes;  // label indices, ascending
  struct Edge {
    int a, b;     // label indices, a < b
    bool dashed;  // dashed iff scalar product +1, solid iff -1
    friend bool operator==(const Edge& x, const Edge& y) {
      return x.a == y.a && x.b == y.b && x.dashed == y.dashed;
    }
  };
  std::vector<Edge> edges;  // ordered by (a, b)
  std::string dot() const;  // DOT graph; node names are label strings
};

DynkinScheme dynkin_scheme(const SpinorTensor& x);  // throws on zero input

// ---- identification with the degree-1 component ----

// Isomorphism from o(10) + sl4 (matrix models) onto the degree-0
// subalgebra, built by matching Chevalley generators and closing under
// brackets; includes the inverse direction.
class G0Iso {
 public:
  LieElement map_o10(const Mat& a) const;  // throws if a not in o(10)
  LieElement map_sl4(const Mat& a) const;  // throws if a not traceless
  // Splits x (degree-0) as iota(a) + iota(b); throws if x is not in the
  // image (i.e. not degree-0).
  std::pair<Mat, Mat> split(const LieElement& x) const;

  // Images of o10_basis() and sl4_basis(), parallel order.
  std::vector<LieElement> o10_images;
  std::vector<LieElement> sl4_images;

 private:
  friend class G1Dictionary;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

class G1Dictionary {
 public:
  // Built once; throws std::runtime_error if weight matching is not
  // bijective or the equivariance constraints are inconsistent.
  static const G1Dictionary& get();

  // label index -> scaled root vector spanning the matching weight line
  const std::vector<LieElement>& images() const { return to_g1_; }
  LieElement map(const SpinorTensor& x) const;
  // Inverse on the degree-1 component; nullopt if x is not degree-1.
  std::optional<SpinorTensor> unmap(const LieElement& x) const;

  const G0Iso& iso() const { return iso_; }
  // Which generator-matching convention succeeded (diagnostic, 0..3:
  // bit 0 = fork tips swapped, bit 1 = rank-3 chain reversed).
  int variant() const { return variant_; }
  // root r (degree-1) -> label index
  int label_of_root(int r) const;

 private:
  G1Dictionary() = default;
  std::vector<LieElement> to_g1_;
  std::vector<int> root_to_label_;  // indexed by root, -1 off-component
  G0Iso iso_;
  int variant_ = -1;
};

// ---- verification drivers ----

// anticommutation relations, bracket homomorphism on all basis pairs,
// invariance and dimension of the even part
Report verify_spin_model();
// label/root weight bijection, pairing = scalar product on all pairs
Report verify_weight_dictionary();

}  // namespace spinorbit
