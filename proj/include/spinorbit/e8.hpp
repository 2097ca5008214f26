// The Lie algebra of type E8 over the Gaussian rationals in a Chevalley
// basis, its order-4 grading automorphism, and bracket / Killing-form /
// ad-matrix services.
//
// Roots are generated in coordinates (the 112 integer vectors
// +-e_i +- e_j and the 128 half-integer vectors with an even number of
// minus signs) and converted to simple-root coordinates for the
// standard numbering (chain 1-3-4-5-6-7-8 with node 2 attached to node
// 4).  Structure-constant signs come from a bimultiplicative 2-cocycle
// on the root lattice, epsilon(a,b) = (-1)^(a^T E b) with E the
// upper-triangular bit matrix built from the Cartan matrix; the few
// remaining global sign choices are fixed at build time by testing the
// Jacobi identity on a structured sample (tests re-verify exhaustively).
//
// Basis indexing used across the project: 0..7 are the Cartan elements
// h_1..h_8 (simple coroots), 8+r is the root vector of root r.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/linalg.hpp"
#include "spinorbit/report.hpp"

namespace spinorbit {

struct E8Root {
  std::array<int, 8> simple;   // coordinates in the simple-root basis
  std::array<int, 8> eps2;     // 2 * epsilon-coordinates (all integers)
  int degree;                  // alpha_6 coefficient mod 4
  std::array<int, 8> dot_simple;  // (root, alpha_i) for i = 1..8
  uint8_t bits;                // simple coords mod 2, packed
  uint8_t ebits;               // (E * coords) mod 2, packed
};

// A term of a bracket of basis elements: basis index and integer
// structure constant.
using ZTerm = std::pair<int, int>;

class E8 {
 public:
  static constexpr int DIM = 248;
  static constexpr int NROOTS = 240;

  static const E8& get();  // built once, immutable afterwards

  const std::vector<E8Root>& roots() const { return roots_; }
  int root_index(const std::array<int, 8>& simple) const;  // -1 if absent
  int negative_of(int r) const { return neg_[r]; }
  bool is_positive(int r) const;
  int pairing(int r1, int r2) const;  // (alpha_r1, alpha_r2)

  // degree of basis element (0 for Cartan, root degree otherwise)
  int degree_of_basis(int b) const { return b < 8 ? 0 : roots_[b - 8].degree; }
  const std::vector<int>& component(int k) const { return comp_[k & 3]; }

  // [basis bi, basis bj] as integer terms, appended to out.
  void bracket_basis(int bi, int bj, std::vector<ZTerm>& out) const;

  // Killing form on basis elements (closed form, verified by tests
  // against traces of ad products).
  GaussRat killing_basis(int bi, int bj) const;

  // theta acts on basis element b by the scalar i^degree.
  GaussRat theta_scalar(int b) const;

  // Simple roots of the degree-0 subsystem, grouped by diagram
  // component and ordered: the rank-5 fork component first (chain end,
  // chain middle, fork node, then the two tips in deterministic order),
  // then the rank-3 chain.  Entries are root indices.
  const std::vector<int>& g0_simple_roots() const { return g0_simples_; }

  std::string describe_root(int r) const;  // "(c1,...,c8)"

 private:
  E8();
  std::vector<E8Root> roots_;
  std::map<std::array<int, 8>, int> index_;
  std::vector<int> neg_;
  std::array<std::vector<int>, 4> comp_;
  std::vector<int> g0_simples_;
  int opp_sign_ = 1;       // sign of [e_a, e_{-a}] relative to +h_a
  bool flip_neg_ = false;  // extra sign chi(a)chi(b)chi(a+b) twist
  int eps_sign(int r1, int r2) const;
  int chi(int r) const { return is_positive(r) ? 1 : -1; }
  bool jacobi_sample_ok() const;
};

// --- elements ---

struct LieElement {
  // sorted by basis index, no zero coefficients
  std::vector<std::pair<int, GaussRat>> coords;

  static LieElement basis(int idx);
  static LieElement zero() { return {}; }
  bool is_zero() const { return coords.empty(); }
  GaussRat coeff(int idx) const;
  void set(int idx, const GaussRat& v);

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator*(const GaussRat& s) const;
  LieElement operator-() const { return *this * GaussRat(-1); }
  bool operator==(const LieElement& o) const { return coords == o.coords; }

  Vec to_vec() const;  // length 248
  static LieElement from_vec(const Vec& v);
  // Coordinates w.r.t. a basis-index list; fails (nullopt) if supported
  // outside the list.
  std::optional<Vec> to_vec_in(const std::vector<int>& labels) const;
  static LieElement from_vec_in(const Vec& v, const std::vector<int>& labels);

  // true iff supported on a single graded component; sets k
  bool homogeneous_degree(int& k) const;

  std::string str() const;
};

LieElement bracket(const LieElement& x, const LieElement& y);
GaussRat killing(const LieElement& x, const LieElement& y);

// Matrix of y -> [x,y] from span(domain) to span(codomain), both given
// as basis-index lists.  Throws GradingViolation if the image of a
// domain basis element has a component outside the codomain.
struct GradingViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
SparseMat ad_matrix(const LieElement& x, const std::vector<int>& domain,
                    const std::vector<int>& codomain);
SparseMat ad_matrix_full(const LieElement& x);

std::vector<int> all_basis_labels();

// --- Cartan / root-system recognition ---

// Simple-type classification from a Cartan integer matrix (entries
// a_ij = 2(bi,bj)/(bi,bi)); returns names like "A2", "D5" per connected
// component, sorted; throws on unrecognized diagrams.
std::vector<std::string> cartan_type(const Mat& cartan);

// Cartan matrix of a set of roots given their symmetric pairing matrix
// (for simply-laced (.,.) with squares 2 this is just the pairing).
Mat cartan_matrix_of(const std::vector<int>& root_indices);

// Text dump of the grading (degree of every root, g0 simple roots);
// golden-file pinned and served by the dump-grading CLI command.
std::string grading_dump();

// component dimensions, automorphism order and bracket compatibility,
// degree-0 root-system type
Report verify_grading();

}  // namespace spinorbit
