// The degree-four restricted Weyl group acting on the Cartan subspace:
// exact closure of the five printed generators, reflection/hyperplane
// inventory, the nine tabulated reflection subgroups with their fixed
// spaces, stabilizers and normalizer quotients, stratum membership,
// verification of the abstract presentation, and verification of the
// stratum-defining polynomial lists.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinorbit/linalg.hpp"
#include "spinorbit/report.hpp"

namespace spinorbit {

// One group element: a 4x4 matrix with entries (re + im*i) / 2^k,
// stored with the minimal exponent k so equality is plain field-wise
// comparison.  All arithmetic stays in int64; entries of the group are
// dyadic Gaussian rationals with |k| <= 1 but products are normalized
// defensively.
struct W0Elem {
  std::array<std::int64_t, 16> re{};
  std::array<std::int64_t, 16> im{};
  int k = 0;

  static W0Elem identity();
  // exact conversion; fails if an entry is not a dyadic Gaussian
  // rational
  static std::optional<W0Elem> from_mat(const Mat& m);
  Mat to_mat() const;

  void normalize();
  W0Elem operator*(const W0Elem& o) const;
  bool operator==(const W0Elem& o) const;
  bool operator!=(const W0Elem& o) const { return !(*this == o); }
  std::size_t hash() const;
};

struct W0Hash {
  std::size_t operator()(const W0Elem& e) const { return e.hash(); }
};

// the five printed generators
const std::array<W0Elem, 5>& w0_generators();

// product of generators by 1-based index; empty word = identity
W0Elem w0_word(const std::vector<int>& word);

// breadth-first closure under multiplication; throws std::runtime_error
// past the safety cap of 10^6 elements
std::vector<W0Elem> generate(const std::vector<W0Elem>& gens);

struct W0Reflection {
  int elem;      // index into W0Group::elements()
  Vec root;      // spans the image of (w - id), first nonzero = 1
  Vec covector;  // the fixed hyperplane is { x : covector . x = 0 }
  int hyperplane;  // index into W0Group::hyperplanes()
};

class W0Group {
 public:
  static const W0Group& get();

  const std::vector<W0Elem>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  // -1 when absent
  int index_of(const W0Elem& e) const;
  bool contains(const W0Elem& e) const { return index_of(e) >= 0; }
  int mul(int a, int b) const;
  int inv(int a) const;

  // elements w with rank(w - id) = 1
  const std::vector<W0Reflection>& reflections() const { return refl_; }
  // distinct reflection hyperplanes, as normalized covectors
  const std::vector<Vec>& hyperplanes() const { return hyperplanes_; }

 private:
  W0Group();
  std::vector<W0Elem> elems_;
  std::vector<W0Reflection> refl_;
  std::vector<Vec> hyperplanes_;
  std::vector<int> inv_;
  std::unordered_map<W0Elem, int, W0Hash> index_;
};

// a subgroup given by the sorted indices of its elements in W0
struct SubgroupW0 {
  std::vector<int> elems;  // sorted, always contains the identity
  std::size_t order() const { return elems.size(); }
  bool contains(int e) const;
};

SubgroupW0 subgroup_from_words(const std::vector<std::vector<int>>& words);

// the nine tabulated subgroups M_1..M_9 (index 0 = M_1)
const std::array<SubgroupW0, 9>& table1_subgroups();

// exact kernel of the stacked (w - id), over all elements of m
std::vector<Vec> fixed_space(const SubgroupW0& m);

// pointwise stabilizer of a point (p-coordinates); throws if the
// result is not generated by the reflections it contains
SubgroupW0 stabilizer(const Vec& point);
// stabilizer without the reflection-generation check
SubgroupW0 stabilizer_raw(const Vec& point);

// small generating set (greedy over reflections, then all elements)
std::vector<int> generating_set(const SubgroupW0& m);

std::vector<int> normalizer_elements(const SubgroupW0& m);
long normalizer_order(const SubgroupW0& m);
bool conjugate_subgroups(const SubgroupW0& a, const SubgroupW0& b);

// which tabulated stratum a point lies on: the unique i in 1..9 with
// stabilizer conjugate to M_i
int stratum_of(const Vec& point);

// distinct restrictions of N(M_i) to the fixed space, as matrices on
// the printed basis
std::vector<Mat> gamma_restriction(int i);

// whether the printed quotient generators close to exactly the
// restriction image (as a matrix group, directly or transposed).
// Generators whose determinant is not unit-modulus cannot lie in a
// finite matrix group; that certificate short-circuits to false.
bool gamma_matches_printed(int i);

// ---- verification drivers ----

// subgroup sizes, fixed-space spans, normalizer quotient orders
Report verify_table1();
// printed quotient generators close to exactly the restriction image
Report verify_gamma_generators();
// five involutions, seven relations, closure of order 46080, printed
// roots; also reports which pairing convention (bilinear vs sesquilinear)
// matches roots to hyperplanes
Report verify_presentation();
// both directions of the vanishing-locus description for stratum i
Report verify_stratum_polynomials(int i, std::uint64_t seed = 12345);
// scale invariance + random-point stabilizer properties
Report verify_stabilizer_properties(int npoints = 1000,
                                    std::uint64_t seed = 2024);

// text rendering of the subgroup table (sizes, bases, quotient orders)
std::string table1_text();

}  // namespace spinorbit
