// Transcribed reference data used by the verification drivers: the
// Cartan subspace generators, the reflection-group table (subgroup
// words, sizes, fixed-space bases, normalizer-quotient data), the
// stratum-defining polynomial lists, the presentation words, the
// invariant-ring catalog, and the orbit tables with their expected
// centralizer data.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinorbit/linalg.hpp"
#include "spinorbit/mpoly.hpp"

namespace spinorbit {

// ---- Cartan subspace ----

// the four commuting generators, in spinor text form
const std::array<std::string, 4>& cartan_p_texts();

// ---- reflection-group table ----

struct Table1Row {
  int index;                                // 1..9
  std::vector<std::vector<int>> gen_words;  // words in the generators, 1-based
  long size;                                // subgroup order
  std::vector<Vec> basis;                   // fixed-space basis, p-coordinates
  std::vector<std::string> basis_text;      // display form, e.g. "p2-p3"
  std::string centralizer_type;  // identity component, e.g. "2A1+A2+T1"
  int c2_exponent;               // component group (C2)^k
  long gamma_order;              // |N(M)/M|
};
const std::vector<Table1Row>& table1_rows();

// printed generators of the normalizer quotient, on the printed
// fixed-space basis; valid for rows 2..8 (row 1 is the whole group,
// row 9 is trivial)
std::vector<Mat> gamma_printed_generators(int i);

// ---- presentation ----

struct PresentationData {
  std::array<std::string, 5> names;      // s,t,u,v,w
  std::array<std::vector<int>, 5> words; // words in the group generators
  std::array<Vec, 5> roots;              // printed reflection roots
};
const PresentationData& presentation_data();

// ---- stratum-defining polynomial lists ----

// for strata 1..5; variables are coordinates on the printed basis of
// the fixed space
const std::vector<MPoly>& stratum_polynomials(int i);

// ---- invariant-ring data ----

// the ten quadrics and six quartics in the coordinates x1..x4 of the
// Cartan subspace basis p1..p4
const std::vector<MPoly>& quadrics_x();
const std::vector<MPoly>& quartics_x();
// the same forms in the rotated coordinates z1..z4
const std::vector<MPoly>& quadrics_z();
const std::vector<MPoly>& quartics_z();

// coordinate change z = (1/sqrt(2)) * zmat * x (Gaussian-integer matrix)
const Mat& z_change_mat();

// how each group generator transforms each quadric/quartic:
// substituting the generator into Q_i gives scalar * Q_target
struct QuadricCell {
  int target;       // 1..10
  GaussRat scalar;  // a Gaussian unit times a power of (1+i)
};
// [i-1][k-1] = action of generator k on Q_i
const std::array<std::array<QuadricCell, 5>, 10>& quadric_action_printed();
// [i-1][k-1] = target index of generator k acting on A_i (scalar 1)
const std::array<std::array<int, 5>, 6>& quartic_action_printed();

// ---- mixed orbit tables ----

// one printed nilpotent part with its expected orbit data; the
// characteristic columns are populated only for the table whose
// semisimple part is p1 (stratum 8)
struct MixedRow {
  std::string element;    // spinor text of the nilpotent part e
  int dim;                // printed dim [z_{g0}(p), e]
  std::string signature;  // printed type of z_{g0}(p+e), e.g. "2A1+t2+u3"
  std::string char_quadruple;  // four digits, e.g. "0110"; empty if none
  std::string char_center;     // rational center coordinate, e.g. "1/3"
};

struct MixedTable {
  int index;              // stratum index of the semisimple part, 2..8
  Vec base_coeffs;        // semisimple part p = sum of coeff_k * p_k
  std::string base_text;  // display form, e.g. "p2+2p3+4p4"
  std::vector<MixedRow> rows;
};

// the seven tables of nilpotent parts of mixed elements, i in 2..8
const MixedTable& mixed_table(int i);

}  // namespace spinorbit
