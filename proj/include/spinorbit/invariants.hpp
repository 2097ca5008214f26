// The invariant ring of the restricted Weyl group acting on the Cartan
// subspace coordinates: ten quadrics permuted up to scalars, six
// quartics permuted exactly, the fundamental invariants of degrees
// 8/12/20/24 built from their elementary symmetric functions and the
// Hessian, the two product identities, and the rotated z-coordinate
// forms.
#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "spinorbit/mpoly.hpp"
#include "spinorbit/report.hpp"

namespace spinorbit {

struct InvariantCatalog {
  std::vector<MPoly> Q;  // ten quadrics, x-coordinates
  std::vector<MPoly> A;  // six quartics, x-coordinates
  MPoly F8, F12, F20, F24;
  MPoly Pi20;  // product of the ten quadrics
  MPoly Pi24;  // product of the six quartics
};

// built once: F8 = -sigma2/6, F12 = -sigma3/4, F20 = sigma5/12,
// F24 = (9/153664) * det(Hessian(F8)), sigmas elementary symmetric in
// the quartics (the verifier records why the printed Hessian constant
// cannot be the right one for these normalizations)
const InvariantCatalog& invariant_catalog();

// action of generator k (1..5) on Q_i (1..10): the substituted quadric
// equals scalar * Q_target.  Throws if the image is not proportional
// to any of the ten.
std::pair<int, GaussRat> action_on_quadric(int k, int i);
// same for the quartics; throws when the scalar is not exactly 1
int action_on_quartic(int k, int i);

// the full printed action tables, cell by cell
Report verify_action_tables();
// zero sum of quartics, the two product identities, the Hessian
// normalization, invariance of the fundamental invariants
Report verify_identities();
// substituting the coordinate change turns every x-form into the
// printed z-form (degree-homogeneity absorbs the root-two scaling)
Report verify_z_forms();
// exact Jacobian rank 4 at a random rational point
Report verify_invariant_independence(std::uint64_t seed = 7);

// catalog polynomials in canonical text plus identity verdicts
std::string invariants_text();

}  // namespace spinorbit
