#pragma once

#include <vector>

#include "cyfano/cohomology.hpp"

namespace cyfano {

// A complete intersection Z = N_1 ∩ ... ∩ N_n inside a complete simplicial
// toric variety, described by divisor classes only.  Whether a generic member
// is actually smooth and misses the ambient singular locus is an assumption
// the caller asserts, not something we decide.
struct CompleteIntersectionCY {
  Fan fan;
  std::vector<TorusDivisor> hypersurfaces;
  bool assume_smooth = false;

  Index dim() const { return fan.rank - static_cast<Index>(hypersurfaces.size()); }
};

// First page of the Koszul spectral sequence computing H^*(Z, O(D)|_Z):
// columns[p].at(q) = dim ⊕_{|S|=p} H^q(F, O(D − Σ_{i∈S} N_i)).
struct KoszulPage {
  std::vector<CohomologyVector> columns;
};

KoszulPage koszul_page(const CompleteIntersectionCY& Z, const TorusDivisor& D);

// h^i(Z, O(D)|_Z) for i = 0..dim Z.  The chase subtracts differential ranks
// wherever dimension bookkeeping forces them; unforced ranks leave honest
// intervals instead of a guessed answer.  The alternating sum is checked
// against the ambient Euler characteristics on every call.
CohomologyVector ci_twisted_cohomology(const CompleteIntersectionCY& Z, const TorusDivisor& D);

// h^0(Z, N_{Z/F}) = Σ_i h^0(Z, O(N_i)|_Z); throws when a summand is not exact.
Int normal_bundle_sections(const CompleteIntersectionCY& Z);

// h^i(Z, O_Z) for i = 0..dim Z; (1, 0, ..., 0, 1) is the Calabi-Yau profile.
CohomologyVector structure_sheaf_profile(const CompleteIntersectionCY& Z);

}  // namespace cyfano
