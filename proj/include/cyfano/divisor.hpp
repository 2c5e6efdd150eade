#pragma once

#include <vector>

#include "cyfano/fan.hpp"

namespace cyfano {

// D = sum a_rho D_rho, one integer coefficient per fan ray.
using TorusDivisor = IntVector;

TorusDivisor anticanonical(const Fan& F);  // -K_F = sum D_rho
TorusDivisor principal_divisor(const Fan& F, const IntVector& character);

// CL(F) as cokernel of the character lattice: free rank t plus torsion
// invariants, with explicit projection functionals for both parts.
struct DivisorClassGroup {
  Index rank = 0;                 // t = #rays - n_F
  std::vector<Int> torsion;       // invariant factors > 1, divisibility chain
  IntMatrix free_projection;      // t x #rays
  IntMatrix torsion_projection;   // #torsion x #rays, row i taken mod torsion[i]
};

DivisorClassGroup class_group(const Fan& F);

struct DivisorClass {
  IntVector free_part;
  IntVector torsion_part;  // reduced into [0, d_i)

  bool operator==(const DivisorClass& o) const {
    return exactly_equal(free_part, o.free_part) && exactly_equal(torsion_part, o.torsion_part);
  }
};

DivisorClass divisor_class(const DivisorClassGroup& G, const TorusDivisor& D);

// Per-max-cone support function data: <m_sigma, u_rho> = -a_rho on the
// cone's own rays.  Rational on singular cones.
struct CartierData {
  std::vector<RatVector> vertices;  // parallel to Fan::max_cones
};

CartierData cartier_data(const Fan& F, const TorusDivisor& D);

// Support-function convexity across walls; requires a complete fan.
bool is_nef(const Fan& F, const TorusDivisor& D);
bool is_ample(const Fan& F, const TorusDivisor& D);
bool is_fano(const Fan& F);

RationalPolytope polytope_of(const Fan& F, const TorusDivisor& D);

}  // namespace cyfano
