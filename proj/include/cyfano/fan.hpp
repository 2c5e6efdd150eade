#pragma once

#include <string>
#include <vector>

#include "cyfano/arith.hpp"
#include "cyfano/lattice.hpp"

namespace cyfano {

struct Cone {
  std::vector<int> rays;  // sorted fan ray indices

  bool operator==(const Cone& o) const { return rays == o.rays; }
};

// A codimension-one face shared by exactly two maximal cones; the unit of
// work for the support-function convexity (nef) test.
struct Wall {
  std::vector<int> facet;  // sorted, size rank - 1
  int cone_a = 0;          // adjacent max cone indices, cone_a < cone_b
  int cone_b = 0;
  int extra_b = 0;         // the ray of cone_b not in the facet
};

struct Fan {
  Index rank = 0;  // dimension of the ambient lattice
  std::vector<IntVector> rays;
  std::vector<Cone> max_cones;
  std::vector<std::string> warnings;  // primitivization records
};

// Structural validation in the order: simplicial, spanning (no torus factor),
// pairwise cone intersections are faces.  Rays are primitivized with a
// warning; duplicate rays, unused rays and nested max cones are rejected.
Fan validate_fan(std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones);

bool is_complete(const Fan& F);

// All walls of a complete fan, sorted by (cone_a, cone_b).
std::vector<Wall> walls(const Fan& F);  // throws NotComplete

// Index of the sublattice spanned by the cone's rays: 1 exactly on smooth
// cones, > 1 on finite-quotient singularities.
Int cone_multiplicity(const Fan& F, const Cone& c);

// Minimal singular cones (every strictly smaller face is smooth), sorted by
// (size, ray indices).
std::vector<Cone> singular_cones(const Fan& F);

IntMatrix ray_matrix(const Fan& F);  // one ray per row

}  // namespace cyfano
