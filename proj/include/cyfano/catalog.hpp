#pragma once

#include <string>
#include <vector>

#include "cyfano/koszul.hpp"

namespace cyfano {

// P^n: rays e_1..e_n and -Σ e_i, all coordinate max cones.
Fan projective_space(int n);

// P(w_0, ..., w_n) on the lattice Z^n: a unit weight is moved to the front
// (recorded in the fan warnings when that reorders the input), the remaining
// weights sit on the standard basis rays and u_0 = -Σ w_i e_i.  Only
// configurations with at least three unit weights are supported; others are
// rejected rather than built on a quotient lattice.
Fan weighted_projective(const std::vector<Int>& weights);

// Product fan: rays block-embedded, max cones are products of max cones.
Fan product_fan(const std::vector<Fan>& factors);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string provenance;
  CompleteIntersectionCY cy;
};

// All built-in Calabi-Yau complete intersections, in a stable order.
std::vector<CatalogEntry> catalog_list();

// Lookup by name; throws UnknownEntry.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace cyfano
