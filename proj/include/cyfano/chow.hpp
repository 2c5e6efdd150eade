#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyfano/koszul.hpp"

namespace cyfano {

// Polynomial in the ray classes x_ρ: sorted multiset of ray indices -> exact
// rational coefficient.  Monomials whose support lies in no cone are zero in
// the ring and never stored.
using RayPolynomial = std::map<std::vector<int>, Rat>;

// Σ a_ρ x_ρ as a degree-one polynomial.
RayPolynomial divisor_polynomial(const TorusDivisor& D);

// Product in the ring, dropping Stanley-Reisner zeroes and anything above
// max_degree.
RayPolynomial multiply(const Fan& F, const RayPolynomial& a, const RayPolynomial& b,
                       Index max_degree);

// Evaluation of a homogeneous top-degree class against the fundamental class:
// a product of the distinct rays of a max cone counts 1/multiplicity, and
// repeated rays are eliminated through the linear relations of the ring.
Rat chow_degree(const Fan& F, const RayPolynomial& top);

// Product of exactly rank-many divisor classes, as an exact rational.
Rat intersection_number(const Fan& F, const std::vector<TorusDivisor>& divisors);

// Chern classes of Z from c(T_F) = Π_ρ (1 + x_ρ) and the normal bundle
// c(N) = Π_i (1 + [N_i]): c(Z) = c(F) · c(N)^{-1} truncated at dim Z.
// Requires the adjunction identity Σ N_i ~ -K_F, torsion included.
struct ChernDataCI {
  std::vector<RayPolynomial> chern;  // chern[k] = c_k(Z), k = 0..dim Z
  RayPolynomial fundamental;         // [Z] = Π [N_i]
  std::vector<std::string> notes;
};
ChernDataCI chern_data_ci(const CompleteIntersectionCY& Z);

struct ChernNumbers {
  Rat top;                        // c_m(Z) · [Z] for m = dim Z
  std::optional<Rat> c2_squared;  // c_2(Z)^2 · [Z], fourfolds only
  std::vector<std::string> notes;
};
ChernNumbers chern_numbers_ci(const CompleteIntersectionCY& Z);

// Top Chern number as an integer.  A fractional value means the rational
// ring was used outside its hypotheses (e.g. Z meets the singular locus)
// and raises NonIntegerEuler.
Int euler_characteristic_ci(const CompleteIntersectionCY& Z);

}  // namespace cyfano
