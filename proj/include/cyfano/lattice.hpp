#pragma once

#include <optional>
#include <vector>

#include "cyfano/arith.hpp"

namespace cyfano {

// Row-style Hermite normal form: H = U * A with U unimodular, H in lower
// echelon form (pivots positive, entries below a pivot reduced into [0, pivot)).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
};

HermiteForm hermite_normal_form(IntMatrix A);

// Smith normal form: D = U * A * V with U, V unimodular and D diagonal with
// d_1 | d_2 | ... | d_r, d_i > 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<Int> invariant_factors() const;  // the nonzero diagonal, in order
};

SmithForm smith_normal_form(IntMatrix A);

Index rank_of(const IntMatrix& A);
Int determinant(IntMatrix A);  // square input; Bareiss fraction-free elimination

struct LinearSolution {
  RatVector x;
  bool unique;  // false when the kernel is nontrivial
};

// Exact solution of A x = b over the rationals; nullopt when inconsistent.
std::optional<LinearSolution> solve_rational(const IntMatrix& A, const IntVector& b);

// The closed halfspace { x : <normal, x> >= -offset }.
struct Halfspace {
  IntVector normal;
  Int offset;
};

struct RationalPolytope {
  Index dim = 0;
  std::vector<Halfspace> halfspaces;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVector point;
};

// Exact two-phase simplex (Bland's rule) maximizing <objective, x> over P.
LpResult linear_program_max(const RationalPolytope& P, const RatVector& objective);

bool polytope_feasible(const RationalPolytope& P);

// All lattice points of a bounded P, in lexicographic order.  Boundedness is
// established by maximizing/minimizing each coordinate; an unbounded direction
// raises UnboundedPolytope.
std::vector<IntVector> lattice_points(const RationalPolytope& P);

}  // namespace cyfano
