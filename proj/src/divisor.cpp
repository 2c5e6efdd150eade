#include "cyfano/divisor.hpp"

#include <string>

#include "cyfano/errors.hpp"

namespace cyfano {

TorusDivisor anticanonical(const Fan& F) {
  return IntVector::Ones(static_cast<Index>(F.rays.size()));
}

TorusDivisor principal_divisor(const Fan& F, const IntVector& character) {
  if (character.size() != F.rank) throw DimensionMismatch("character has wrong dimension");
  IntVector d(static_cast<Index>(F.rays.size()));
  for (size_t r = 0; r < F.rays.size(); ++r)
    d(static_cast<Index>(r)) = F.rays[r].dot(character);
  return d;
}

DivisorClassGroup class_group(const Fan& F) {
  const Index r = static_cast<Index>(F.rays.size());
  const Index n = F.rank;
  // CL(F) = coker(M -> Z^rays), the map being m |-> (<m, u_rho>)_rho, i.e.
  // the ray matrix acting on characters.  SNF diagonalizes the image.
  SmithForm s = smith_normal_form(ray_matrix(F));
  auto inv = s.invariant_factors();
  if (static_cast<Index>(inv.size()) != n)
    throw TorusFactor("rays span a proper subspace");
  DivisorClassGroup G;
  G.rank = r - n;
  IntMatrix free_rows(G.rank, r);
  for (Index i = 0; i < G.rank; ++i) free_rows.row(i) = s.U.row(n + i);
  // Canonicalize the free basis so equal groups print identically.
  G.free_projection = hermite_normal_form(std::move(free_rows)).H;
  std::vector<Index> torsion_rows;
  for (Index i = 0; i < n; ++i) {
    if (inv[static_cast<size_t>(i)] > 1) {
      G.torsion.push_back(inv[static_cast<size_t>(i)]);
      torsion_rows.push_back(i);
    }
  }
  G.torsion_projection = IntMatrix(static_cast<Index>(torsion_rows.size()), r);
  for (size_t k = 0; k < torsion_rows.size(); ++k) {
    for (Index j = 0; j < r; ++j)
      G.torsion_projection(static_cast<Index>(k), j) =
          mod_floor(s.U(torsion_rows[k], j), G.torsion[k]);
  }
  return G;
}

DivisorClass divisor_class(const DivisorClassGroup& G, const TorusDivisor& D) {
  if (D.size() != G.free_projection.cols())
    throw DimensionMismatch("divisor has wrong length for this class group");
  DivisorClass c;
  c.free_part = G.free_projection * D;
  c.torsion_part = IntVector(static_cast<Index>(G.torsion.size()));
  for (Index i = 0; i < c.torsion_part.size(); ++i) {
    Int v = G.torsion_projection.row(i).dot(D);
    c.torsion_part(i) = mod_floor(v, G.torsion[static_cast<size_t>(i)]);
  }
  return c;
}

CartierData cartier_data(const Fan& F, const TorusDivisor& D) {
  if (D.size() != static_cast<Index>(F.rays.size()))
    throw DimensionMismatch("divisor length != ray count");
  CartierData cd;
  for (const Cone& c : F.max_cones) {
    IntMatrix A(static_cast<Index>(c.rays.size()), F.rank);
    IntVector b(static_cast<Index>(c.rays.size()));
    for (size_t k = 0; k < c.rays.size(); ++k) {
      A.row(static_cast<Index>(k)) = F.rays[static_cast<size_t>(c.rays[k])].transpose();
      b(static_cast<Index>(k)) = -D(c.rays[k]);
    }
    auto sol = solve_rational(A, b);
    if (!sol)
      throw NotSimplicial("no support function on a cone — dependent rays");  // unreachable after validate_fan
    cd.vertices.push_back(std::move(sol->x));
  }
  return cd;
}

namespace {

bool nef_check(const Fan& F, const TorusDivisor& D, bool strict) {
  if (D.size() != static_cast<Index>(F.rays.size()))
    throw DimensionMismatch("divisor length != ray count");
  CartierData cd = cartier_data(F, D);
  for (const Wall& w : walls(F)) {
    const RatVector& m = cd.vertices[static_cast<size_t>(w.cone_a)];
    const IntVector& u = F.rays[static_cast<size_t>(w.extra_b)];
    Rat pairing = 0;
    for (Index i = 0; i < F.rank; ++i) pairing += m(i) * Rat(u(i));
    Rat bound = Rat(-D(w.extra_b));
    if (strict ? !(pairing > bound) : !(pairing >= bound)) return false;
  }
  return true;
}

}  // namespace

bool is_nef(const Fan& F, const TorusDivisor& D) { return nef_check(F, D, false); }

bool is_ample(const Fan& F, const TorusDivisor& D) { return nef_check(F, D, true); }

bool is_fano(const Fan& F) { return is_ample(F, anticanonical(F)); }

RationalPolytope polytope_of(const Fan& F, const TorusDivisor& D) {
  if (D.size() != static_cast<Index>(F.rays.size()))
    throw DimensionMismatch("divisor length != ray count");
  RationalPolytope P;
  P.dim = F.rank;
  for (size_t r = 0; r < F.rays.size(); ++r)
    P.halfspaces.push_back({F.rays[r], D(static_cast<Index>(r))});
  return P;
}

}  // namespace cyfano
