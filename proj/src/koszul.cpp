#include "cyfano/koszul.hpp"

#include <map>

#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

struct ClassLess {
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    if (lex_less(a.free_part, b.free_part)) return true;
    if (lex_less(b.free_part, a.free_part)) return false;
    return lex_less(a.torsion_part, b.torsion_part);
  }
};

void check_ci(const CompleteIntersectionCY& Z, const TorusDivisor& D) {
  const Index nrays = static_cast<Index>(Z.fan.rays.size());
  if (Z.hypersurfaces.empty() || Z.dim() < 1)
    throw InvalidInput("need 1 <= #hypersurfaces < dim of the ambient");
  for (const TorusDivisor& N : Z.hypersurfaces)
    if (N.size() != nrays) throw DimensionMismatch("hypersurface length != ray count");
  if (D.size() != nrays) throw DimensionMismatch("divisor length != ray count");
}

}  // namespace

KoszulPage koszul_page(const CompleteIntersectionCY& Z, const TorusDivisor& D) {
  check_ci(Z, D);
  const size_t n = Z.hypersurfaces.size();
  const size_t nq = static_cast<size_t>(Z.fan.rank) + 1;

  // Twists that are linearly equivalent have equal cohomology; key the memo
  // by divisor class so repeated classes (common in products) compute once.
  DivisorClassGroup G = class_group(Z.fan);
  std::map<DivisorClass, std::vector<Int>, ClassLess> memo;
  auto ambient = [&](const TorusDivisor& E) -> const std::vector<Int>& {
    DivisorClass c = divisor_class(G, E);
    auto it = memo.find(c);
    if (it == memo.end()) it = memo.emplace(std::move(c), cohomology_dims(Z.fan, E).lower).first;
    return it->second;
  };

  KoszulPage page;
  page.columns.assign(n + 1, CohomologyVector::exact_dims(std::vector<Int>(nq, Int(0))));
  for (size_t S = 0; S < (size_t(1) << n); ++S) {
    TorusDivisor E = D;
    size_t p = 0;
    for (size_t i = 0; i < n; ++i) {
      if (S & (size_t(1) << i)) {
        E -= Z.hypersurfaces[i];
        ++p;
      }
    }
    const std::vector<Int>& h = ambient(E);
    for (size_t q = 0; q < nq; ++q) {
      page.columns[p].lower[q] += h[q];
      page.columns[p].upper[q] += h[q];
    }
  }
  return page;
}

CohomologyVector ci_twisted_cohomology(const CompleteIntersectionCY& Z, const TorusDivisor& D) {
  KoszulPage page = koszul_page(Z, D);
  const int n = static_cast<int>(Z.hypersurfaces.size());
  const int nF = static_cast<int>(Z.fan.rank);
  const int m = nF - n;

  // Nonzero entries; the entry at column -p, row q sits in total degree q - p.
  struct Node {
    int p, q;
    Int a;
  };
  std::vector<Node> nodes;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= nF; ++q) {
      const Int& a = page.columns[static_cast<size_t>(p)].lower[static_cast<size_t>(q)];
      if (a > 0) nodes.push_back({p, q, a});
    }
  }
  auto degree = [](const Node& x) { return x.q - x.p; };

  // One variable per possible differential: some page r >= 1 maps
  // (-p, q) -> (-p + r, q - r + 1), raising the total degree by one.
  // Every differential rank drains the shared capacity of its endpoints,
  // so feasible rank assignments are exactly the integer points of a
  // bipartite b-matching polytope (slices of consecutive total degree).
  struct Edge {
    size_t from, to;
  };
  std::vector<Edge> edges;
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = 0; j < nodes.size(); ++j) {
      int r = nodes[i].p - nodes[j].p;
      if (r >= 1 && nodes[j].q == nodes[i].q - r + 1) edges.push_back({i, j});
    }
  }

  RationalPolytope P;
  P.dim = static_cast<Index>(edges.size());
  for (Index e = 0; e < P.dim; ++e) {
    IntVector pos = IntVector::Constant(P.dim, Int(0));
    pos(e) = 1;
    P.halfspaces.push_back({pos, Int(0)});
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    IntVector incident = IntVector::Constant(P.dim, Int(0));
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e].from == i || edges[e].to == i) incident(static_cast<Index>(e)) = 1;
    P.halfspaces.push_back({IntVector(-incident), nodes[i].a});
    const int k = degree(nodes[i]);
    // entries outside the degree range of sheaf cohomology on Z must die
    if (k < 0 || k > m) P.halfspaces.push_back({incident, Int(-nodes[i].a)});
  }

  CohomologyVector out;
  out.lower.assign(static_cast<size_t>(m) + 1, Int(0));
  out.upper.assign(static_cast<size_t>(m) + 1, Int(0));
  for (int k = 0; k <= m; ++k) {
    Int total = 0;
    RatVector w = RatVector::Constant(P.dim, Rat(0));
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (degree(nodes[i]) != k) continue;
      total += nodes[i].a;
      for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].from == i || edges[e].to == i) w(static_cast<Index>(e)) = 1;
    }
    LpResult hi = linear_program_max(P, w);
    LpResult lo = linear_program_max(P, RatVector(-w));
    if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal)
      throw CrossCheckFailed("spectral sequence cannot converge on the given page data");
    if (!is_integer(hi.value) || !is_integer(lo.value))
      throw CrossCheckFailed("non-integral rank bound in an integral matching problem");
    out.lower[static_cast<size_t>(k)] = total - num(hi.value);
    out.upper[static_cast<size_t>(k)] = total + num(lo.value);
    if (out.lower[static_cast<size_t>(k)] < 0 ||
        out.upper[static_cast<size_t>(k)] > total ||
        out.lower[static_cast<size_t>(k)] > out.upper[static_cast<size_t>(k)])
      throw CrossCheckFailed("rank bounds escaped the page capacity");
  }

  // The alternating sum over any feasible chase telescopes to the alternating
  // sum of the page, i.e. Σ_S (-1)^{|S|} χ(F, O(D - N_S)); verify the result
  // is consistent with it.
  Int chi_page = 0;
  for (const Node& x : nodes) chi_page += (degree(x) % 2 == 0) ? x.a : Int(-x.a);
  Int alt_lo = 0, alt_hi = 0;
  for (int k = 0; k <= m; ++k) {
    if (k % 2 == 0) {
      alt_lo += out.lower[static_cast<size_t>(k)];
      alt_hi += out.upper[static_cast<size_t>(k)];
    } else {
      alt_lo -= out.upper[static_cast<size_t>(k)];
      alt_hi -= out.lower[static_cast<size_t>(k)];
    }
  }
  if (chi_page < alt_lo || chi_page > alt_hi)
    throw CrossCheckFailed("Euler characteristic mismatch between chase and page");

  return out;
}

Int normal_bundle_sections(const CompleteIntersectionCY& Z) {
  Int total = 0;
  for (const TorusDivisor& N : Z.hypersurfaces) total += ci_twisted_cohomology(Z, N).at(0);
  return total;
}

CohomologyVector structure_sheaf_profile(const CompleteIntersectionCY& Z) {
  TorusDivisor zero = IntVector::Constant(static_cast<Index>(Z.fan.rays.size()), Int(0));
  return ci_twisted_cohomology(Z, zero);
}

}  // namespace cyfano
