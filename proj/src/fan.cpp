#include "cyfano/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

std::string cone_name(const std::vector<int>& rays) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < rays.size(); ++i) os << (i ? "," : "") << rays[i];
  os << "}";
  return os.str();
}

IntMatrix submatrix_rows(const Fan& F, const std::vector<int>& rows) {
  IntMatrix a(static_cast<Index>(rows.size()), F.rank);
  for (size_t i = 0; i < rows.size(); ++i)
    a.row(static_cast<Index>(i)) = F.rays[static_cast<size_t>(rows[i])].transpose();
  return a;
}

// Fan separation: two cones intersect in the common face spanned by their
// shared rays iff a functional vanishes on the shared rays and strictly
// separates the rest.  Scaling makes "strict" into ">= 1", an exact LP.
bool face_separated(const Fan& F, const Cone& a, const Cone& b) {
  std::vector<int> common;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                        std::back_inserter(common));
  RationalPolytope P;
  P.dim = F.rank;
  auto add = [&](const IntVector& n, Int off) { P.halfspaces.push_back({n, std::move(off)}); };
  for (int r : common) {
    add(F.rays[static_cast<size_t>(r)], Int(0));
    add(IntVector(-F.rays[static_cast<size_t>(r)]), Int(0));
  }
  for (int r : a.rays) {
    if (!std::binary_search(common.begin(), common.end(), r))
      add(F.rays[static_cast<size_t>(r)], Int(-1));  // <w, u> >= 1
  }
  for (int r : b.rays) {
    if (!std::binary_search(common.begin(), common.end(), r))
      add(IntVector(-F.rays[static_cast<size_t>(r)]), Int(-1));  // <w, u> <= -1
  }
  return polytope_feasible(P);
}

}  // namespace

Fan validate_fan(std::vector<IntVector> rays, std::vector<std::vector<int>> max_cones) {
  if (rays.empty()) throw NotAFan("no rays");
  Fan F;
  F.rank = rays[0].size();
  if (F.rank < 1) throw NotAFan("zero-dimensional lattice");
  for (size_t k = 0; k < rays.size(); ++k) {
    if (rays[k].size() != F.rank) throw NotAFan("ray " + std::to_string(k) + " has wrong dimension");
    Int g = 0;
    for (Index i = 0; i < rays[k].size(); ++i) g = gcd(g, rays[k](i));
    if (g == 0) throw NotAFan("ray " + std::to_string(k) + " is zero");
    if (g > 1) {
      for (Index i = 0; i < rays[k].size(); ++i) rays[k](i) /= g;
      F.warnings.push_back("ray " + std::to_string(k) + " primitivized (divided by " + g.str() + ")");
    }
  }
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (exactly_equal(rays[i], rays[j]))
        throw NotAFan("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  F.rays = std::move(rays);

  if (max_cones.empty()) throw NotAFan("no max cones");
  std::set<std::vector<int>> seen;
  for (auto& c : max_cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw NotAFan("empty max cone");
    for (int r : c) {
      if (r < 0 || static_cast<size_t>(r) >= F.rays.size())
        throw NotAFan("cone " + cone_name(c) + " references missing ray " + std::to_string(r));
    }
    if (!seen.insert(c).second) throw NotAFan("duplicate max cone " + cone_name(c));
    F.max_cones.push_back({c});
  }
  std::vector<bool> used(F.rays.size(), false);
  for (const Cone& c : F.max_cones)
    for (int r : c.rays) used[static_cast<size_t>(r)] = true;
  for (size_t k = 0; k < used.size(); ++k)
    if (!used[k]) throw NotAFan("ray " + std::to_string(k) + " belongs to no max cone");
  for (size_t i = 0; i < F.max_cones.size(); ++i) {
    for (size_t j = 0; j < F.max_cones.size(); ++j) {
      if (i == j) continue;
      const auto& a = F.max_cones[i].rays;
      const auto& b = F.max_cones[j].rays;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw NotAFan("max cone " + cone_name(a) + " is contained in " + cone_name(b));
    }
  }

  for (const Cone& c : F.max_cones) {
    IntMatrix m = submatrix_rows(F, c.rays);
    if (rank_of(m) != static_cast<Index>(c.rays.size()))
      throw NotSimplicial("cone " + cone_name(c.rays) + " has dependent rays");
  }
  if (rank_of(ray_matrix(F)) != F.rank)
    throw TorusFactor("rays span a proper subspace");
  for (size_t i = 0; i < F.max_cones.size(); ++i) {
    for (size_t j = i + 1; j < F.max_cones.size(); ++j) {
      if (!face_separated(F, F.max_cones[i], F.max_cones[j]))
        throw NotAFan("cones " + cone_name(F.max_cones[i].rays) + " and " +
                      cone_name(F.max_cones[j].rays) + " do not meet in a common face");
    }
  }
  return F;
}

namespace {

std::map<std::vector<int>, std::vector<int>> facet_incidence(const Fan& F) {
  std::map<std::vector<int>, std::vector<int>> facets;  // facet rays -> cone indices
  for (size_t ci = 0; ci < F.max_cones.size(); ++ci) {
    const auto& rays = F.max_cones[ci].rays;
    for (size_t omit = 0; omit < rays.size(); ++omit) {
      std::vector<int> facet;
      for (size_t k = 0; k < rays.size(); ++k)
        if (k != omit) facet.push_back(rays[k]);
      facets[facet].push_back(static_cast<int>(ci));
    }
  }
  return facets;
}

}  // namespace

bool is_complete(const Fan& F) {
  for (const Cone& c : F.max_cones)
    if (static_cast<Index>(c.rays.size()) != F.rank) return false;
  auto facets = facet_incidence(F);
  for (const auto& [facet, cones] : facets)
    if (cones.size() != 2) return false;
  // adjacency connectivity
  std::vector<std::vector<int>> adj(F.max_cones.size());
  for (const auto& [facet, cones] : facets) {
    adj[static_cast<size_t>(cones[0])].push_back(cones[1]);
    adj[static_cast<size_t>(cones[1])].push_back(cones[0]);
  }
  std::vector<bool> visited(F.max_cones.size(), false);
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int d : adj[static_cast<size_t>(c)]) {
      if (!visited[static_cast<size_t>(d)]) {
        visited[static_cast<size_t>(d)] = true;
        stack.push_back(d);
      }
    }
  }
  return std::all_of(visited.begin(), visited.end(), [](bool v) { return v; });
}

std::vector<Wall> walls(const Fan& F) {
  if (!is_complete(F)) throw NotComplete("walls require a complete fan");
  std::vector<Wall> out;
  for (const auto& [facet, cones] : facet_incidence(F)) {
    int a = std::min(cones[0], cones[1]);
    int b = std::max(cones[0], cones[1]);
    Wall w;
    w.facet = facet;
    w.cone_a = a;
    w.cone_b = b;
    for (int r : F.max_cones[static_cast<size_t>(b)].rays) {
      if (!std::binary_search(facet.begin(), facet.end(), r)) w.extra_b = r;
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Wall& x, const Wall& y) {
    return std::tie(x.cone_a, x.cone_b, x.facet) < std::tie(y.cone_a, y.cone_b, y.facet);
  });
  return out;
}

Int cone_multiplicity(const Fan& F, const Cone& c) {
  IntMatrix m = submatrix_rows(F, c.rays);
  SmithForm s = smith_normal_form(std::move(m));
  auto inv = s.invariant_factors();
  if (inv.size() != c.rays.size())
    throw NotSimplicial("cone " + cone_name(c.rays) + " has dependent rays");
  Int prod = 1;
  for (const Int& d : inv) prod *= d;
  return prod;
}

std::vector<Cone> singular_cones(const Fan& F) {
  std::set<std::vector<int>> faces;
  for (const Cone& c : F.max_cones) {
    const size_t n = c.rays.size();
    for (size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) face.push_back(c.rays[k]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::vector<int>> singular;
  for (const auto& face : faces) {
    if (cone_multiplicity(F, {face}) > 1) singular.push_back(face);
  }
  std::vector<Cone> minimal;
  for (const auto& s : singular) {
    bool has_smaller = false;
    for (const auto& t : singular) {
      if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end()))
        has_smaller = true;
    }
    if (!has_smaller) minimal.push_back({s});
  }
  std::sort(minimal.begin(), minimal.end(), [](const Cone& x, const Cone& y) {
    if (x.rays.size() != y.rays.size()) return x.rays.size() < y.rays.size();
    return x.rays < y.rays;
  });
  return minimal;
}

IntMatrix ray_matrix(const Fan& F) {
  IntMatrix m(static_cast<Index>(F.rays.size()), F.rank);
  for (size_t i = 0; i < F.rays.size(); ++i)
    m.row(static_cast<Index>(i)) = F.rays[i].transpose();
  return m;
}

}  // namespace cyfano
