#include "cyfano/catalog.hpp"

#include <algorithm>

#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

std::vector<std::vector<int>> omit_one_cones(int nrays) {
  std::vector<std::vector<int>> cones;
  for (int omit = 0; omit < nrays; ++omit) {
    std::vector<int> c;
    for (int r = 0; r < nrays; ++r)
      if (r != omit) c.push_back(r);
    cones.push_back(c);
  }
  return cones;
}

TorusDivisor concentrated(Index nrays, Index ray, Int degree) {
  TorusDivisor D = IntVector::Constant(nrays, Int(0));
  D(ray) = std::move(degree);
  return D;
}

CompleteIntersectionCY weighted_ci(const std::vector<Int>& weights, const std::vector<Int>& degrees) {
  Fan F = weighted_projective(weights);
  CompleteIntersectionCY Z;
  Z.assume_smooth = true;
  for (const Int& d : degrees)
    Z.hypersurfaces.push_back(concentrated(static_cast<Index>(F.rays.size()), 0, d));
  Z.fan = std::move(F);
  return Z;
}

}  // namespace

Fan projective_space(int n) {
  if (n < 1) throw InvalidInput("projective space needs dimension >= 1");
  std::vector<IntVector> rays;
  for (int k = 0; k < n; ++k) {
    IntVector e = IntVector::Constant(n, Int(0));
    e(k) = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(-IntVector::Ones(n)));
  return validate_fan(rays, omit_one_cones(n + 1));
}

Fan weighted_projective(const std::vector<Int>& weights) {
  if (weights.size() < 2) throw InvalidInput("need at least two weights");
  for (const Int& w : weights)
    if (w <= 0) throw InvalidInput("weights must be positive");
  const long units = std::count(weights.begin(), weights.end(), Int(1));
  if (units < 3)
    throw NonPrimitiveConfiguration(
        "weight systems with fewer than three unit weights are not supported "
        "on the standard lattice");
  if (units == static_cast<long>(weights.size()))
    return projective_space(static_cast<int>(weights.size()) - 1);

  std::vector<Int> w = weights;
  bool permuted = false;
  if (w[0] != 1) {
    auto unit = std::find(w.begin(), w.end(), Int(1));
    std::rotate(w.begin(), unit, unit + 1);
    permuted = true;
  }

  const int n = static_cast<int>(w.size()) - 1;
  std::vector<IntVector> rays;
  IntVector u0 = IntVector::Constant(n, Int(0));
  for (int k = 0; k < n; ++k) u0(k) = -w[static_cast<size_t>(k) + 1];
  rays.push_back(u0);
  for (int k = 0; k < n; ++k) {
    IntVector e = IntVector::Constant(n, Int(0));
    e(k) = 1;
    rays.push_back(e);
  }
  Fan F = validate_fan(rays, omit_one_cones(n + 1));
  if (permuted) F.warnings.push_back("weights reordered to place a unit weight first");
  return F;
}

Fan product_fan(const std::vector<Fan>& factors) {
  if (factors.empty()) throw InvalidInput("product of no fans");
  Index rank = 0;
  for (const Fan& f : factors) rank += f.rank;

  std::vector<IntVector> rays;
  std::vector<int> ray_offset;
  Index coord = 0;
  for (const Fan& f : factors) {
    ray_offset.push_back(static_cast<int>(rays.size()));
    for (const IntVector& u : f.rays) {
      IntVector v = IntVector::Constant(rank, Int(0));
      v.segment(coord, f.rank) = u;
      rays.push_back(v);
    }
    coord += f.rank;
  }

  std::vector<std::vector<int>> cones{{}};
  for (size_t k = 0; k < factors.size(); ++k) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& base : cones) {
      for (const Cone& c : factors[k].max_cones) {
        std::vector<int> combined = base;
        for (int r : c.rays) combined.push_back(r + ray_offset[k]);
        next.push_back(std::move(combined));
      }
    }
    cones = std::move(next);
  }
  return validate_fan(rays, cones);
}

std::vector<CatalogEntry> catalog_list() {
  auto P = [](int n) { return projective_space(n); };
  std::vector<CatalogEntry> out;

  auto add_weighted = [&](const std::string& name, std::vector<Int> weights,
                          std::vector<Int> degrees, const std::string& provenance) {
    CompleteIntersectionCY Z = weighted_ci(weights, degrees);
    std::string desc = "degree";
    if (degrees.size() > 1) desc += "s";
    desc += " (";
    for (size_t i = 0; i < degrees.size(); ++i) {
      if (i) desc += ",";
      desc += degrees[i].str();
    }
    desc += ") in P(";
    for (size_t i = 0; i < weights.size(); ++i) {
      if (i) desc += ",";
      desc += weights[i].str();
    }
    desc += ")";
    out.push_back({name, desc, provenance, std::move(Z)});
  };

  const std::string classical =
      "classical weighted-hypersurface Calabi-Yau threefold; generic member "
      "smooth and inside the smooth locus of the ambient";
  const std::string classical_ci =
      "classical codimension-2 weighted complete-intersection Calabi-Yau "
      "threefold; generic member smooth and inside the smooth locus";

  add_weighted("X5", {1, 1, 1, 1, 1}, {5}, classical);
  add_weighted("X6", {1, 1, 1, 1, 2}, {6}, classical);
  add_weighted("X8", {1, 1, 1, 1, 4}, {8}, classical);
  add_weighted("X10", {1, 1, 1, 2, 5}, {10}, classical);
  add_weighted("X24", {1, 1, 1, 1, 1, 1}, {2, 4}, classical_ci);
  add_weighted("X33", {1, 1, 1, 1, 1, 1}, {3, 3}, classical_ci);
  add_weighted("X34", {1, 1, 1, 1, 1, 2}, {3, 4}, classical_ci);
  add_weighted("X44", {1, 1, 1, 1, 2, 2}, {4, 4}, classical_ci);

  {
    Fan F = P(5);
    CompleteIntersectionCY Z{F, {concentrated(6, 0, 6)}, true};
    out.push_back({"sextic4fold", "degree (6) in P(1,1,1,1,1,1)",
                   "fourfold analogue added for acceptance coverage; generic sextic "
                   "fourfold is smooth",
                   std::move(Z)});
  }
  {
    Fan F = product_fan({P(1), P(1), P(1), P(1)});
    TorusDivisor N = IntVector::Constant(8, Int(0));
    for (Index i = 0; i < 4; ++i) N(2 * i) = 2;
    CompleteIntersectionCY Z{F, {N}, true};
    out.push_back({"ci2222", "multidegree (2,2,2,2) in (P^1)^4",
                   "fourfold-ambient threefold added for acceptance coverage; generic "
                   "member smooth",
                   std::move(Z)});
  }
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (CatalogEntry& e : catalog_list())
    if (e.name == name) return std::move(e);
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

}  // namespace cyfano
