#include "cyfano/chow.hpp"

#include <algorithm>

#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

std::vector<int> support_of(const std::vector<int>& monomial) {
  std::vector<int> s = monomial;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_face(const Fan& F, const std::vector<int>& support) {
  for (const Cone& c : F.max_cones) {
    if (std::includes(c.rays.begin(), c.rays.end(), support.begin(), support.end())) return true;
  }
  return false;
}

// Eliminates repeated rays from top-degree monomials via the linear
// relations Σ ⟨m, u_ρ⟩ x_ρ = 0, caching the resulting degrees.
class Reducer {
 public:
  explicit Reducer(const Fan& F) : F_(F) {}

  Rat degree(const std::vector<int>& monomial) {
    auto it = memo_.find(monomial);
    if (it != memo_.end()) return it->second;
    Rat d = compute(monomial);
    memo_.emplace(monomial, d);
    return d;
  }

 private:
  Rat compute(const std::vector<int>& monomial) {
    std::vector<int> support = support_of(monomial);
    if (!is_face(F_, support)) return Rat(0);
    if (support.size() == monomial.size()) {
      // distinct rays spanning a face of full size: a max cone
      for (const Cone& c : F_.max_cones)
        if (c.rays == support) return Rat(1) / Rat(cone_multiplicity(F_, c));
      throw CrossCheckFailed("full-size face is not a max cone");
    }

    int rep = -1;
    for (size_t i = 0; i + 1 < monomial.size(); ++i)
      if (monomial[i] == monomial[i + 1]) {
        rep = monomial[i];
        break;
      }

    // relation character: 1 on the repeated ray, 0 on the other rays of a
    // containing max cone; among the candidate cones take the
    // lexicographically smallest character
    const Index n = F_.rank;
    bool found = false;
    RatVector best(n);
    std::vector<int> best_cone;
    for (const Cone& c : F_.max_cones) {
      if (!std::includes(c.rays.begin(), c.rays.end(), support.begin(), support.end())) continue;
      IntMatrix A(n, n);
      IntVector b(n);
      for (Index i = 0; i < n; ++i) {
        size_t ri = static_cast<size_t>(c.rays[static_cast<size_t>(i)]);
        A.row(i) = F_.rays[ri].transpose();
        b(i) = (c.rays[static_cast<size_t>(i)] == rep) ? 1 : 0;
      }
      auto sol = solve_rational(A, b);
      if (!sol || !sol->unique) throw CrossCheckFailed("degenerate max cone in reduction");
      if (!found || lex_less(sol->x, best)) {
        found = true;
        best = sol->x;
        best_cone = c.rays;
      }
    }
    if (!found) throw CrossCheckFailed("supported monomial with no containing cone");

    // x_rep = -Σ_{τ outside the cone} ⟨m, u_τ⟩ x_τ
    Rat total = 0;
    for (size_t t = 0; t < F_.rays.size(); ++t) {
      if (std::binary_search(best_cone.begin(), best_cone.end(), static_cast<int>(t))) continue;
      Rat coeff = 0;
      for (Index k = 0; k < n; ++k) coeff += best(k) * Rat(F_.rays[t](k));
      if (coeff == 0) continue;
      std::vector<int> child = monomial;
      child.erase(std::find(child.begin(), child.end(), rep));
      child.insert(std::upper_bound(child.begin(), child.end(), static_cast<int>(t)),
                   static_cast<int>(t));
      total -= coeff * degree(child);
    }
    return total;
  }

  const Fan& F_;
  std::map<std::vector<int>, Rat> memo_;
};

RayPolynomial one() { return {{{}, Rat(1)}}; }

void add_into(RayPolynomial& into, const RayPolynomial& p, const Rat& scale) {
  for (const auto& [mono, c] : p) {
    Rat& slot = into[mono];
    slot += scale * c;
    if (slot == 0) into.erase(mono);
  }
}

RayPolynomial degree_part(const RayPolynomial& p, size_t k) {
  RayPolynomial out;
  for (const auto& [mono, c] : p)
    if (mono.size() == k) out.emplace(mono, c);
  return out;
}

}  // namespace

RayPolynomial divisor_polynomial(const TorusDivisor& D) {
  RayPolynomial p;
  for (Index r = 0; r < D.size(); ++r)
    if (D(r) != 0) p.emplace(std::vector<int>{static_cast<int>(r)}, Rat(D(r)));
  return p;
}

RayPolynomial multiply(const Fan& F, const RayPolynomial& a, const RayPolynomial& b,
                       Index max_degree) {
  RayPolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (static_cast<Index>(ma.size() + mb.size()) > max_degree) continue;
      std::vector<int> mono(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), mono.begin());
      if (!is_face(F, support_of(mono))) continue;
      Rat& slot = out[mono];
      slot += ca * cb;
      if (slot == 0) out.erase(mono);
    }
  }
  return out;
}

Rat chow_degree(const Fan& F, const RayPolynomial& top) {
  Reducer red(F);
  Rat total = 0;
  for (const auto& [mono, c] : top) {
    if (static_cast<Index>(mono.size()) != F.rank)
      throw WrongDegree("pairing needs a homogeneous class of top degree");
    total += c * red.degree(mono);
  }
  return total;
}

Rat intersection_number(const Fan& F, const std::vector<TorusDivisor>& divisors) {
  if (!is_complete(F)) throw NotComplete("intersection numbers need a complete fan");
  if (static_cast<Index>(divisors.size()) != F.rank)
    throw WrongDegree("need exactly rank-many divisor factors");
  RayPolynomial prod = one();
  for (const TorusDivisor& D : divisors) {
    if (D.size() != static_cast<Index>(F.rays.size()))
      throw DimensionMismatch("divisor length != ray count");
    prod = multiply(F, prod, divisor_polynomial(D), F.rank);
  }
  return chow_degree(F, prod);
}

ChernDataCI chern_data_ci(const CompleteIntersectionCY& Z) {
  const Fan& F = Z.fan;
  if (!is_complete(F)) throw NotComplete("Chern data needs a complete fan");
  const Index nrays = static_cast<Index>(F.rays.size());
  if (Z.hypersurfaces.empty() || Z.dim() < 1)
    throw InvalidInput("need 1 <= #hypersurfaces < dim of the ambient");
  TorusDivisor sum = IntVector::Constant(nrays, Int(0));
  for (const TorusDivisor& N : Z.hypersurfaces) {
    if (N.size() != nrays) throw DimensionMismatch("hypersurface length != ray count");
    sum += N;
  }
  DivisorClassGroup G = class_group(F);
  if (!(divisor_class(G, sum) == divisor_class(G, anticanonical(F))))
    throw AdjunctionFailed("hypersurface degrees do not sum to the anticanonical class");

  const Index m = Z.dim();

  RayPolynomial cF = one();
  for (Index r = 0; r < nrays; ++r) {
    RayPolynomial factor = one();
    factor.emplace(std::vector<int>{static_cast<int>(r)}, Rat(1));
    cF = multiply(F, cF, factor, m);
  }
  RayPolynomial cN = one();
  for (const TorusDivisor& N : Z.hypersurfaces) {
    RayPolynomial factor = one();
    add_into(factor, divisor_polynomial(N), Rat(1));
    cN = multiply(F, cN, factor, m);
  }
  // c(N)^{-1} = Σ (1 - c(N))^j as a truncated series
  RayPolynomial u = cN;
  u.erase(std::vector<int>{});
  RayPolynomial inv = one();
  RayPolynomial power = one();
  for (Index j = 1; j <= m; ++j) {
    power = multiply(F, power, u, m);
    add_into(inv, power, (j % 2 == 0) ? Rat(1) : Rat(-1));
  }
  RayPolynomial cZ = multiply(F, cF, inv, m);

  ChernDataCI out;
  out.chern.resize(static_cast<size_t>(m) + 1);
  for (Index k = 0; k <= m; ++k)
    out.chern[static_cast<size_t>(k)] = degree_part(cZ, static_cast<size_t>(k));

  out.fundamental = one();
  for (const TorusDivisor& N : Z.hypersurfaces)
    out.fundamental = multiply(F, out.fundamental, divisor_polynomial(N), F.rank);

  if (!singular_cones(F).empty())
    out.notes.push_back(
        "rational intersection ring of a singular ambient; values assume the "
        "intersection misses the singular locus");
  return out;
}

ChernNumbers chern_numbers_ci(const CompleteIntersectionCY& Z) {
  ChernDataCI data = chern_data_ci(Z);
  const Fan& F = Z.fan;
  const size_t m = static_cast<size_t>(Z.dim());

  ChernNumbers out;
  out.notes = data.notes;
  out.top = chow_degree(F, multiply(F, data.chern[m], data.fundamental, F.rank));
  if (m == 4) {
    RayPolynomial c2sq = multiply(F, data.chern[2], data.chern[2], F.rank);
    out.c2_squared = chow_degree(F, multiply(F, c2sq, data.fundamental, F.rank));
  }
  return out;
}

Int euler_characteristic_ci(const CompleteIntersectionCY& Z) {
  Rat e = chern_numbers_ci(Z).top;
  if (!is_integer(e))
    throw NonIntegerEuler("top Chern number " + rat_to_string(e) + " is not an integer");
  return num(e);
}

}  // namespace cyfano
