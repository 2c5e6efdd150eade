#include "cyfano/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyfano/errors.hpp"

namespace cyfano {

Int CohomologyVector::at(size_t i) const {
  if (lower[i] != upper[i])
    throw IndeterminateChase("dimension in degree " + std::to_string(i) +
                             " only known in [" + lower[i].str() + ", " + upper[i].str() + "]");
  return lower[i];
}

SupportComplex support_complex(const Fan& F, const TorusDivisor& D, const IntVector& weight) {
  SupportComplex K;
  std::vector<bool> negative(F.rays.size(), false);
  for (size_t r = 0; r < F.rays.size(); ++r) {
    if (F.rays[r].dot(weight) < -D(static_cast<Index>(r))) {
      negative[r] = true;
      K.vertices.push_back(static_cast<int>(r));
    }
  }
  std::set<std::vector<int>> faces;
  for (const Cone& c : F.max_cones) {
    std::vector<int> in;
    for (int r : c.rays)
      if (negative[static_cast<size_t>(r)]) in.push_back(r);
    const size_t n = in.size();
    for (size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) face.push_back(in[k]);
      faces.insert(std::move(face));
    }
  }
  K.faces.assign(faces.begin(), faces.end());
  return K;
}

std::vector<Int> reduced_betti(const SupportComplex& K) {
  // Group faces by dimension.
  std::map<size_t, std::vector<std::vector<int>>> by_dim;
  for (const auto& f : K.faces) by_dim[f.size() - 1].push_back(f);
  size_t top = 0;
  for (const auto& [d, _] : by_dim) top = std::max(top, d);
  if (K.faces.empty()) return {Int(1)};  // empty complex: one (-1)-class

  // rank of each boundary map; r[p] = rank of d_p : C_p -> C_{p-1}
  std::vector<Index> r(top + 2, 0);
  r[0] = by_dim.count(0) ? 1 : 0;  // augmentation C_0 -> C_{-1}
  for (size_t p = 1; p <= top; ++p) {
    if (!by_dim.count(p) || !by_dim.count(p - 1)) continue;
    const auto& rows = by_dim[p - 1];
    const auto& cols = by_dim[p];
    std::map<std::vector<int>, Index> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<Index>(i);
    IntMatrix B = IntMatrix::Constant(static_cast<Index>(rows.size()),
                                      static_cast<Index>(cols.size()), Int(0));
    for (size_t j = 0; j < cols.size(); ++j) {
      for (size_t omit = 0; omit < cols[j].size(); ++omit) {
        std::vector<int> facet;
        for (size_t k = 0; k < cols[j].size(); ++k)
          if (k != omit) facet.push_back(cols[j][k]);
        B(row_index.at(facet), static_cast<Index>(j)) = (omit % 2 == 0) ? 1 : -1;
      }
    }
    r[p] = rank_of(B);
  }

  std::vector<Int> b(top + 2, Int(0));
  b[0] = 1 - r[0];  // reduced degree -1
  for (size_t p = 0; p <= top; ++p) {
    Index cp = by_dim.count(p) ? static_cast<Index>(by_dim[p].size()) : 0;
    b[p + 1] = Int(cp - r[p] - r[p + 1]);
  }
  return b;
}

namespace {

CohomologyVector nef_fast_path(const Fan& F, const TorusDivisor& D) {
  std::vector<Int> dims(static_cast<size_t>(F.rank) + 1, Int(0));
  dims[0] = Int(lattice_points(polytope_of(F, D)).size());
  return CohomologyVector::exact_dims(std::move(dims));
}

CohomologyVector chamber_algorithm(const Fan& F, const TorusDivisor& D) {
  const Index n = F.rank;
  const size_t nrays = F.rays.size();
  if (nrays > 31) throw InvalidInput("chamber algorithm supports at most 31 rays");

  // Bounding box of all arrangement vertices {<m, u_rho> = -a_rho}.
  std::vector<RatVector> vertices;
  std::vector<Index> sel;
  auto collect = [&](auto&& self, Index start) -> void {
    if (static_cast<Index>(sel.size()) == n) {
      IntMatrix A(n, n);
      IntVector b(n);
      for (Index i = 0; i < n; ++i) {
        A.row(i) = F.rays[static_cast<size_t>(sel[static_cast<size_t>(i)])].transpose();
        b(i) = -D(sel[static_cast<size_t>(i)]);
      }
      auto sol = solve_rational(A, b);
      if (sol && sol->unique) vertices.push_back(sol->x);
      return;
    }
    for (Index i = start; i < static_cast<Index>(nrays); ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  collect(collect, 0);
  if (vertices.empty())
    throw CrossCheckFailed("no arrangement vertices on a complete fan");

  std::vector<Int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) {
    Rat mn = vertices[0](k), mx = vertices[0](k);
    for (const RatVector& v : vertices) {
      if (v(k) < mn) mn = v(k);
      if (mx < v(k)) mx = v(k);
    }
    lo[static_cast<size_t>(k)] = floor_rat(mn) - 1;
    hi[static_cast<size_t>(k)] = ceil_rat(mx) + 1;
  }

  std::vector<Int> h(static_cast<size_t>(n) + 1, Int(0));
  std::map<uint32_t, std::vector<Int>> betti_memo;
  IntVector weight(n);
  std::vector<Int> partial(nrays, Int(0));

  auto leaf = [&]() {
    uint32_t mask = 0;
    for (size_t r = 0; r < nrays; ++r) {
      if (partial[r] < -D(static_cast<Index>(r))) mask |= (1u << r);
    }
    auto it = betti_memo.find(mask);
    if (it == betti_memo.end()) {
      SupportComplex K = support_complex(F, D, weight);
      it = betti_memo.emplace(mask, reduced_betti(K)).first;
    }
    const auto& b = it->second;
    for (size_t j = 0; j < b.size() && j < h.size(); ++j) h[j] += b[j];
  };
  auto enumerate = [&](auto&& self, Index level) -> void {
    if (level == n) {
      leaf();
      return;
    }
    std::vector<Int> saved = partial;
    for (Int v = lo[static_cast<size_t>(level)]; v <= hi[static_cast<size_t>(level)]; ++v) {
      weight(level) = v;
      for (size_t r = 0; r < nrays; ++r)
        partial[r] = saved[r] + F.rays[r](level) * v;
      self(self, level + 1);
    }
    partial = saved;
  };
  enumerate(enumerate, 0);
  return CohomologyVector::exact_dims(std::move(h));
}

}  // namespace

CohomologyVector cohomology_dims(const Fan& F, const TorusDivisor& D, CohomologyMethod method) {
  if (D.size() != static_cast<Index>(F.rays.size()))
    throw DimensionMismatch("divisor length != ray count");
  if (!is_complete(F)) throw NotComplete("cohomology requires a complete fan");
  switch (method) {
    case CohomologyMethod::NefFastPath:
      if (!is_nef(F, D)) throw InvalidInput("nef fast path requested for a non-nef divisor");
      return nef_fast_path(F, D);
    case CohomologyMethod::Chamber:
      return chamber_algorithm(F, D);
    case CohomologyMethod::Auto:
    default:
      return is_nef(F, D) ? nef_fast_path(F, D) : chamber_algorithm(F, D);
  }
}

}  // namespace cyfano
