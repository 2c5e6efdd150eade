#pragma once

#include <vector>

#include "cyfano/divisor.hpp"

namespace cyfano {

// Cohomology dimensions per degree; equal bounds mean the value is exact.
// Interval entries only ever arise from indeterminate Koszul chases — the
// toric computations in this module are always exact.
struct CohomologyVector {
  std::vector<Int> lower;
  std::vector<Int> upper;

  static CohomologyVector exact_dims(std::vector<Int> dims) {
    CohomologyVector v;
    v.lower = dims;
    v.upper = std::move(dims);
    return v;
  }

  size_t size() const { return lower.size(); }
  bool exact() const { return lower == upper; }
  bool exact_at(size_t i) const { return lower[i] == upper[i]; }

  // The exact value at degree i; throws when only an interval is known.
  Int at(size_t i) const;

  bool operator==(const CohomologyVector& o) const {
    return lower == o.lower && upper == o.upper;
  }
};

// The induced subcomplex of the fan's boundary complex on the rays where the
// weight falls below the divisor's support function.
struct SupportComplex {
  std::vector<int> vertices;              // sorted ray indices
  std::vector<std::vector<int>> faces;    // all nonempty faces, each sorted
};

SupportComplex support_complex(const Fan& F, const TorusDivisor& D, const IntVector& weight);

// Ranks of rational reduced homology; entry j is the rank in degree j - 1,
// so entry 0 reports the (-1)-degree class of the empty complex.
std::vector<Int> reduced_betti(const SupportComplex& K);

enum class CohomologyMethod { Auto, Chamber, NefFastPath };

// h^i(F, O(D)) for i = 0..rank, exact.  Auto takes the nef fast path
// (polytope point count + vanishing) when it applies, else the weight-by-
// weight chamber algorithm.
CohomologyVector cohomology_dims(const Fan& F, const TorusDivisor& D,
                                 CohomologyMethod method = CohomologyMethod::Auto);

}  // namespace cyfano
