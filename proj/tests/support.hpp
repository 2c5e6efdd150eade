#pragma once

// Shared helpers for the test binaries: a deterministic RNG (stdlib
// distributions are not byte-portable across implementations) and small
// independent oracles used to cross-check library output.

#include <cstdint>
#include <random>
#include <vector>

#include "cyfano/arith.hpp"

namespace testsupport {

using cyfano::Index;
using cyfano::Int;
using cyfano::IntMatrix;
using cyfano::IntVector;
using cyfano::Rat;

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi], portable.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }

  IntMatrix matrix(Index rows, Index cols, int lo, int hi) {
    IntMatrix a(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) a(i, j) = uniform(lo, hi);
    return a;
  }

  IntVector vector(Index n, int lo, int hi) {
    IntVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

// Cofactor-expansion determinant: an implementation independent of the
// library's fraction-free elimination.
inline Int cofactor_det(const IntMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int sum = 0;
  for (Index k = 0; k < n; ++k) {
    if (a(0, k) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index jj = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == k) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    }
    Int term = a(0, k) * cofactor_det(minor);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

// gcd of all k x k minors, for invariant-factor cross-checks on small inputs.
inline Int minor_gcd(const IntMatrix& a, Index k) {
  std::vector<Index> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
  Int g = 0;
  std::vector<Index> rsel, csel;
  // enumerate k-subsets of rows and columns
  std::vector<std::vector<Index>> rsubs, csubs;
  auto enumerate = [](Index n, Index k2) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index start) -> void {
      if (static_cast<Index>(cur.size()) == k2) {
        out.push_back(cur);
        return;
      }
      for (Index i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  rsubs = enumerate(a.rows(), k);
  csubs = enumerate(a.cols(), k);
  for (const auto& rs : rsubs) {
    for (const auto& cs : csubs) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
          sub(i, j) = a(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
      g = cyfano::gcd(g, cofactor_det(sub));
    }
  }
  return cyfano::abs(g);
}

}  // namespace testsupport
