#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "cyfano/divisor.hpp"
#include "cyfano/errors.hpp"
#include "support.hpp"

using namespace cyfano;
using testsupport::minor_gcd;
using testsupport::Rng;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

Fan pn(int n) {
  std::vector<IntVector> rays;
  for (int k = 0; k < n; ++k) {
    IntVector e = IntVector::Constant(n, Int(0));
    e(k) = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(-IntVector::Ones(n)));
  std::vector<std::vector<int>> cones;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> c;
    for (int r = 0; r <= n; ++r)
      if (r != omit) c.push_back(r);
    cones.push_back(c);
  }
  return validate_fan(rays, cones);
}

// P(1, w1, ..., wn) with the standard lattice choice.
Fan wps(std::vector<int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<IntVector> rays;
  IntVector u0 = IntVector::Constant(n, Int(0));
  for (int k = 0; k < n; ++k) u0(k) = -w[static_cast<size_t>(k)];
  rays.push_back(u0);
  for (int k = 0; k < n; ++k) {
    IntVector e = IntVector::Constant(n, Int(0));
    e(k) = 1;
    rays.push_back(e);
  }
  std::vector<std::vector<int>> cones;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> c;
    for (int r = 0; r <= n; ++r)
      if (r != omit) c.push_back(r);
    cones.push_back(c);
  }
  return validate_fan(rays, cones);
}

Fan torsion_fan() {
  return validate_fan({vec({1, 0}), vec({-1, 2}), vec({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
}

IntVector unit(Index n, Index k) {
  IntVector e = IntVector::Constant(n, Int(0));
  e(k) = 1;
  return e;
}

}  // namespace

TEST_CASE("class group of projective spaces and wps") {
  Fan F = pn(4);
  DivisorClassGroup G = class_group(F);
  CHECK(G.rank == 1);
  CHECK(G.torsion.empty());
  // SNF minor oracle on the 4-column ray matrix: all invariant factors 1
  IntMatrix R = ray_matrix(F);
  for (Index k = 1; k <= 4; ++k) CHECK(minor_gcd(R, k) == 1);

  DivisorClassGroup GW = class_group(wps({1, 1, 1, 2}));
  CHECK(GW.rank == 1);
  CHECK(GW.torsion.empty());
  // degree vector = weights under the canonical projection
  CHECK(GW.free_projection(0, 0) == 1);
  CHECK(GW.free_projection(0, 1) == 1);
  CHECK(GW.free_projection(0, 2) == 1);
  CHECK(GW.free_projection(0, 3) == 1);
  CHECK(GW.free_projection(0, 4) == 2);
}

TEST_CASE("class group torsion") {
  Fan F = torsion_fan();
  DivisorClassGroup G = class_group(F);
  CHECK(G.rank == 1);
  REQUIRE(G.torsion.size() == 1);
  CHECK(G.torsion[0] == 2);
  // minor-gcd oracle: d1 = 1, d1*d2 = 2
  IntMatrix R = ray_matrix(F);
  CHECK(minor_gcd(R, 1) == 1);
  CHECK(minor_gcd(R, 2) == 2);
}

TEST_CASE("divisor classes distinguish torsion") {
  Fan F = torsion_fan();
  DivisorClassGroup G = class_group(F);
  // D_0 and 2 D_2 have the same free degree; they differ by torsion.
  DivisorClass a = divisor_class(G, vec({1, 0, 0}));
  DivisorClass b = divisor_class(G, vec({0, 0, 2}));
  CHECK(exactly_equal(a.free_part, b.free_part));
  CHECK_FALSE(a == b);
}

TEST_CASE("divisor class examples") {
  Fan line = validate_fan({vec({1}), vec({-1})}, {{0}, {1}});
  DivisorClassGroup G = class_group(line);
  DivisorClass zero = divisor_class(G, vec({0, 0}));
  CHECK(zero.free_part(0) == 0);
  DivisorClass diff = divisor_class(G, vec({1, -1}));  // D_0 - D_1 = div(character)
  CHECK(diff == zero);

  Fan F = pn(4);
  DivisorClassGroup GP = class_group(F);
  IntVector five = IntVector::Constant(5, Int(0));
  five(0) = 5;
  CHECK(divisor_class(GP, five) == divisor_class(GP, anticanonical(F)));
}

TEST_CASE("class invariance under principal shifts") {
  Rng rng(1234);
  for (const Fan& F : {pn(2), pn(3), wps({1, 1, 2}), torsion_fan()}) {
    DivisorClassGroup G = class_group(F);
    CHECK(G.rank == static_cast<Index>(F.rays.size()) - F.rank);
    for (int trial = 0; trial < 25; ++trial) {
      IntVector D = rng.vector(static_cast<Index>(F.rays.size()), -6, 6);
      IntVector m = rng.vector(F.rank, -4, 4);
      IntVector shifted = D + principal_divisor(F, m);
      CHECK(divisor_class(G, D) == divisor_class(G, shifted));
    }
  }
}

TEST_CASE("cartier data") {
  Fan F = pn(2);
  CartierData zero = cartier_data(F, vec({0, 0, 0}));
  for (const RatVector& m : zero.vertices)
    for (Index i = 0; i < m.size(); ++i) CHECK(m(i) == 0);

  // O(1): the three vertices of the unit triangle, one per max cone
  CartierData o1 = cartier_data(F, vec({0, 0, 1}));
  std::set<std::pair<std::string, std::string>> got;
  for (const RatVector& m : o1.vertices)
    got.insert({rat_to_string(m(0)), rat_to_string(m(1))});
  std::set<std::pair<std::string, std::string>> expect{{"0", "0"}, {"1", "0"}, {"0", "1"}};
  CHECK(got == expect);

  // determinant-2 cone of P(1,1,2) produces a half-integral vertex for the
  // divisor of one of its rays; the weight-2 ray divisor stays integral.
  Fan W = wps({1, 2});
  CartierData du0 = cartier_data(W, vec({1, 0, 0}));
  bool half = false;
  for (const RatVector& m : du0.vertices)
    for (Index i = 0; i < m.size(); ++i)
      if (den(m(i)) == 2) half = true;
  CHECK(half);
  CartierData dw2 = cartier_data(W, vec({0, 0, 1}));
  for (const RatVector& m : dw2.vertices)
    for (Index i = 0; i < m.size(); ++i) CHECK(den(m(i)) == 1);
}

TEST_CASE("nef and ample") {
  Fan F = pn(2);
  IntVector zero = IntVector::Constant(3, Int(0));
  CHECK(is_nef(F, zero));
  CHECK_FALSE(is_ample(F, zero));
  IntVector minus = unit(3, 0);
  minus(0) = -1;
  CHECK_FALSE(is_nef(F, minus));
  CHECK(is_ample(F, IntVector(unit(3, 0))));

  CHECK(is_ample(wps({1, 1, 2, 5}), anticanonical(wps({1, 1, 2, 5}))));
}

TEST_CASE("fano checks") {
  CHECK(is_fano(pn(4)));
  CHECK(is_fano(wps({1, 1, 1, 2})));
  Fan hirzebruch3 =
      validate_fan({vec({1, 0}), vec({0, 1}), vec({-1, 3}), vec({0, -1})},
                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_FALSE(is_fano(hirzebruch3));
}

TEST_CASE("ample implies nef on random divisors") {
  Rng rng(777);
  for (const Fan& F : {pn(2), pn(3), wps({1, 1, 2})}) {
    for (int trial = 0; trial < 30; ++trial) {
      IntVector D = rng.vector(static_cast<Index>(F.rays.size()), -3, 5);
      if (is_ample(F, D)) CHECK(is_nef(F, D));
    }
  }
}

TEST_CASE("divisor polytopes") {
  Fan F = pn(4);
  IntVector zero = IntVector::Constant(5, Int(0));
  auto origin = lattice_points(polytope_of(F, zero));
  REQUIRE(origin.size() == 1);
  for (Index i = 0; i < 4; ++i) CHECK(origin[0](i) == 0);

  IntVector five = IntVector::Constant(5, Int(0));
  five(0) = 5;
  CHECK(lattice_points(polytope_of(F, five)).size() == 126);

  // O(6) on P(1,1,1,1,2): degree-6 monomials weighted (1,1,1,1,2)
  Fan W = wps({1, 1, 1, 2});
  IntVector six = IntVector::Constant(5, Int(0));
  six(0) = 6;
  size_t oracle = 0;  // choose exponent k of the weight-2 variable, then C(6-2k+3,3)
  for (int k = 0; 2 * k <= 6; ++k) {
    int rem = 6 - 2 * k;
    oracle += static_cast<size_t>((rem + 3) * (rem + 2) * (rem + 1) / 6);
  }
  CHECK(oracle == 130);
  CHECK(lattice_points(polytope_of(W, six)).size() == oracle);
}

TEST_CASE("nef dilates have monotone point counts") {
  Rng rng(31);
  Fan F = pn(2);
  for (int trial = 0; trial < 20; ++trial) {
    IntVector D = rng.vector(3, 0, 4);
    if (!is_nef(F, D)) continue;
    size_t prev = 0;
    for (int k = 0; k <= 2; ++k) {
      size_t cnt = lattice_points(polytope_of(F, IntVector(D * Int(k)))).size();
      if (k > 0) CHECK(cnt >= prev);
      prev = cnt;
    }
  }
}
