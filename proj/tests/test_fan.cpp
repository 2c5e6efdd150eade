#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyfano/errors.hpp"
#include "cyfano/fan.hpp"
#include "support.hpp"

using namespace cyfano;
using testsupport::cofactor_det;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

// Fan of projective n-space: e_1..e_n, -sum, all n-subsets as max cones.
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

Fan p1xp1() {
  return validate_fan({vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})},
                      {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Fan p112() {
  return validate_fan({vec({-1, -2}), vec({1, 0}), vec({0, 1})}, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace

TEST_CASE("projective space fans validate") {
  Fan F = pn(4);
  CHECK(F.rays.size() == 5);
  CHECK(F.max_cones.size() == 5);
  CHECK(F.rank == 4);
  CHECK(F.warnings.empty());
  CHECK(is_complete(F));
}

TEST_CASE("cone over a square is not simplicial") {
  CHECK_THROWS_AS(
      validate_fan({vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1})},
                   {{0, 1, 2, 3}}),
      NotSimplicial);
}

TEST_CASE("rays in a hyperplane give a torus factor") {
  CHECK_THROWS_AS(
      validate_fan({vec({1, 0, 0}), vec({0, 1, 0}), vec({-1, -1, 0})}, {{0, 1}, {1, 2}, {0, 2}}),
      TorusFactor);
}

TEST_CASE("overlapping cones are rejected") {
  CHECK_THROWS_AS(
      validate_fan({vec({1, 0}), vec({0, 1}), vec({1, 2}), vec({1, -1})}, {{0, 1}, {2, 3}}),
      NotAFan);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(validate_fan({vec({0, 0}), vec({1, 0})}, {{0, 1}}), NotAFan);
  CHECK_THROWS_AS(validate_fan({vec({1, 0}), vec({2, 0})}, {{0, 1}}), NotAFan);  // duplicates
  CHECK_THROWS_AS(validate_fan({vec({1, 0}), vec({0, 1})}, {{0}}), NotAFan);     // unused ray
  CHECK_THROWS_AS(validate_fan({vec({1, 0}), vec({0, 1})}, {{0, 1}, {0}}), NotAFan);  // nested
}

TEST_CASE("primitivization warns and rescales") {
  Fan F = validate_fan({vec({2, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(F.rays[0](0) == 1);
  REQUIRE(F.warnings.size() == 1);
  CHECK(F.warnings[0].find("primitivized") != std::string::npos);
}

TEST_CASE("completeness") {
  CHECK(is_complete(pn(2)));
  CHECK(is_complete(p1xp1()));
  Fan affine = validate_fan({vec({1, 0}), vec({0, 1})}, {{0, 1}});
  CHECK_FALSE(is_complete(affine));
  CHECK_THROWS_AS(walls(affine), NotComplete);
}

TEST_CASE("wall counts") {
  CHECK(walls(pn(2)).size() == 3);
  CHECK(walls(pn(3)).size() == 6);
  CHECK(walls(p1xp1()).size() == 4);
}

TEST_CASE("wall structure on the projective plane") {
  Fan F = pn(2);
  for (const Wall& w : walls(F)) {
    CHECK(w.facet.size() == 1);
    CHECK(w.cone_a < w.cone_b);
    const auto& b = F.max_cones[static_cast<size_t>(w.cone_b)].rays;
    CHECK(std::find(b.begin(), b.end(), w.extra_b) != b.end());
    CHECK(std::find(w.facet.begin(), w.facet.end(), w.extra_b) == w.facet.end());
  }
}

TEST_CASE("every facet of a complete fan is shared by exactly two cones") {
  for (const Fan& F : {pn(2), pn(3), p1xp1(), p112()}) {
    std::map<std::vector<int>, int> count;
    for (const Cone& c : F.max_cones) {
      for (size_t omit = 0; omit < c.rays.size(); ++omit) {
        std::vector<int> facet;
        for (size_t k = 0; k < c.rays.size(); ++k)
          if (k != omit) facet.push_back(c.rays[k]);
        count[facet]++;
      }
    }
    for (const auto& [facet, n] : count) CHECK(n == 2);
  }
}

TEST_CASE("cone multiplicities") {
  Fan s = validate_fan({vec({1, 0}), vec({1, 2}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(cone_multiplicity(s, {{0, 1}}) == 2);
  IntMatrix m(2, 2);
  m.row(0) = s.rays[0].transpose();
  m.row(1) = s.rays[1].transpose();
  CHECK(abs(cofactor_det(m)) == 2);  // determinant oracle
  CHECK(cone_multiplicity(s, {{0, 2}}) == 1);
  CHECK(cone_multiplicity(pn(2), {{0, 1}}) == 1);
}

TEST_CASE("singular cones") {
  CHECK(singular_cones(pn(4)).empty());

  auto sing = singular_cones(p112());
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].rays == std::vector<int>{0, 1});
  CHECK(cone_multiplicity(p112(), sing[0]) == 2);
}

TEST_CASE("validate_fan is idempotent") {
  Fan F = p112();
  std::vector<std::vector<int>> cones;
  for (const Cone& c : F.max_cones) cones.push_back(c.rays);
  Fan G = validate_fan(F.rays, cones);
  CHECK(F.rank == G.rank);
  REQUIRE(F.rays.size() == G.rays.size());
  for (size_t i = 0; i < F.rays.size(); ++i) CHECK(exactly_equal(F.rays[i], G.rays[i]));
  CHECK(F.max_cones.size() == G.max_cones.size());
  for (size_t i = 0; i < F.max_cones.size(); ++i) CHECK(F.max_cones[i] == G.max_cones[i]);
  CHECK(G.warnings.empty());
}
