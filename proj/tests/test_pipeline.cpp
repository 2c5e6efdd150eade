#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cyfano/catalog.hpp"
#include "cyfano/errors.hpp"
#include "cyfano/pipeline.hpp"

using namespace cyfano;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

CompleteIntersectionCY cat(const std::string& name) { return catalog_entry(name).cy; }

TorusDivisor on_ray0(Index nrays, int d) {
  TorusDivisor N = TorusDivisor::Zero(nrays);
  N(0) = d;
  return N;
}

CompleteIntersectionCY k3_23() {
  CompleteIntersectionCY Z;
  Z.fan = projective_space(4);
  Z.hypersurfaces = {on_ray0(5, 2), on_ray0(5, 3)};
  Z.assume_smooth = true;
  return Z;
}

// blow-up of the projective plane at a torus-fixed point; ray 3 is exceptional
Fan dp1() {
  return validate_fan({vec({1, 0}), vec({0, 1}), vec({-1, -1}), vec({1, 1})},
                      {{0, 3}, {1, 3}, {1, 2}, {0, 2}});
}

// Hirzebruch surface with twist 3: complete, smooth, not Fano
Fan hirzebruch3() {
  return validate_fan({vec({1, 0}), vec({0, 1}), vec({-1, 3}), vec({0, -1})},
                      {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

bool check_is(const ValidationReport& rep, const std::string& name, bool passed) {
  for (const ValidationCheck& c : rep.checks)
    if (c.name == name) return c.passed == passed;
  return false;
}

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
  for (const std::string& s : lines)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("quintic passes every validation check") {
  CompleteIntersectionCY Z = cat("X5");
  ValidationReport rep = validate_cy(Z);
  CHECK(rep.ok());
  CHECK(rep.cy_ok);
  CHECK(rep.dimension_ok);
  CHECK(rep.first_failure() == nullptr);
  REQUIRE(rep.checks.size() == 8);
  for (const ValidationCheck& c : rep.checks) CHECK(c.passed);
  CHECK(rep.checks.back().name == "dimension");
  CHECK(mentions(rep.assumptions, "very ampleness"));
  CHECK(mentions(rep.assumptions, "user-asserted"));
  CHECK_NOTHROW(require_valid_cy(rep));
}

TEST_CASE("quintic certificate: smooth, every ray nef-and-big") {
  SmoothnessCertificate cert = smoothness_certificate(cat("X5"));
  CHECK(cert.verdict == Verdict::Smooth);
  CHECK(std::string(verdict_name(cert.verdict)) == "smooth");
  REQUIRE(cert.rays.size() == 5);
  for (const RayCertificate& rc : cert.rays) {
    CHECK(rc.certified);
    REQUIRE(rc.paths.size() == 1);
    CHECK(rc.paths[0].path == CertPath::NefAndBig);
    CHECK(rc.paths[0].evidence.find("= 5 > 0") != std::string::npos);
  }

  CertificateOptions all;
  all.all_paths = true;
  SmoothnessCertificate verbose = smoothness_certificate(cat("X5"), all);
  CHECK(verbose.verdict == Verdict::Smooth);
  for (const RayCertificate& rc : verbose.rays) {
    REQUIRE(rc.paths.size() == 3);
    CHECK(rc.paths[0].path == CertPath::NefAndBig);
    CHECK(rc.paths[1].path == CertPath::CompleteIntersectionNef);
    CHECK(rc.paths[2].path == CertPath::DirectKoszulVanishing);
  }
}

TEST_CASE("certification routes can be forced and agree") {
  CertificateOptions direct_only;
  direct_only.use_nef_big = false;
  direct_only.use_ci_nef = false;
  CertificateOptions ci_only;
  ci_only.use_nef_big = false;
  ci_only.use_direct = false;

  for (const char* name : {"X33", "ci2222"}) {
    CAPTURE(name);
    CompleteIntersectionCY Z = cat(name);
    SmoothnessCertificate base = smoothness_certificate(Z);
    CHECK(base.verdict == Verdict::Smooth);

    SmoothnessCertificate direct = smoothness_certificate(Z, direct_only);
    CHECK(direct.verdict == Verdict::Smooth);
    for (const RayCertificate& rc : direct.rays) {
      REQUIRE(rc.paths.size() == 1);
      CHECK(rc.paths[0].path == CertPath::DirectKoszulVanishing);
    }

    SmoothnessCertificate nef = smoothness_certificate(Z, ci_only);
    CHECK(nef.verdict == Verdict::Smooth);
  }

  // on the product ambient the ray divisors are nef but never big on Z,
  // so the default certificate falls through to the second route
  SmoothnessCertificate cert = smoothness_certificate(cat("ci2222"));
  for (const RayCertificate& rc : cert.rays) {
    REQUIRE(rc.certified);
    CHECK(rc.paths[0].path == CertPath::CompleteIntersectionNef);
  }
}

TEST_CASE("X10: five per-ray records on a singular ambient") {
  SmoothnessCertificate cert = smoothness_certificate(cat("X10"));
  CHECK(cert.verdict == Verdict::Smooth);
  REQUIRE(cert.rays.size() == 5);
  for (const RayCertificate& rc : cert.rays) {
    CHECK(rc.certified);
    CHECK(rc.paths[0].path == CertPath::NefAndBig);
    CHECK(rc.paths[0].evidence.find("> 0") != std::string::npos);
  }
  // degrees are the cubes of the weights
  CHECK(cert.rays[3].paths[0].evidence.find("= 8 > 0") != std::string::npos);
  CHECK(cert.rays[4].paths[0].evidence.find("= 125 > 0") != std::string::npos);
  CHECK(mentions(cert.assumptions, "singular ambient"));
}

TEST_CASE("K3 complete intersection is rejected, not certified") {
  CompleteIntersectionCY Z = k3_23();
  ValidationReport rep = validate_cy(Z);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.dimension_ok);
  CHECK(check_is(rep, "adjunction", true));
  CHECK(check_is(rep, "cy-profile", false));
  CHECK(check_is(rep, "dimension", false));
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->kind == "NotCalabiYau");
  CHECK(rep.first_failure()->detail.find("h^2") != std::string::npos);

  SmoothnessCertificate cert = smoothness_certificate(Z);
  CHECK(cert.verdict == Verdict::Rejected);
  CHECK(cert.rays.empty());

  CHECK_THROWS_AS(h_middle(Z), NotCertified);
  try {
    hodge_report(Z);
    FAIL("expected a rejection");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "NotCalabiYau");
  }
}

TEST_CASE("each failed check raises its own rejection") {
  SUBCASE("wrong degree sum") {
    CompleteIntersectionCY Z;
    Z.fan = projective_space(4);
    Z.hypersurfaces = {on_ray0(5, 4)};
    ValidationReport rep = validate_cy(Z);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->kind == "AdjunctionFailed");
    try {
      require_valid_cy(rep);
      FAIL("expected AdjunctionFailed");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "AdjunctionFailed");
    }
  }
  SUBCASE("ambient not Fano") {
    CompleteIntersectionCY Z;
    Z.fan = hirzebruch3();
    Z.hypersurfaces = {anticanonical(Z.fan)};
    ValidationReport rep = validate_cy(Z);
    CHECK(check_is(rep, "fano", false));
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->kind == "NotFano");
  }
  SUBCASE("nef but non-ample hypersurfaces") {
    CompleteIntersectionCY Z;
    Z.fan = cat("ci2222").fan;
    TorusDivisor a = TorusDivisor::Zero(8), b = TorusDivisor::Zero(8);
    a(0) = a(2) = 2;  // bidegree (2,2) on the first two factors only
    b(4) = b(6) = 2;
    Z.hypersurfaces = {a, b};
    ValidationReport rep = validate_cy(Z);
    CHECK(check_is(rep, "adjunction", true));
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->kind == "NotAmple");
  }
  SUBCASE("malformed input shapes") {
    CompleteIntersectionCY none;
    none.fan = projective_space(4);
    ValidationReport rep = validate_cy(none);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->kind == "InvalidInput");
    CHECK(rep.checks.size() == 1);

    CompleteIntersectionCY shorter;
    shorter.fan = projective_space(4);
    shorter.hypersurfaces = {on_ray0(4, 5)};
    ValidationReport rep2 = validate_cy(shorter);
    REQUIRE(rep2.first_failure() != nullptr);
    CHECK(rep2.first_failure()->kind == "DimensionMismatch");
  }
}

TEST_CASE("h^{1,1} = class group rank, with certification flags") {
  H11Result a = h11(cat("X5"));
  CHECK(a.value == 1);
  CHECK(a.certified);
  H11Result b = h11(cat("ci2222"));
  CHECK(b.value == 4);
  CHECK(b.certified);
  H11Result c = h11(cat("X44"));
  CHECK(c.value == 1);
  CHECK(c.certified);

  // exceptional ray divisor is not nef: value stays, certification withdrawn
  CompleteIntersectionCY E;
  E.fan = dp1();
  E.hypersurfaces = {anticanonical(E.fan)};
  H11Result d = h11(E);
  CHECK(d.value == 2);
  CHECK_FALSE(d.certified);
  CHECK(d.note.find("not nef") != std::string::npos);
  CHECK(d.note.find("3") != std::string::npos);
}

TEST_CASE("middle cohomology from section counts") {
  CHECK(h_middle(cat("X5")) == 101);
  CHECK(h_middle(cat("X6")) == 103);
  CHECK(h_middle(cat("X10")) == 145);
}

TEST_CASE("threefold hodge reports with Euler cross-check") {
  HodgeReport R = hodge_report(cat("X5"));
  CHECK(R.h11.value == 1);
  CHECK(R.middle == 101);
  CHECK(R.euler == -200);
  CHECK(R.diamond.m == 3);
  CHECK(R.diamond.h[1][1] == 1);
  CHECK(R.diamond.h[2][2] == 1);
  CHECK(R.diamond.h[2][1] == 101);
  CHECK(R.diamond.h[1][2] == 101);
  CHECK(R.diamond.h[0][0] == 1);
  CHECK(R.diamond.h[3][0] == 1);
  CHECK(R.diamond.h[1][0] == 0);
  REQUIRE(R.diamond.cross_checks.size() == 1);
  CHECK(R.diamond.cross_checks[0].name == "euler");
  CHECK(R.diamond.cross_checks[0].passed);
  CHECK(R.diamond.cross_checks[0].detail.find("-200") != std::string::npos);
  CHECK_FALSE(R.assumptions.empty());

  HodgeDiamond D = hodge_diamond(cat("X5"));
  CHECK(D.h == R.diamond.h);

  HodgeReport P = hodge_report(cat("ci2222"));
  CHECK(P.h11.value == 4);
  CHECK(P.middle == 68);
  CHECK(P.euler == -128);
  CHECK(P.diamond.h[1][1] == 4);
}

TEST_CASE("sextic fourfold: signature term and Euler identity") {
  HodgeReport R = hodge_report(cat("sextic4fold"));
  CHECK(R.h11.value == 1);
  CHECK(R.middle == 426);
  CHECK(R.euler == 2610);
  CHECK(R.diamond.m == 4);
  CHECK(R.diamond.h[1][1] == 1);
  CHECK(R.diamond.h[3][3] == 1);
  CHECK(R.diamond.h[1][3] == 426);
  CHECK(R.diamond.h[3][1] == 426);
  CHECK(R.diamond.h[2][2] == 1752);
  CHECK(R.diamond.h[2][1] == 0);
  CHECK(R.diamond.h[1][2] == 0);
  CHECK(R.diamond.h[4][0] == 1);
  REQUIRE(R.diamond.cross_checks.size() == 2);
  CHECK(R.diamond.cross_checks[0].name == "signature-integrality");
  CHECK(R.diamond.cross_checks[0].passed);
  CHECK(R.diamond.cross_checks[0].detail.find("45 · 902") != std::string::npos);
  CHECK(R.diamond.cross_checks[1].name == "euler");
  CHECK(R.diamond.cross_checks[1].passed);
  CHECK(R.diamond.cross_checks[1].detail.find("2610") != std::string::npos);
}
