#pragma once

#include <string>
#include <vector>

#include "cyfano/chow.hpp"

namespace cyfano {

// One validation check: `name` is the stable check label, `kind` the named
// rejection raised when it fails (empty while passed).
struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;   // in check order; "dimension" last
  std::vector<std::string> assumptions;  // logged hypotheses, never failures
  bool cy_ok = false;                    // every check except the dimension bound
  bool dimension_ok = false;             // dim Z >= 3, tracked separately

  bool ok() const { return cy_ok && dimension_ok; }
  const ValidationCheck* first_failure() const;
};

// Checks, in order: input shape, fan structure, completeness, Fano ambient,
// ample hypersurface classes (very ampleness stays an assumption), adjunction
// Σ N_i ~ -K_F including torsion, structure-sheaf Calabi-Yau profile, and the
// dimension bound dim Z >= 3.  Clean failures are recorded, not thrown.
ValidationReport validate_cy(const CompleteIntersectionCY& Z);

// Throws the named rejection of the report's first failed check.
void require_valid_cy(const ValidationReport& report);

// The three certification routes for H^1(Z, O(D_ρ)|_Z) = 0, cheapest first.
enum class CertPath { NefAndBig, CompleteIntersectionNef, DirectKoszulVanishing };
const char* cert_path_name(CertPath p);

struct PathRecord {
  CertPath path;
  std::string evidence;
};

struct RayCertificate {
  int ray = 0;
  bool certified = false;
  std::vector<PathRecord> paths;  // successful routes; front() is the one used
};

enum class Verdict { Smooth, NotCertified, Rejected };
const char* verdict_name(Verdict v);

struct CertificateOptions {
  bool all_paths = false;  // keep recording after the first successful route
  bool use_nef_big = true;     // route toggles, for cross-validating verdicts
  bool use_ci_nef = true;
  bool use_direct = true;
};

// Certifies smoothness of the forgetful morphism from embedded to abstract
// deformations: verdict is smooth iff validation (including dim Z >= 3)
// passed and every ray divisor has a successful vanishing route.  Failures
// are reported in the per-ray records, never thrown.
struct SmoothnessCertificate {
  Verdict verdict = Verdict::Rejected;
  ValidationReport validation;
  std::vector<RayCertificate> rays;      // empty when rejected
  std::vector<std::string> assumptions;
};

SmoothnessCertificate smoothness_certificate(const CompleteIntersectionCY& Z,
                                             const CertificateOptions& options = {});

// h^{1,1}(Z) = rank CL(F).  The formula is certified only when every ray
// divisor is nef and every hypersurface class is ample; otherwise the value
// is reported with the certification withdrawn.
struct H11Result {
  Int value;
  bool certified = false;
  std::string note;
};

H11Result h11(const CompleteIntersectionCY& Z);

// h^{m-1,1}(Z) = h^0(Z, N_{Z/F}) - Σ_ρ h^0(Z, O(D_ρ)|_Z) + rank CL(F).
// Requires a smooth certificate; throws NotCertified otherwise.
Int h_middle(const CompleteIntersectionCY& Z);

struct CrossCheckRecord {
  std::string name;
  std::string detail;
  bool passed = false;
};

// h[p][q] = h^{p,q}(Z).  Symmetries, Calabi-Yau borders and nonnegativity
// are asserted on assembly; the Euler-characteristic oracle and (for
// fourfolds) the signature integrality are recorded per run.
struct HodgeDiamond {
  Index m = 0;
  std::vector<std::vector<Int>> h;
  std::vector<CrossCheckRecord> cross_checks;
};

struct HodgeReport {
  SmoothnessCertificate certificate;
  H11Result h11;
  Int middle;                          // h^{m-1,1}
  Int euler;                           // c_m(Z) · [Z]
  HodgeDiamond diamond;
  std::vector<std::string> assumptions;
};

// Full pipeline for threefolds and fourfolds: validation, certificate,
// h^{1,1}, middle cohomology, intersection-ring oracles, diamond assembly.
HodgeReport hodge_report(const CompleteIntersectionCY& Z,
                         const CertificateOptions& options = {});

HodgeDiamond hodge_diamond(const CompleteIntersectionCY& Z);

}  // namespace cyfano
