#include "cyfano/pipeline.hpp"

#include <algorithm>
#include <string>

#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

TorusDivisor ray_divisor(Index nrays, Index rho) {
  TorusDivisor D = TorusDivisor::Zero(nrays);
  D(rho) = 1;
  return D;
}

TorusDivisor degree_sum(const CompleteIntersectionCY& Z) {
  TorusDivisor s = TorusDivisor::Zero(static_cast<Index>(Z.fan.rays.size()));
  for (const TorusDivisor& N : Z.hypersurfaces) s += N;
  return s;
}

void record(ValidationReport& rep, std::string name, bool passed, std::string kind,
            std::string detail) {
  ValidationCheck c;
  c.name = std::move(name);
  c.passed = passed;
  if (!passed) c.kind = std::move(kind);
  c.detail = std::move(detail);
  rep.checks.push_back(std::move(c));
}

// Error::what() is "Kind: message"; keep only the message for check details.
std::string strip_kind(const Error& e) {
  std::string w = e.what();
  size_t p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

Int middle_formula(const CompleteIntersectionCY& Z) {
  const Index nrays = static_cast<Index>(Z.fan.rays.size());
  Int total = normal_bundle_sections(Z);
  for (Index rho = 0; rho < nrays; ++rho)
    total -= ci_twisted_cohomology(Z, ray_divisor(nrays, rho)).at(0);
  total += Int(class_group(Z.fan).rank);
  return total;
}

void check_diamond(const HodgeDiamond& d) {
  const Index m = d.m;
  auto bad = [](const std::string& msg) -> void {
    throw CrossCheckFailed("hodge diamond invariant violated: " + msg);
  };
  if (static_cast<Index>(d.h.size()) != m + 1) bad("table size");
  for (Index p = 0; p <= m; ++p) {
    if (static_cast<Index>(d.h[p].size()) != m + 1) bad("table size");
    for (Index q = 0; q <= m; ++q) {
      if (d.h[p][q] < 0) bad("negative entry");
      if (d.h[p][q] != d.h[q][p]) bad("conjugation symmetry");
      if (d.h[p][q] != d.h[m - p][m - q]) bad("Serre symmetry");
    }
  }
  if (d.h[0][0] != 1 || d.h[m][0] != 1) bad("Calabi-Yau borders");
  for (Index p = 1; p < m; ++p)
    if (d.h[p][0] != 0) bad("holomorphic p-forms present");
}

}  // namespace

const ValidationCheck* ValidationReport::first_failure() const {
  for (const ValidationCheck& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

ValidationReport validate_cy(const CompleteIntersectionCY& Z) {
  ValidationReport rep;
  const Fan& F = Z.fan;
  const Index nrays = static_cast<Index>(F.rays.size());
  const size_t n = Z.hypersurfaces.size();

  if (Z.hypersurfaces.empty() || Z.dim() < 1) {
    record(rep, "shape", false, "InvalidInput", "need 1 <= #hypersurfaces < dim of the ambient");
    return rep;
  }
  for (const TorusDivisor& N : Z.hypersurfaces) {
    if (N.size() != nrays) {
      record(rep, "shape", false, "DimensionMismatch", "hypersurface length != ray count");
      return rep;
    }
  }
  record(rep, "shape", true, "",
         std::to_string(n) + " hypersurface(s) in a rank-" + std::to_string(F.rank) + " fan");

  try {
    std::vector<std::vector<int>> cones;
    for (const Cone& c : F.max_cones) cones.push_back(c.rays);
    Fan re = validate_fan(F.rays, cones);
    bool same = re.rays.size() == F.rays.size();
    for (size_t i = 0; same && i < F.rays.size(); ++i)
      if (!exactly_equal(re.rays[i], F.rays[i])) same = false;
    if (!same) {
      record(rep, "fan-structure", false, "InvalidInput", "fan rays are not primitive");
      return rep;
    }
    record(rep, "fan-structure", true, "", "simplicial, spanning, face-closed");
  } catch (const ValidationError& e) {
    record(rep, "fan-structure", false, e.kind(), strip_kind(e));
    return rep;
  }

  if (!is_complete(F)) {
    record(rep, "completeness", false, "NotComplete", "the fan does not cover the lattice");
    return rep;
  }
  record(rep, "completeness", true, "", "support is all of the lattice");

  if (is_fano(F))
    record(rep, "fano", true, "", "-K_F is ample");
  else
    record(rep, "fano", false, "NotFano", "the anticanonical class is not ample");

  {
    std::vector<size_t> not_ample;
    for (size_t i = 0; i < n; ++i)
      if (!is_ample(F, Z.hypersurfaces[i])) not_ample.push_back(i);
    if (not_ample.empty()) {
      record(rep, "ample-hypersurfaces", true, "", "all hypersurface classes ample");
      rep.assumptions.push_back("hypersurface classes verified ample; very ampleness assumed");
    } else {
      std::string which;
      for (size_t i : not_ample) which += (which.empty() ? "" : ", ") + std::to_string(i);
      record(rep, "ample-hypersurfaces", false, "NotAmple",
             "hypersurface class(es) " + which + " not ample");
    }
  }

  {
    DivisorClassGroup G = class_group(F);
    if (divisor_class(G, degree_sum(Z)) == divisor_class(G, anticanonical(F)))
      record(rep, "adjunction", true, "", "sum of degrees ~ -K_F, torsion included");
    else
      record(rep, "adjunction", false, "AdjunctionFailed",
             "hypersurface degrees do not sum to the anticanonical class");
  }

  {
    const Index m = Z.dim();
    CohomologyVector prof = structure_sheaf_profile(Z);
    if (!prof.exact()) {
      record(rep, "cy-profile", false, "IndeterminateChase",
             "structure sheaf cohomology is not pinned to exact values");
    } else {
      Index badat = -1;
      for (Index i = 0; i <= m && badat < 0; ++i) {
        Int want = (i == 0 || i == m) ? 1 : 0;
        if (prof.lower[static_cast<size_t>(i)] != want) badat = i;
      }
      if (badat >= 0) {
        record(rep, "cy-profile", false, "NotCalabiYau",
               "h^" + std::to_string(badat) + "(O_Z) = " +
                   prof.lower[static_cast<size_t>(badat)].str() + ", expected " +
                   ((badat == 0 || badat == m) ? "1" : "0"));
      } else if (m >= 2 && prof.lower[2] != 0) {
        record(rep, "cy-profile", false, "NotCalabiYau",
               "h^2(O_Z) = " + prof.lower[2].str() + "; the pipeline requires h^2(O_Z) = 0");
      } else {
        record(rep, "cy-profile", true, "", "(1, 0, ..., 0, 1)");
      }
    }
  }

  rep.assumptions.push_back(Z.assume_smooth
                                ? "generic member smoothness: user-asserted"
                                : "generic member smoothness: not asserted - results conditional "
                                  "on a smooth member");

  {
    const Index m = Z.dim();
    rep.dimension_ok = m >= 3;
    if (rep.dimension_ok)
      record(rep, "dimension", true, "", "dim Z = " + std::to_string(m) + " >= 3");
    else
      record(rep, "dimension", false, "DimensionTooSmall",
             "dim Z = " + std::to_string(m) + " < 3");
  }

  rep.cy_ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const ValidationCheck& c) {
    return c.name == "dimension" || c.passed;
  });
  return rep;
}

void require_valid_cy(const ValidationReport& report) {
  if (const ValidationCheck* f = report.first_failure())
    throw ValidationError(f->kind, f->detail);
}

const char* cert_path_name(CertPath p) {
  switch (p) {
    case CertPath::NefAndBig: return "nef-and-big";
    case CertPath::CompleteIntersectionNef: return "complete-intersection-nef";
    case CertPath::DirectKoszulVanishing: return "direct-koszul-vanishing";
  }
  return "";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::NotCertified: return "not-certified";
    case Verdict::Rejected: return "rejected";
  }
  return "";
}

SmoothnessCertificate smoothness_certificate(const CompleteIntersectionCY& Z,
                                             const CertificateOptions& options) {
  SmoothnessCertificate cert;
  cert.validation = validate_cy(Z);
  cert.assumptions = cert.validation.assumptions;
  if (!cert.validation.ok()) {
    cert.verdict = Verdict::Rejected;
    return cert;
  }

  const Fan& F = Z.fan;
  const Index nrays = static_cast<Index>(F.rays.size());
  const Index m = Z.dim();
  const bool singular = !singular_cones(F).empty();
  bool used_intersection = false;
  bool all_certified = true;

  for (Index rho = 0; rho < nrays; ++rho) {
    RayCertificate rc;
    rc.ray = static_cast<int>(rho);
    const TorusDivisor D = ray_divisor(nrays, rho);
    const bool nef = is_nef(F, D);

    if (options.use_nef_big && nef) {
      std::vector<TorusDivisor> factors(static_cast<size_t>(m), D);
      factors.insert(factors.end(), Z.hypersurfaces.begin(), Z.hypersurfaces.end());
      const Rat deg = intersection_number(F, factors);
      used_intersection = true;
      if (deg > 0) {
        PathRecord pr;
        pr.path = CertPath::NefAndBig;
        pr.evidence =
            "D nef; D^" + std::to_string(m) + " · Z = " + rat_to_string(deg) + " > 0";
        rc.paths.push_back(std::move(pr));
      }
    }
    if ((rc.paths.empty() || options.all_paths) && options.use_ci_nef && nef) {
      // every hypersurface class was verified ample during validation
      PathRecord pr;
      pr.path = CertPath::CompleteIntersectionNef;
      pr.evidence = "D nef; Z is a complete intersection of ample hypersurfaces";
      rc.paths.push_back(std::move(pr));
    }
    if ((rc.paths.empty() || options.all_paths) && options.use_direct) {
      const CohomologyVector v = ci_twisted_cohomology(Z, D);
      if (v.size() > 1 && v.exact_at(1) && v.lower[1] == 0) {
        PathRecord pr;
        pr.path = CertPath::DirectKoszulVanishing;
        pr.evidence = "h^1(Z, O(D)|_Z) = 0 (exact)";
        rc.paths.push_back(std::move(pr));
      }
    }

    rc.certified = !rc.paths.empty();
    all_certified = all_certified && rc.certified;
    cert.rays.push_back(std::move(rc));
  }

  if (used_intersection && singular)
    cert.assumptions.push_back(
        "rational intersection ring of a singular ambient; values assume the intersection "
        "misses the singular locus");

  cert.verdict = all_certified ? Verdict::Smooth : Verdict::NotCertified;
  return cert;
}

H11Result h11(const CompleteIntersectionCY& Z) {
  const Fan& F = Z.fan;
  const Index nrays = static_cast<Index>(F.rays.size());
  H11Result r;
  r.value = Int(class_group(F).rank);

  std::vector<Index> not_nef;
  for (Index rho = 0; rho < nrays; ++rho)
    if (!is_nef(F, ray_divisor(nrays, rho))) not_nef.push_back(rho);
  bool ample_ok = true;
  for (const TorusDivisor& N : Z.hypersurfaces)
    if (!is_ample(F, N)) ample_ok = false;

  if (not_nef.empty() && ample_ok) {
    r.certified = true;
    r.note = "every ray divisor nef and every hypersurface class ample";
  } else {
    std::string reason;
    if (!not_nef.empty()) {
      reason = "ray divisor(s) ";
      for (size_t i = 0; i < not_nef.size(); ++i)
        reason += (i ? ", " : "") + std::to_string(not_nef[i]);
      reason += " not nef";
    }
    if (!ample_ok)
      reason += std::string(reason.empty() ? "" : "; ") + "some hypersurface class is not ample";
    r.note = "formula value, hypotheses unverified: " + reason;
  }
  return r;
}

Int h_middle(const CompleteIntersectionCY& Z) {
  const SmoothnessCertificate cert = smoothness_certificate(Z);
  if (cert.verdict != Verdict::Smooth)
    throw NotCertified(std::string("h^{m-1,1} needs a smooth certificate; verdict: ") +
                       verdict_name(cert.verdict));
  return middle_formula(Z);
}

HodgeReport hodge_report(const CompleteIntersectionCY& Z, const CertificateOptions& options) {
  HodgeReport R;
  R.certificate = smoothness_certificate(Z, options);
  if (R.certificate.verdict == Verdict::Rejected) require_valid_cy(R.certificate.validation);
  if (R.certificate.verdict != Verdict::Smooth) {
    std::string rays;
    for (const RayCertificate& rc : R.certificate.rays)
      if (!rc.certified) rays += (rays.empty() ? "" : ", ") + std::to_string(rc.ray);
    throw NotCertified("smoothness not certified for ray(s) " + rays);
  }
  const Index m = Z.dim();
  if (m != 3 && m != 4)
    throw InvalidInput("hodge diamond assembly covers dim Z = 3 or 4, got " + std::to_string(m));
  R.h11 = h11(Z);
  if (!R.h11.certified)
    throw NotCertified("h^{1,1} = rank CL(F) not certified: " + R.h11.note);
  R.middle = middle_formula(Z);

  const ChernNumbers cn = chern_numbers_ci(Z);
  if (!is_integer(cn.top))
    throw NonIntegerEuler("top Chern number " + rat_to_string(cn.top) + " is not an integer");
  R.euler = num(cn.top);

  const Int t = R.h11.value;
  HodgeDiamond& d = R.diamond;
  d.m = m;
  d.h.assign(static_cast<size_t>(m) + 1,
             std::vector<Int>(static_cast<size_t>(m) + 1, Int(0)));
  d.h[0][0] = d.h[static_cast<size_t>(m)][static_cast<size_t>(m)] = 1;
  d.h[static_cast<size_t>(m)][0] = d.h[0][static_cast<size_t>(m)] = 1;

  if (m == 3) {
    d.h[1][1] = d.h[2][2] = t;
    d.h[2][1] = d.h[1][2] = R.middle;
    const Int lhs = 2 * (t - R.middle);
    const bool pass = lhs == R.euler;
    CrossCheckRecord cc;
    cc.name = "euler";
    cc.detail = "2(h^{1,1} - h^{2,1}) = " + lhs.str() + (pass ? " = " : " != ") + "c_3 · Z = " +
                R.euler.str();
    cc.passed = pass;
    d.cross_checks.push_back(std::move(cc));
    if (!pass)
      throw CrossCheckFailed("Euler oracle mismatch: 2(h^{1,1} - h^{2,1}) = " + lhs.str() +
                             " but c_3 · Z = " + R.euler.str());
  } else {
    const Int c = R.middle;
    if (!cn.c2_squared) throw CrossCheckFailed("c_2^2 · Z missing for a fourfold");
    const Rat term = (Rat(3) * *cn.c2_squared + Rat(14) * cn.top) / 45;
    if (!is_integer(term))
      throw NonIntegerSignatureTerm("(3 c_2^2 + 14 c_4) · Z / 45 = " + rat_to_string(term) +
                                    " is not an integer");
    CrossCheckRecord sig;
    sig.name = "signature-integrality";
    sig.detail = "(3 c_2^2 + 14 c_4) · Z = 45 · " + num(term).str();
    sig.passed = true;
    d.cross_checks.push_back(std::move(sig));

    const Int dd = 2 * c - 2 + num(term);
    d.h[1][1] = d.h[3][3] = t;
    d.h[1][3] = d.h[3][1] = c;
    d.h[2][2] = dd;
    const Int lhs = 4 + 2 * t + 2 * c + dd;
    const bool pass = lhs == R.euler;
    CrossCheckRecord cc;
    cc.name = "euler";
    cc.detail =
        "4 + 2t + 2c + d = " + lhs.str() + (pass ? " = " : " != ") + "c_4 · Z = " + R.euler.str();
    cc.passed = pass;
    d.cross_checks.push_back(std::move(cc));
    if (!pass)
      throw CrossCheckFailed("Euler oracle mismatch: 4 + 2t + 2c + d = " + lhs.str() +
                             " but c_4 · Z = " + R.euler.str());
  }
  check_diamond(d);

  R.assumptions = R.certificate.assumptions;
  for (const std::string& note : cn.notes)
    if (std::find(R.assumptions.begin(), R.assumptions.end(), note) == R.assumptions.end())
      R.assumptions.push_back(note);
  return R;
}

HodgeDiamond hodge_diamond(const CompleteIntersectionCY& Z) { return hodge_report(Z).diamond; }

}  // namespace cyfano
