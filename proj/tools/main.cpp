#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cyfano/catalog.hpp"
#include "cyfano/errors.hpp"
#include "cyfano/io.hpp"
#include "cyfano/pipeline.hpp"

using namespace cyfano;

namespace {

struct Outcome {
  Json payload;
  std::vector<std::string> warnings;
  int code = 0;
  std::string digest_source;
  bool raw = false;  // print the payload bare, without the run report wrapper
};

std::string strip_kind(const Error& e) {
  std::string w = e.what();
  size_t p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

Json error_payload(const std::string& kind, const std::string& message) {
  Json j = Json::object();
  j["error"] = Json::object();
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

Json validation_json(const ValidationReport& rep) {
  Json checks = Json::array();
  for (const ValidationCheck& c : rep.checks) {
    Json e = Json::object();
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.passed) e["kind"] = c.kind;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  Json j = Json::object();
  j["checks"] = std::move(checks);
  j["dimension_ok"] = rep.dimension_ok;
  return j;
}

Json per_ray_json(const SmoothnessCertificate& cert) {
  Json rays = Json::array();
  for (const RayCertificate& rc : cert.rays) {
    Json e = Json::object();
    e["ray"] = rc.ray;
    e["certified"] = rc.certified;
    Json paths = Json::array();
    for (const PathRecord& pr : rc.paths) {
      Json p = Json::object();
      p["path"] = cert_path_name(pr.path);
      p["evidence"] = pr.evidence;
      paths.push_back(std::move(p));
    }
    e["paths"] = std::move(paths);
    rays.push_back(std::move(e));
  }
  return rays;
}

Json diamond_json(const HodgeDiamond& d) {
  Json rows = Json::array();
  for (const auto& row : d.h) {
    Json r = Json::array();
    for (const Int& x : row) r.push_back(int_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json cross_checks_json(const HodgeDiamond& d) {
  Json cc = Json::array();
  for (const CrossCheckRecord& r : d.cross_checks) {
    Json e = Json::object();
    e["name"] = r.name;
    e["passed"] = r.passed;
    e["detail"] = r.detail;
    cc.push_back(std::move(e));
  }
  return cc;
}

std::vector<std::string> merge_warnings(const std::vector<std::string>& fan,
                                        const std::vector<std::string>& assumptions) {
  std::vector<std::string> w = fan;
  w.insert(w.end(), assumptions.begin(), assumptions.end());
  return w;
}

Outcome run_fan_check(const std::string& ref) {
  Outcome out;
  out.digest_source = input_bytes(ref);
  Fan F = load_fan(ref);

  Json j = Json::object();
  j["rank"] = static_cast<long long>(F.rank);
  j["rays"] = static_cast<long long>(F.rays.size());
  j["max_cones"] = static_cast<long long>(F.max_cones.size());
  j["simplicial"] = true;  // validate_fan rejects non-simplicial input
  const bool complete = is_complete(F);
  j["complete"] = complete;
  j["fano"] = complete && is_fano(F);
  out.payload = std::move(j);
  out.warnings = F.warnings;
  return out;
}

Outcome run_coh(const std::string& ref, const std::string& coeffs, const std::string& method) {
  Outcome out;
  out.digest_source = input_bytes(ref);
  Fan F = load_fan(ref);
  TorusDivisor D = parse_coeffs(coeffs);
  CohomologyMethod m = CohomologyMethod::Auto;
  if (method == "chamber") m = CohomologyMethod::Chamber;
  if (method == "nef-fastpath") m = CohomologyMethod::NefFastPath;
  CohomologyVector v = cohomology_dims(F, D, m);
  Json dims = Json::array();
  for (size_t i = 0; i < v.size(); ++i) dims.push_back(int_json(v.at(i)));
  Json j = Json::object();
  j["dims"] = std::move(dims);
  j["method"] = method;
  out.payload = std::move(j);
  out.warnings = F.warnings;
  return out;
}

Outcome run_intersect(const std::string& ref, const std::string& exponents) {
  Outcome out;
  out.digest_source = input_bytes(ref);
  Fan F = load_fan(ref);
  IntVector m = parse_coeffs(exponents);
  const Index nrays = static_cast<Index>(F.rays.size());
  if (m.size() != nrays)
    throw DimensionMismatch("exponent list length != ray count");
  std::vector<TorusDivisor> factors;
  for (Index i = 0; i < nrays; ++i) {
    if (m(i) < 0) throw InvalidInput("negative exponent for ray " + std::to_string(i));
    for (Int k = 0; k < m(i); ++k) {
      TorusDivisor D = TorusDivisor::Zero(nrays);
      D(i) = 1;
      factors.push_back(std::move(D));
    }
  }
  Rat val = intersection_number(F, factors);
  Json j = Json::object();
  j["value"] = rat_json(val);
  out.payload = std::move(j);
  out.warnings = F.warnings;
  return out;
}

Outcome run_smooth(const std::string& ref) {
  Outcome out;
  out.digest_source = input_bytes(ref);
  CompleteIntersectionCY Z = load_cy(ref);
  SmoothnessCertificate cert = smoothness_certificate(Z);
  Json j = Json::object();
  j["verdict"] = verdict_name(cert.verdict);
  j["per_ray"] = per_ray_json(cert);
  j["validation"] = validation_json(cert.validation);
  j["assumptions"] = cert.assumptions;
  out.payload = std::move(j);
  out.warnings = merge_warnings(Z.fan.warnings, cert.assumptions);
  out.code = cert.verdict == Verdict::Rejected ? 1 : 0;
  return out;
}

Outcome run_hodge(const std::string& ref, bool oracle, bool all_paths) {
  Outcome out;
  out.digest_source = input_bytes(ref);
  CompleteIntersectionCY Z = load_cy(ref);
  CertificateOptions opts;
  opts.all_paths = all_paths;
  HodgeReport R = hodge_report(Z, opts);

  Json hodge = Json::object();
  hodge["m"] = static_cast<long long>(R.diamond.m);
  hodge["h11"] = int_json(R.h11.value);
  hodge["h21"] = R.diamond.m == 3 ? int_json(R.middle) : Json(0);
  if (R.diamond.m == 4) {
    hodge["c"] = int_json(R.middle);
    hodge["d"] = int_json(R.diamond.h[2][2]);
  }
  hodge["euler"] = int_json(R.euler);
  hodge["diamond"] = diamond_json(R.diamond);

  Json j = Json::object();
  j["verdict"] = verdict_name(R.certificate.verdict);
  j["per_ray"] = per_ray_json(R.certificate);
  j["hodge"] = std::move(hodge);
  j["cross_checks"] = cross_checks_json(R.diamond);
  if (oracle) {
    ChernNumbers cn = chern_numbers_ci(Z);
    Json o = Json::object();
    o["top_chern"] = rat_json(cn.top);
    if (cn.c2_squared) o["c2_squared"] = rat_json(*cn.c2_squared);
    j["oracle"] = std::move(o);
  }
  j["assumptions"] = R.assumptions;
  out.payload = std::move(j);
  out.warnings = merge_warnings(Z.fan.warnings, R.assumptions);
  return out;
}

Outcome run_catalog_list() {
  Outcome out;
  out.digest_source = "catalog:list";
  Json entries = Json::array();
  for (const CatalogEntry& e : catalog_list()) {
    Json row = Json::object();
    row["name"] = e.name;
    row["description"] = e.description;
    row["dim"] = static_cast<long long>(e.cy.dim());
    row["provenance"] = e.provenance;
    entries.push_back(std::move(row));
  }
  Json j = Json::object();
  j["entries"] = std::move(entries);
  out.payload = std::move(j);
  return out;
}

Outcome run_catalog_emit(const std::string& name) {
  Outcome out;
  out.digest_source = "catalog:" + name;
  CatalogEntry e = catalog_entry(name);
  out.payload = cy_to_json(e.cy, e.name);
  out.raw = true;  // the output is a loadable CY file, not a run report
  return out;
}

void print_table(const Json& payload, const std::vector<std::string>& warnings) {
  // human-oriented rendering; not a stability surface
  std::function<void(const Json&, int)> walk = [&](const Json& j, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_object() || it.value().is_array()) {
          std::cout << pad << it.key() << ":\n";
          walk(it.value(), depth + 1);
        } else {
          std::cout << pad << it.key() << ": " << (it.value().is_string()
                        ? it.value().get<std::string>() : it.value().dump()) << "\n";
        }
      }
    } else if (j.is_array()) {
      bool scalars = true;
      for (const Json& e : j)
        if (e.is_object() || e.is_array()) scalars = false;
      if (scalars) {
        std::cout << pad;
        for (size_t i = 0; i < j.size(); ++i)
          std::cout << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        std::cout << "\n";
      } else {
        for (const Json& e : j) walk(e, depth);
      }
    } else {
      std::cout << pad << j.dump() << "\n";
    }
  };
  walk(payload, 0);
  for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
}

int emit(const Outcome& out, const std::string& command, const std::string& format) {
  if (out.raw) {
    std::cout << out.payload.dump() << "\n";
    return out.code;
  }
  if (format == "json") {
    Json report = Json::object();
    report["command"] = command;
    report["input_digest"] = fnv1a_digest(out.digest_source);
    report["payload"] = out.payload;
    report["warnings"] = out.warnings;
    report["exit_code"] = out.code;
    std::cout << report.dump() << "\n";
  } else {
    print_table(out.payload, out.warnings);
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric geometry: cohomology, intersection numbers, Calabi-Yau "
               "smoothness certificates and Hodge diamonds"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string fan_file, coh_file, coh_coeffs, coh_method = "auto";
  std::string int_file, int_exponents, smooth_file, hodge_file, emit_name;
  bool hodge_oracle = false, hodge_all_paths = false;

  CLI::App* fan = app.add_subcommand("fan", "fan-level checks");
  fan->require_subcommand(1);
  fan->fallthrough();
  CLI::App* fan_check = fan->add_subcommand("check", "validate a fan and report its properties");
  fan_check->fallthrough();
  fan_check->add_option("file", fan_file, "fan file or catalog:<name>")->required();

  CLI::App* coh = app.add_subcommand("coh", "line bundle cohomology on the toric variety");
  coh->fallthrough();
  coh->add_option("file", coh_file, "fan file or catalog:<name>")->required();
  coh->add_option("-D", coh_coeffs, "divisor coefficients, one per ray")->required();
  coh->add_option("--method", coh_method, "algorithm choice")
      ->check(CLI::IsMember({"auto", "chamber", "nef-fastpath"}));

  CLI::App* isec = app.add_subcommand("intersect", "intersection number of ray divisors");
  isec->fallthrough();
  isec->add_option("file", int_file, "fan file or catalog:<name>")->required();
  isec->add_option("-m", int_exponents, "exponent per ray; must sum to the rank")->required();

  CLI::App* smooth = app.add_subcommand("smooth", "certify smoothness of the forgetful morphism");
  smooth->fallthrough();
  smooth->add_option("file", smooth_file, "CY file or catalog:<name>")->required();

  CLI::App* hodge = app.add_subcommand("hodge", "hodge diamond of a certified CY");
  hodge->fallthrough();
  hodge->add_option("file", hodge_file, "CY file or catalog:<name>")->required();
  hodge->add_flag("--oracle", hodge_oracle, "include the intersection-ring oracle values");
  hodge->add_flag("--all-paths", hodge_all_paths, "record every successful certification route");

  CLI::App* cata = app.add_subcommand("catalog", "built-in examples");
  cata->require_subcommand(1);
  cata->fallthrough();
  CLI::App* cata_list = cata->add_subcommand("list", "list catalog entries");
  cata_list->fallthrough();
  CLI::App* cata_emit = cata->add_subcommand("emit", "emit an entry as a CY file");
  cata_emit->fallthrough();
  cata_emit->add_option("name", emit_name, "entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    Outcome out;
    if (fan_check->parsed())
      out = run_fan_check(fan_file);
    else if (coh->parsed())
      out = run_coh(coh_file, coh_coeffs, coh_method);
    else if (isec->parsed())
      out = run_intersect(int_file, int_exponents);
    else if (smooth->parsed())
      out = run_smooth(smooth_file);
    else if (hodge->parsed())
      out = run_hodge(hodge_file, hodge_oracle, hodge_all_paths);
    else if (cata_list->parsed())
      out = run_catalog_list();
    else
      out = run_catalog_emit(emit_name);
    return emit(out, command, format);
  } catch (const ValidationError& e) {
    Outcome out;
    out.payload = error_payload(e.kind(), strip_kind(e));
    out.code = 1;
    return emit(out, command, format);
  } catch (const InternalCheckError& e) {
    Outcome out;
    out.payload = error_payload(e.kind(), strip_kind(e));
    out.code = 3;
    return emit(out, command, format);
  } catch (const std::exception& e) {
    Outcome out;
    out.payload = error_payload("Internal", e.what());
    out.code = 3;
    return emit(out, command, format);
  }
}
