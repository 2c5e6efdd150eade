#include "cyfano/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "cyfano/catalog.hpp"
#include "cyfano/errors.hpp"

namespace cyfano {

namespace {

const std::string kCatalogPrefix = "catalog:";

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Int json_int(const Json& e) {
  if (e.is_number_integer()) return Int(e.get<long long>());
  if (e.is_number_unsigned()) return Int(e.get<unsigned long long>());
  if (e.is_string()) {
    try {
      return Int(e.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + e.get<std::string>() + "'");
    }
  }
  throw InvalidInput("expected an integer, got " + e.dump());
}

IntVector json_int_vector(const Json& arr, const char* what) {
  if (!arr.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  IntVector v(static_cast<Index>(arr.size()));
  Index i = 0;
  for (const Json& e : arr) v(i++) = json_int(e);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Json parse_json(const std::string& text, const std::string& where) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("malformed JSON in " + where);
  return j;
}

bool is_catalog_ref(const std::string& ref) {
  return ref.rfind(kCatalogPrefix, 0) == 0;
}

std::string catalog_name(const std::string& ref) { return ref.substr(kCatalogPrefix.size()); }

}  // namespace

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
    throw InvalidInput("fan input needs \"rays\" and \"max_cones\"");
  if (!j["rays"].is_array() || !j["max_cones"].is_array())
    throw InvalidInput("\"rays\" and \"max_cones\" must be arrays");

  std::vector<IntVector> rays;
  for (const Json& r : j["rays"]) rays.push_back(json_int_vector(r, "ray"));

  std::vector<std::vector<int>> cones;
  for (const Json& c : j["max_cones"]) {
    if (!c.is_array()) throw InvalidInput("max cone must be an array of ray indices");
    std::vector<int> cone;
    for (const Json& e : c) {
      Int v = json_int(e);
      if (v < 0 || v >= Int(static_cast<long long>(rays.size())))
        throw InvalidInput("max cone ray index " + v.str() + " out of range");
      cone.push_back(static_cast<int>(v));
    }
    cones.push_back(std::move(cone));
  }
  return validate_fan(std::move(rays), std::move(cones));
}

Json fan_to_json(const Fan& F, const std::string& name) {
  Json j = Json::object();
  if (!name.empty()) j["name"] = name;
  Json rays = Json::array();
  for (const IntVector& u : F.rays) {
    Json row = Json::array();
    for (Index i = 0; i < u.size(); ++i) row.push_back(int_json(u(i)));
    rays.push_back(std::move(row));
  }
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const Cone& c : F.max_cones) {
    Json row = Json::array();
    for (int r : c.rays) row.push_back(r);
    cones.push_back(std::move(row));
  }
  j["max_cones"] = std::move(cones);
  return j;
}

CompleteIntersectionCY cy_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("complete intersection input must be a JSON object");
  CompleteIntersectionCY Z;
  if (j.contains("fan_ref")) {
    if (!j["fan_ref"].is_string()) throw InvalidInput("\"fan_ref\" must be a string");
    const std::string ref = j["fan_ref"].get<std::string>();
    if (!is_catalog_ref(ref))
      throw InvalidInput("\"fan_ref\" must look like \"catalog:<name>\", got '" + ref + "'");
    Z.fan = catalog_entry(catalog_name(ref)).cy.fan;
  } else if (j.contains("fan")) {
    Z.fan = fan_from_json(j["fan"]);
  } else {
    throw InvalidInput("complete intersection input needs \"fan\" or \"fan_ref\"");
  }
  if (!j.contains("hypersurfaces") || !j["hypersurfaces"].is_array() ||
      j["hypersurfaces"].empty())
    throw InvalidInput("complete intersection input needs a nonempty \"hypersurfaces\" array");
  for (const Json& h : j["hypersurfaces"])
    Z.hypersurfaces.push_back(json_int_vector(h, "hypersurface"));
  Z.assume_smooth = j.value("assume_smooth", false);
  return Z;
}

Json cy_to_json(const CompleteIntersectionCY& Z, const std::string& name) {
  Json j = Json::object();
  j["fan"] = fan_to_json(Z.fan, name);
  Json hs = Json::array();
  for (const TorusDivisor& N : Z.hypersurfaces) {
    Json row = Json::array();
    for (Index i = 0; i < N.size(); ++i) row.push_back(int_json(N(i)));
    hs.push_back(std::move(row));
  }
  j["hypersurfaces"] = std::move(hs);
  j["assume_smooth"] = Z.assume_smooth;
  return j;
}

Fan load_fan(const std::string& ref) {
  if (is_catalog_ref(ref)) return catalog_entry(catalog_name(ref)).cy.fan;
  Json j = parse_json(read_file(ref), "'" + ref + "'");
  if (j.is_object() && (j.contains("fan") || j.contains("fan_ref"))) return cy_from_json(j).fan;
  return fan_from_json(j);
}

CompleteIntersectionCY load_cy(const std::string& ref) {
  if (is_catalog_ref(ref)) return catalog_entry(catalog_name(ref)).cy;
  Json j = parse_json(read_file(ref), "'" + ref + "'");
  if (j.is_object() && j.contains("rays"))
    throw InvalidInput("'" + ref + "' is a bare fan; hypersurface classes are required here");
  return cy_from_json(j);
}

std::string input_bytes(const std::string& ref) {
  if (is_catalog_ref(ref)) return ref;
  return read_file(ref);
}

std::string fnv1a_digest(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string("fnv1a:") + buf;
}

Json int_json(const Int& x) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (x >= lo && x <= hi) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json rat_json(const Rat& r) { return Json(rat_to_string(r)); }

IntVector parse_coeffs(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw InvalidInput("empty coefficient list");
  if (s.front() == '[') return json_int_vector(parse_json(s, "coefficient list"), "coefficients");

  std::vector<Int> vals;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string piece = trim(comma == std::string::npos ? s.substr(pos)
                                                        : s.substr(pos, comma - pos));
    if (piece.empty()) throw InvalidInput("empty entry in coefficient list '" + s + "'");
    try {
      vals.push_back(Int(piece));
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + piece + "' in coefficient list");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  IntVector v(static_cast<Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v(static_cast<Index>(i)) = vals[i];
  return v;
}

}  // namespace cyfano
