#pragma once

#include <json.hpp>

#include <string>

#include "cyfano/koszul.hpp"

namespace cyfano {

// Ordered so emitted documents are byte-stable across runs.
using Json = nlohmann::ordered_json;

// Fan file: {"name": ..., "rays": [[...]], "max_cones": [[...]]}.  The fan is
// validated on the way in; "name" is decorative and may be absent.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& F, const std::string& name);

// CY file: {"fan": {...} | "fan_ref": "catalog:<name>",
//           "hypersurfaces": [[...], ...], "assume_smooth": bool}.
CompleteIntersectionCY cy_from_json(const Json& j);
Json cy_to_json(const CompleteIntersectionCY& Z, const std::string& name);

// A `ref` is a file path or "catalog:<name>".  load_fan accepts fan files,
// CY files (taking the ambient) and catalog references; load_cy rejects
// inputs without hypersurface data.
Fan load_fan(const std::string& ref);
CompleteIntersectionCY load_cy(const std::string& ref);

// Bytes the input digest is computed over: file contents for paths, the
// reference itself for catalog entries.
std::string input_bytes(const std::string& ref);
std::string fnv1a_digest(const std::string& bytes);

// Integers render as JSON numbers while they fit in 64 bits and as decimal
// strings beyond; rationals always render as "p/q" strings.
Json int_json(const Int& x);
Json rat_json(const Rat& r);

// "1,2,3" or JSON "[1,2,3]" -> coefficient vector.
IntVector parse_coeffs(const std::string& text);

}  // namespace cyfano
