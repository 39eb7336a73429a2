#pragma once

// Internal JSON helpers shared by the file-format, certificate, and report
// writers.  Not part of the public surface.

#include <string>

#include "embed3/errors.hpp"
#include "embed3/ids.hpp"
#include "json.hpp"

namespace embed3::detail {

using Json = nlohmann::ordered_json;

inline Json id_to_json(const Id& id) {
  return id.is_int() ? Json(id.num()) : Json(id.str());
}

inline Id id_from_json(const Json& j) {
  if (j.is_number_integer()) return Id::of_int(j.get<long long>());
  if (j.is_string()) return Id::of_string(j.get<std::string>());
  throw ParseError("id must be an integer or a string, got " + j.dump());
}

// Canonical document rendering: 1-space indent, trailing newline.  Both the
// certificate and complex writers use this so that serialize(parse(text))
// reproduces text byte for byte.
inline std::string render_document(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace embed3::detail

namespace embed3::cx {
struct DirectedComplex;
detail::Json complex_to_json(const DirectedComplex& c);
}  // namespace embed3::cx
