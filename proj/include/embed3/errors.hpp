#pragma once

#include <stdexcept>
#include <string>

namespace embed3 {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (bad JSON, unknown field name, wrong shape).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Input is structurally sound but violates a complex invariant.
struct ValidationError : Error {
  enum class Kind {
    missing_face,        // edge incident with no face
    degenerate_face,     // repeated vertex inside a face
    dangling_reference,  // edge or face names an unknown vertex/edge
    duplicate_id,        // repeated id, or two edges on the same vertex pair
  };
  Kind kind;
  ValidationError(Kind k, const std::string& msg)
      : Error("validation error: " + msg), kind(k) {}
};

// An enumeration (circuits, realization search, isomorphism search) was asked
// to run past its configured desk-scale limits.
struct ScaleExceeded : Error {
  explicit ScaleExceeded(const std::string& msg)
      : Error("scale exceeded: " + msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error {
  explicit InternalCheckFailure(const std::string& msg)
      : Error("internal check failure: " + msg) {}
};

}  // namespace embed3
