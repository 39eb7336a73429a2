#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "embed3/errors.hpp"

namespace embed3::algebra {

// Exact scalar: arbitrary-precision rational, kept normalized by boost.
// Prime-field elements are stored as integer rationals in [0, p).
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

bool is_prime(long long p);

// Coefficient field: GF(p) for a prime 2 <= p <= 2^31, or the rationals.
struct FieldTag {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  long long p = 2;

  static FieldTag gf(long long p);
  static FieldTag rationals() {
    FieldTag f;
    f.kind = Kind::rational;
    f.p = 0;
    return f;
  }

  bool is_prime_field() const { return kind == Kind::prime; }
  std::string name() const;

  friend bool operator==(const FieldTag& a, const FieldTag& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

// Accepts "gf2", "gf(7)", "rational", "q" (case-insensitive).
FieldTag parse_field(const std::string& text);

// Scalar operations.  For prime fields the inputs must already be canonical
// (integers in [0, p)); every operation returns a canonical value.
Rat f_norm(const FieldTag& k, const Rat& a);  // embed an arbitrary rational
Rat f_add(const FieldTag& k, const Rat& a, const Rat& b);
Rat f_sub(const FieldTag& k, const Rat& a, const Rat& b);
Rat f_mul(const FieldTag& k, const Rat& a, const Rat& b);
Rat f_neg(const FieldTag& k, const Rat& a);
Rat f_inv(const FieldTag& k, const Rat& a);

inline bool f_is_zero(const Rat& a) { return a.is_zero(); }

}  // namespace embed3::algebra
