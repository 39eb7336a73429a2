#include "embed3/field.hpp"

#include <algorithm>
#include <cctype>

namespace embed3::algebra {

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldTag FieldTag::gf(long long p) {
  constexpr long long kMax = 1LL << 31;
  if (p < 2 || p > kMax || !is_prime(p))
    throw Error("field order must be a prime in [2, 2^31], got " +
                std::to_string(p));
  FieldTag f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldTag::name() const {
  return is_prime_field() ? "gf" + std::to_string(p) : "rational";
}

FieldTag parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "rational" || t == "q" || t == "rationals")
    return FieldTag::rationals();
  if (t.rfind("gf", 0) == 0) {
    std::string digits = t.substr(2);
    if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
      digits = digits.substr(1, digits.size() - 2);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (digits.size() > 10) throw Error("field order out of range: " + text);
      return FieldTag::gf(std::stoll(digits));
    }
  }
  throw Error("unrecognized field \"" + text +
              "\" (expected gf<p>, gf(<p>), or rational)");
}

namespace {

long long mod_of(const Int& n, long long p) {
  Int r = n % p;
  if (r < 0) r += p;
  return r.convert_to<long long>();
}

long long inv_mod(long long a, long long p) {
  // extended Euclid; a in [1, p)
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("not invertible mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

}  // namespace

Rat f_norm(const FieldTag& k, const Rat& a) {
  if (!k.is_prime_field()) return a;
  long long num = mod_of(numerator(a), k.p);
  long long den = mod_of(denominator(a), k.p);
  if (den == 0)
    throw Error("rational with denominator divisible by " +
                std::to_string(k.p) + " has no image in " + k.name());
  if (den != 1) num = (num * inv_mod(den, k.p)) % k.p;
  return Rat(num);
}

Rat f_add(const FieldTag& k, const Rat& a, const Rat& b) {
  Rat s = a + b;
  if (!k.is_prime_field()) return s;
  Int n = numerator(s);
  if (n >= k.p) n -= k.p;  // canonical inputs: sum < 2p
  return Rat(n);
}

Rat f_sub(const FieldTag& k, const Rat& a, const Rat& b) {
  Rat s = a - b;
  if (!k.is_prime_field()) return s;
  Int n = numerator(s);
  if (n < 0) n += k.p;
  return Rat(n);
}

Rat f_mul(const FieldTag& k, const Rat& a, const Rat& b) {
  Rat s = a * b;
  if (!k.is_prime_field()) return s;
  return Rat(numerator(s) % k.p);
}

Rat f_neg(const FieldTag& k, const Rat& a) {
  if (!k.is_prime_field()) return -a;
  if (a.is_zero()) return a;
  return Rat(Int(k.p) - numerator(a));
}

Rat f_inv(const FieldTag& k, const Rat& a) {
  if (a.is_zero()) throw Error("division by zero in " + k.name());
  if (!k.is_prime_field()) return Rat(1) / a;
  long long v = numerator(a).convert_to<long long>();
  return Rat(inv_mod(v, k.p));
}

}  // namespace embed3::algebra
