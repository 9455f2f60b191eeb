#pragma once

#include "padicpart/common.hpp"

namespace padicpart {

// Coefficient ring of a truncated series: exact integers, or Z/p^B for an
// odd prime p.
struct RingSpec {
  enum class Kind { Exact, ModPrimePower };

  Kind kind = Kind::Exact;
  u64 p = 0;
  unsigned B = 0;

  static constexpr unsigned kMaxExponent = 64 * 4;

  static RingSpec exact() { return RingSpec{}; }

  static RingSpec mod(u64 p, unsigned B, unsigned exponent_cap = kMaxExponent) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
      throw std::invalid_argument("RingSpec: p must be an odd prime, got " +
                                  std::to_string(p));
    if (B < 1 || B > exponent_cap)
      throw std::invalid_argument("RingSpec: exponent B=" + std::to_string(B) +
                                  " outside [1, " + std::to_string(exponent_cap) + "]");
    RingSpec r;
    r.kind = Kind::ModPrimePower;
    r.p = p;
    r.B = B;
    return r;
  }

  bool is_exact() const { return kind == Kind::Exact; }

  mpz_class modulus() const {
    if (is_exact()) throw std::logic_error("RingSpec: exact ring has no modulus");
    return pow_u64(p, B);
  }

  std::string str() const {
    if (is_exact()) return "Z";
    return "Z/" + std::to_string(p) + "^" + std::to_string(B);
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

}  // namespace padicpart
