#pragma once

#include <map>
#include <string>
#include <vector>

#include "padicpart/common.hpp"

namespace padicpart {

// Base-p expansion, least significant digit first. 0 has no digits.
struct DigitVector {
  u64 base = 2;
  std::vector<u64> digits;

  u64 value() const {
    u64 v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
    return v;
  }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

inline DigitVector to_digits(u64 n, u64 p) {
  if (p < 2) throw std::invalid_argument("to_digits: base must be >= 2");
  DigitVector dv{p, {}};
  while (n) {
    dv.digits.push_back(n % p);
    n /= p;
  }
  return dv;
}

// N_p(i, n): number of digits equal to i in the base-p expansion of n
inline u64 digit_count(u64 i, u64 n, u64 p) {
  if (i >= p) throw std::invalid_argument("digit_count: digit out of range");
  u64 c = 0;
  for (u64 d : to_digits(n, p).digits)
    if (d == i) ++c;
  return c;
}

// A p-adic valuation: an exact natural number, +infinity (valuation of 0 in
// the exact ring), or a ">= B" bound certified by a residue vanishing mod p^B.
struct Valuation {
  enum class Kind { Finite, Infinite, AtLeast };

  Kind kind = Kind::Finite;
  u64 value = 0;  // Finite: the valuation; AtLeast: the certified bound

  static Valuation finite(u64 v) { return {Kind::Finite, v}; }
  static Valuation infinite() { return {Kind::Infinite, 0}; }
  static Valuation at_least(u64 b) { return {Kind::AtLeast, b}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_saturated() const { return kind == Kind::AtLeast; }
  bool is_exactly(u64 v) const { return kind == Kind::Finite && value == v; }

  // true only when the valuation is certainly >= bound
  bool certainly_at_least(u64 bound) const {
    return kind == Kind::Infinite || value >= bound;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::Infinite: return "inf";
      default: return ">=" + std::to_string(value);
    }
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Valuation nu_int(u64 p, const mpz_class& x) {
  if (x == 0) return Valuation::infinite();
  const mpz_class pz = static_cast<unsigned long>(p);
  mpz_class reduced;
  const auto count = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation::finite(static_cast<u64>(count));
}

// Valuation recoverable from a canonical residue mod p^B: exact if the
// residue is nonzero (any lift has the same valuation < B), ">= B" otherwise.
inline Valuation nu_residue(u64 p, unsigned B, const mpz_class& residue) {
  if (residue < 0 || residue >= pow_u64(p, B))
    throw std::invalid_argument("nu_residue: residue outside [0, p^B)");
  if (residue == 0) return Valuation::at_least(B);
  return nu_int(p, residue);
}

// C(a, b) with C(a, b) = 0 for b > a or b < 0
inline mpz_class binomial_exact(u64 a, i64 b) {
  if (b < 0 || static_cast<u64>(b) > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, static_cast<u64>(b));
  return r;
}

// C(a, b) mod p by digitwise products of base-p digit binomials
inline u64 lucas_binomial_mod_p(u64 a, u64 b, u64 p) {
  u64 res = 1 % p;
  while (a || b) {
    const u64 ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    const mpz_class c = binomial_exact(ai, static_cast<i64>(bi));
    res = static_cast<u64>(
        (static_cast<unsigned __int128>(res) * mpz_fdiv_ui(c.get_mpz_t(), p)) % p);
    a /= p;
    b /= p;
  }
  return res;
}

namespace detail {
inline void check_d_params(u64 p, u64 r) {
  if (p < 2 || r < 1 || r > p - 1)
    throw std::invalid_argument("D: need 1 <= r <= p-1");
}
}  // namespace detail

// D_{p,r}(n) = prod_i (-1)^{i N_p(i,n)} C(r,i)^{N_p(i,n)}, the coefficient of
// x^n in prod_t (1 - x^{p^t})^r. Zero iff some base-p digit of n exceeds r.
// Defined as 0 for n < 0.
inline mpz_class D_closed(u64 p, u64 r, i64 n) {
  detail::check_d_params(p, r);
  if (n < 0) return 0;
  std::map<u64, u64> counts;
  for (u64 d : to_digits(static_cast<u64>(n), p).digits) ++counts[d];
  mpz_class res = 1;
  for (const auto& [i, cnt] : counts) {
    if (i > r) return 0;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), binomial_exact(r, static_cast<i64>(i)).get_mpz_t(), cnt);
    res *= term;
    if ((i * cnt) % 2) res = -res;
  }
  return res;
}

// Same value via the digit recursion D_{p,r}(pn + j) = (-1)^j C(r,j) D_{p,r}(n),
// D_{p,r}(0) = 1.
inline mpz_class D_recursive(u64 p, u64 r, i64 n) {
  detail::check_d_params(p, r);
  if (n < 0) return 0;
  mpz_class res = 1;
  u64 m = static_cast<u64>(n);
  while (m) {
    const u64 j = m % p;
    if (j > r) return 0;
    res *= binomial_exact(r, static_cast<i64>(j));
    if (j % 2) res = -res;
    m /= p;
  }
  return res;
}

}  // namespace padicpart
