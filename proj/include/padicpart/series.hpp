#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "padicpart/digits.hpp"
#include "padicpart/ring.hpp"

namespace padicpart {

struct PartitionParams {
  u64 m = 2;  // base, >= 2
  u64 k = 1;  // colors, k = 0 gives the constant series 1
};

// Coefficients of a formal power series up to a fixed degree, over an exact
// or mod-p^B ring. Modular coefficients are kept as canonical residues.
class TruncatedSeries {
 public:
  TruncatedSeries(RingSpec ring, std::size_t degree)
      : ring_(ring), coeffs_(degree + 1) {}

  TruncatedSeries(RingSpec ring, std::vector<mpz_class> coeffs)
      : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("TruncatedSeries: coefficient list may not be empty");
    reduce();
  }

  const RingSpec& ring() const { return ring_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void reduce() {
    if (ring_.is_exact()) return;
    const mpz_class m = ring_.modulus();
    for (auto& c : coeffs_)
      if (c < 0 || c >= m) c = mod_canon(c, m);
  }

  RingSpec ring_;
  std::vector<mpz_class> coeffs_;
};

namespace detail {

// row[i] = C(i + k - 1, k - 1), the coefficients of (1-x)^{-k}, built by
// exact multiply/divide updates (no factorial tables)
inline std::vector<mpz_class> rising_binomial_row(u64 k, std::size_t n_max) {
  std::vector<mpz_class> row(n_max + 1);
  row[0] = 1;
  mpz_class cur = 1;
  for (std::size_t i = 1; i <= n_max && k > 0; ++i) {
    cur *= static_cast<unsigned long>(k - 1 + i);
    mpz_divexact_ui(cur.get_mpz_t(), cur.get_mpz_t(), i);
    row[i] = cur;
  }
  return row;
}

}  // namespace detail

// Colored m-ary partition numbers A_{m,k}(0..degree) as a truncated series:
// coefficient n counts multisets of powers of m summing to n with each
// summand in one of k colors. Uses the recurrence
//   A(n) = sum_{t <= n/m} C(n - m t + k - 1, k - 1) A(t)
// obtained from F(x) = F(x^m) / (1-x) raised to the k-th power.
inline TruncatedSeries expand_colored_partitions(PartitionParams params,
                                                 std::size_t degree,
                                                 const RingSpec& ring) {
  if (params.m < 2)
    throw std::invalid_argument("expand_colored_partitions: base m must be >= 2");
  const std::size_t n_max = degree;
  const u64 m = params.m;
  std::vector<mpz_class> a(n_max + 1);
  a[0] = 1;
  if (params.k == 0 || n_max == 0) return TruncatedSeries(ring, std::move(a));

  auto b = detail::rising_binomial_row(params.k, n_max);

  if (!ring.is_exact()) {
    const mpz_class mod = ring.modulus();
    if (mod.fits_ulong_p() && mod.get_ui() < (1ull << 31)) {
      // narrow modulus: residues fit 31 bits, so products fit u64 and the
      // inner sums fit an unsigned 128-bit accumulator
      const u64 mod_u = mod.get_ui();
      std::vector<u64> bm(n_max + 1), am(n_max + 1);
      for (std::size_t i = 0; i <= n_max; ++i)
        bm[i] = mpz_fdiv_ui(b[i].get_mpz_t(), mod_u);
      am[0] = 1 % mod_u;
      for (std::size_t n = 1; n <= n_max; ++n) {
        unsigned __int128 acc = 0;
        for (std::size_t t = 0; m * t <= n; ++t)
          acc += static_cast<unsigned __int128>(bm[n - m * t]) * am[t];
        am[n] = static_cast<u64>(acc % mod_u);
      }
      for (std::size_t n = 0; n <= n_max; ++n)
        a[n] = static_cast<unsigned long>(am[n]);
      return TruncatedSeries(ring, std::move(a));
    }
    for (auto& x : b) x = mod_canon(x, mod);
    for (std::size_t n = 1; n <= n_max; ++n) {
      mpz_class acc = 0;
      for (std::size_t t = 0; m * t <= n; ++t) acc += b[n - m * t] * a[t];
      a[n] = mod_canon(acc, mod);
    }
    return TruncatedSeries(ring, std::move(a));
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_class acc = 0;
    for (std::size_t t = 0; m * t <= n; ++t) acc += b[n - m * t] * a[t];
    a[n] = std::move(acc);
  }
  return TruncatedSeries(ring, std::move(a));
}

// [x^n] F_m(x)^e for signed e, by multiplying out the factors
// (1 - x^{m^t})^{-e} with m^t <= degree. For e = k > 0 this is the direct
// product route to A_{m,k}; for e = -r < 0 each factor is the finite binomial
// sum and the coefficients are D_{m,r}(n).
inline TruncatedSeries expand_F_power_direct(u64 m, i64 e, std::size_t degree,
                                             const RingSpec& ring) {
  if (m < 2)
    throw std::invalid_argument("expand_F_power_direct: base m must be >= 2");
  std::vector<mpz_class> acc(degree + 1);
  acc[0] = 1;
  const bool modular = !ring.is_exact();
  const mpz_class mod = modular ? ring.modulus() : mpz_class(0);

  for (u64 stride = 1; stride <= degree;) {
    const std::size_t terms = degree / stride;
    std::vector<mpz_class> f;
    if (e >= 0) {
      f = detail::rising_binomial_row(static_cast<u64>(e), terms);
    } else {
      const u64 r = static_cast<u64>(-e);
      f.resize(std::min<std::size_t>(r, terms) + 1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = binomial_exact(r, static_cast<i64>(i));
        if (i % 2) f[i] = -f[i];
      }
    }
    std::vector<mpz_class> next(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < f.size() && i * stride <= n; ++i)
        if (f[i] != 0) s += f[i] * acc[n - i * stride];
      next[n] = modular ? mod_canon(s, mod) : std::move(s);
    }
    acc = std::move(next);
    if (stride > degree / m) break;
    stride *= m;
  }
  return TruncatedSeries(ring, std::move(acc));
}

// (1-x)^e truncated: coefficient i is (-1)^i C(e,i) for e >= 0 (zero past
// degree e), or C(i + |e| - 1, i) for e < 0
inline TruncatedSeries binomial_series_one_minus_x(i64 e, std::size_t degree,
                                                   const RingSpec& ring) {
  std::vector<mpz_class> c(degree + 1);
  if (e >= 0) {
    for (std::size_t i = 0; i <= degree; ++i) {
      c[i] = binomial_exact(static_cast<u64>(e), static_cast<i64>(i));
      if (i % 2) c[i] = -c[i];
    }
  } else {
    c = detail::rising_binomial_row(static_cast<u64>(-e), degree);
  }
  return TruncatedSeries(ring, std::move(c));
}

// Cauchy product truncated to the shared degree; both operands must live in
// the same ring at the same degree.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("series_mul: ring mismatch");
  if (a.degree() != b.degree())
    throw std::invalid_argument("series_mul: degree mismatch");
  const bool modular = !a.ring().is_exact();
  const mpz_class mod = modular ? a.ring().modulus() : mpz_class(0);
  std::vector<mpz_class> c(a.degree() + 1);
  for (std::size_t n = 0; n <= a.degree(); ++n) {
    mpz_class s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += a[i] * b[n - i];
    c[n] = modular ? mod_canon(s, mod) : std::move(s);
  }
  return TruncatedSeries(a.ring(), std::move(c));
}

// Smallest n with a_n != b_n (mod p^B), or nullopt when congruent throughout.
// Exact series are always reducible; a mod-ring series must carry the same p
// with at least B stored digits.
inline std::optional<std::size_t> first_mismatch_mod(const TruncatedSeries& a,
                                                     const TruncatedSeries& b,
                                                     u64 p, unsigned B) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("first_mismatch_mod: degree mismatch");
  const auto reducible = [&](const RingSpec& r) {
    return r.is_exact() || (r.p == p && r.B >= B);
  };
  if (!reducible(a.ring()) || !reducible(b.ring()))
    throw std::invalid_argument("first_mismatch_mod: series not reducible mod p^B");
  const mpz_class mod = pow_u64(p, B);
  for (std::size_t n = 0; n <= a.degree(); ++n)
    if (mod_canon(a[n], mod) != mod_canon(b[n], mod)) return n;
  return std::nullopt;
}

inline void to_json(nlohmann::json& j, const RingSpec& r) {
  if (r.is_exact())
    j = nlohmann::json{{"kind", "exact"}};
  else
    j = nlohmann::json{{"kind", "mod"}, {"p", r.p}, {"B", r.B}};
}

inline void from_json(const nlohmann::json& j, RingSpec& r) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "exact")
    r = RingSpec::exact();
  else if (kind == "mod")
    r = RingSpec::mod(j.at("p").get<u64>(), j.at("B").get<unsigned>());
  else
    throw std::invalid_argument("RingSpec: unknown kind '" + kind + "'");
}

// {"ring": ..., "degree": N, "coeffs": ["...", ...]} with coefficients as
// decimal strings (exact values may exceed 64 bits)
inline void to_json(nlohmann::json& j, const TruncatedSeries& s) {
  std::vector<std::string> cs;
  cs.reserve(s.degree() + 1);
  for (const auto& c : s.coeffs()) cs.push_back(c.get_str());
  j = nlohmann::json{{"ring", s.ring()}, {"degree", s.degree()}, {"coeffs", cs}};
}

inline void from_json(const nlohmann::json& j, TruncatedSeries& s) {
  const auto ring = j.at("ring").get<RingSpec>();
  const auto degree = j.at("degree").get<std::size_t>();
  const auto strings = j.at("coeffs").get<std::vector<std::string>>();
  if (strings.size() != degree + 1)
    throw std::invalid_argument("TruncatedSeries: coeffs length disagrees with degree");
  std::vector<mpz_class> cs;
  cs.reserve(strings.size());
  for (const auto& str : strings) cs.emplace_back(str);
  s = TruncatedSeries(ring, std::move(cs));
}

}  // namespace padicpart
