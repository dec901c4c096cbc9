#pragma once

// Euler numbers, Bernoulli numbers, and the Bernoulli/Euler polynomials at
// rational arguments, both modulo p and as exact rationals.  The modular and
// exact tables share one recurrence each, so they cross-check each other.

#include <cstdint>
#include <mutex>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// E_0..E_{n_max} mod p.
struct EulerTable {
  std::int64_t p = 0;
  std::vector<std::int64_t> values;
};

/// B_0..B_{n_max} mod p.
struct BernoulliTable {
  std::int64_t p = 0;
  std::vector<std::int64_t> values;
};

namespace detail {

// fact[0..n] and inv_fact[0..n] mod p; requires n < p.
struct FactTables {
  std::vector<std::int64_t> fact, inv_fact;
  std::int64_t p;

  FactTables(std::int64_t p_, std::int64_t n) : p(p_) {
    fact.resize(n + 1);
    inv_fact.resize(n + 1);
    fact[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) fact[i] = mul_mod(fact[i - 1], i, p);
    inv_fact[n] = pow_mod(fact[n], p - 2, p);
    for (std::int64_t i = n; i > 0; --i)
      inv_fact[i - 1] = mul_mod(inv_fact[i], i, p);
  }

  std::int64_t binom(std::int64_t a, std::int64_t b) const {
    if (b < 0 || b > a) return 0;
    return mul_mod(fact[a], mul_mod(inv_fact[b], inv_fact[a - b], p), p);
  }
};

}  // namespace detail

/// E_0..E_{n_max} mod p via sum_{j} C(2n,2j) E_{2j} = 0.  Needs p >= 5 and
/// n_max <= p-3 so every binomial stays below row p.
inline EulerTable euler_numbers_mod_p(std::int64_t p, std::int64_t n_max) {
  if (!is_odd_prime(p) || p < 5)
    raise(errc::composite_p, "Euler table needs an odd prime p >= 5");
  if (n_max < 0 || n_max > p - 3)
    raise(errc::out_of_range, "Euler table needs 0 <= n_max <= p-3");
  detail::FactTables ft(p, n_max);
  EulerTable t;
  t.p = p;
  t.values.assign(n_max + 1, 0);
  t.values[0] = 1;
  for (std::int64_t n = 2; n <= n_max; n += 2) {
    std::int64_t s = 0;
    for (std::int64_t j = 0; j < n; j += 2)
      s = (s + detail::mul_mod(ft.binom(n, j), t.values[j], p)) % p;
    t.values[n] = (p - s) % p;
  }
  return t;
}

/// B_0..B_{n_max} mod p via sum_{k=0}^{n} C(n+1,k) B_k = 0.  The divisor
/// n+1 must be a unit, hence n_max <= p-2.
inline BernoulliTable bernoulli_numbers_mod_p(std::int64_t p,
                                              std::int64_t n_max) {
  if (!is_odd_prime(p) || p < 5)
    raise(errc::composite_p, "Bernoulli table needs an odd prime p >= 5");
  if (n_max < 0 || n_max > p - 2)
    raise(errc::out_of_range, "Bernoulli table needs 0 <= n_max <= p-2");
  detail::FactTables ft(p, n_max + 1);
  BernoulliTable t;
  t.p = p;
  t.values.assign(n_max + 1, 0);
  t.values[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < n; ++k)
      s = (s + detail::mul_mod(ft.binom(n + 1, k), t.values[k], p)) % p;
    std::int64_t inv = detail::pow_mod((n + 1) % p, p - 2, p);
    t.values[n] = detail::mul_mod((p - s) % p, inv, p);
  }
  return t;
}

namespace detail {

// B_n(x) mod p from a prebuilt table; x = x_num/x_den with x_den a unit.
inline std::int64_t bernoulli_poly_from_table(const BernoulliTable& t,
                                              std::int64_t n,
                                              std::int64_t x_num,
                                              std::int64_t x_den) {
  std::int64_t p = t.p;
  if (n < 0 || n >= static_cast<std::int64_t>(t.values.size()))
    raise(errc::out_of_range, "Bernoulli table too short for B_n(x)");
  if (x_den % p == 0)
    raise(errc::not_a_unit, "Bernoulli polynomial argument denominator");
  std::int64_t x = mul_mod(((x_num % p) + p) % p,
                           pow_mod(((x_den % p) + p) % p, p - 2, p), p);
  // sum_{k=0}^{n} C(n,k) B_k x^{n-k}, binomial kept incrementally.
  std::int64_t acc = 0, c = 1;
  std::vector<std::int64_t> xpow(n + 1);
  xpow[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) xpow[i] = mul_mod(xpow[i - 1], x, p);
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      c = mul_mod(c, (n - k + 1) % p, p);
      c = mul_mod(c, pow_mod(k % p, p - 2, p), p);
    }
    acc = (acc + mul_mod(mul_mod(c, t.values[k], p), xpow[n - k], p)) % p;
  }
  return acc;
}

}  // namespace detail

/// B_n(x_num/x_den) mod p; needs n <= p-2 and x_den a unit.
inline Residue bernoulli_poly_mod_p(std::int64_t n, std::int64_t x_num,
                                    std::int64_t x_den, std::int64_t p) {
  BernoulliTable t = bernoulli_numbers_mod_p(p, n);
  return Residue(detail::bernoulli_poly_from_table(t, n, x_num, x_den),
                 make_ctx(p, 1));
}

namespace detail {

// E_n(x) = (2^{n+1}/(n+1)) (B_{n+1}((x+1)/2) - B_{n+1}(x/2)) mod p.
inline std::int64_t euler_poly_from_table(const BernoulliTable& t,
                                          std::int64_t n, std::int64_t x_num,
                                          std::int64_t x_den) {
  std::int64_t p = t.p;
  std::int64_t hi = bernoulli_poly_from_table(t, n + 1, x_num + x_den,
                                              2 * x_den);
  std::int64_t lo = bernoulli_poly_from_table(t, n + 1, x_num, 2 * x_den);
  std::int64_t diff = ((hi - lo) % p + p) % p;
  std::int64_t scale = mul_mod(pow_mod(2, n + 1, p),
                               pow_mod((n + 1) % p, p - 2, p), p);
  return mul_mod(scale, diff, p);
}

}  // namespace detail

/// E_n(x_num/x_den) mod p; needs n+1 <= p-2 and x_den a unit.
inline Residue euler_poly_mod_p(std::int64_t n, std::int64_t x_num,
                                std::int64_t x_den, std::int64_t p) {
  if (n < 0 || n + 1 > p - 2)
    raise(errc::out_of_range, "Euler polynomial needs n+1 <= p-2");
  BernoulliTable t = bernoulli_numbers_mod_p(p, n + 1);
  return Residue(detail::euler_poly_from_table(t, n, x_num, x_den),
                 make_ctx(p, 1));
}

// --- exact values -------------------------------------------------------

namespace detail {

inline std::mutex& exact_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// Exact B_n, cached across calls.
inline BigRat bernoulli_exact(std::int64_t n) {
  if (n < 0) raise(errc::out_of_range, "negative Bernoulli index");
  static std::vector<BigRat> cache{BigRat(1)};
  std::lock_guard<std::mutex> lock(detail::exact_cache_mutex());
  while (static_cast<std::int64_t>(cache.size()) <= n) {
    std::int64_t m = static_cast<std::int64_t>(cache.size());
    BigRat s(0);
    for (std::int64_t k = 0; k < m; ++k) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
      s += BigRat(c) * cache[k];
    }
    cache.push_back(-s / BigRat(m + 1));
  }
  return cache[n];
}

/// Exact E_n (integers), cached across calls.
inline BigInt euler_exact(std::int64_t n) {
  if (n < 0) raise(errc::out_of_range, "negative Euler index");
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard<std::mutex> lock(detail::exact_cache_mutex());
  while (static_cast<std::int64_t>(cache.size()) <= n) {
    std::int64_t m = static_cast<std::int64_t>(cache.size());
    if (m & 1) {
      cache.push_back(BigInt(0));
      continue;
    }
    BigInt s(0);
    for (std::int64_t j = 0; j < m; j += 2) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), m, j);
      s += c * cache[j];
    }
    cache.push_back(-s);
  }
  return cache[n];
}

/// Exact B_n(x) = sum C(n,k) B_k x^{n-k}.
inline BigRat bernoulli_poly_exact(std::int64_t n, const BigRat& x) {
  if (n < 0) raise(errc::out_of_range, "negative Bernoulli index");
  BigRat acc(0), xp(1);
  // accumulate from k = n down so powers of x build up incrementally
  for (std::int64_t k = n; k >= 0; --k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    acc += BigRat(c) * bernoulli_exact(k) * xp;
    xp *= x;
  }
  return acc;
}

/// Exact E_n(x), through the same Bernoulli route as the modular path.
inline BigRat euler_poly_exact(std::int64_t n, const BigRat& x) {
  if (n < 0) raise(errc::out_of_range, "negative Euler index");
  BigRat half(1, 2);
  BigRat hi = bernoulli_poly_exact(n + 1, (x + 1) * half);
  BigRat lo = bernoulli_poly_exact(n + 1, x * half);
  return BigRat(pow2(n + 1)) / BigRat(n + 1) * (hi - lo);
}

}  // namespace supercong
