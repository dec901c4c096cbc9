#pragma once

// Exact big-rational evaluation of the WZ pair
//
//   F(n,k) = (-1)^{n+k} (6n-2k+1)/2^{9n-3k}
//            * (2n+2k)! (2n-2k)! C(2n-2k,n-k) / ((n+k)! (n-k)! n!^2)
//   G(n,k) = (-1)^{n+k} n^2 (2n+2k)! (2n-2k)! C(2n-2k,n-k)
//            / (2^{9n-3k-4} (2n+2k-1) (n+k)! (n-k)! n!^2)
//
// with F(n,k) = G(n,k) = 0 when n < k, plus checks of the certificate
// relation F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k), the telescoped sums, the
// summand closed form for F(n,0), and the Pochhammer reformulation of G.
// Identities are checked pointwise-exactly on explicit grids, for all
// integer arguments (not only primes).

#include <cstdint>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/rational.hpp"

namespace supercong::wz {

/// Both sides of one identity instance, evaluated exactly.
struct SideValues {
  bool equal = false;
  BigRat lhs, rhs;
};

class Engine {
 public:
  BigRat f_term(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) raise(errc::out_of_range, "negative WZ point");
    if (n < k) return BigRat(0);
    grow(2 * n + 2 * k);
    BigInt num(6 * n - 2 * k + 1);
    num *= factorial(2 * n + 2 * k);
    num *= factorial(2 * n - 2 * k);
    num *= binomial(2 * n - 2 * k, n - k);
    BigInt den = pow2(9 * n - 3 * k);
    den *= factorial(n + k);
    den *= factorial(n - k);
    den *= factorial(n);
    den *= factorial(n);
    if ((n + k) & 1) num = -num;
    return make_rat(std::move(num), std::move(den));
  }

  BigRat g_term(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) raise(errc::out_of_range, "negative WZ point");
    if (n < k || n == 0) return BigRat(0);
    grow(2 * n + 2 * k);
    BigInt num(n);
    num *= n;
    num *= factorial(2 * n + 2 * k);
    num *= factorial(2 * n - 2 * k);
    num *= binomial(2 * n - 2 * k, n - k);
    BigInt den = pow2(9 * n - 3 * k - 4);
    den *= 2 * n + 2 * k - 1;
    den *= factorial(n + k);
    den *= factorial(n - k);
    den *= factorial(n);
    den *= factorial(n);
    if ((n + k) & 1) num = -num;
    return make_rat(std::move(num), std::move(den));
  }

  /// F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k), k >= 1.
  SideValues pair_check(std::int64_t n, std::int64_t k) {
    if (k < 1) raise(errc::out_of_range, "pair check needs k >= 1");
    SideValues r;
    r.lhs = f_term(n, k - 1) - f_term(n, k);
    r.rhs = g_term(n + 1, k) - g_term(n, k);
    r.equal = (r.lhs == r.rhs);
    return r;
  }

  /// sum_{n=0}^{h} F(n,0) = F(h,h) + sum_{k=1}^{h} G(h+1,k), h = (m-1)/2,
  /// for odd m.
  SideValues telescope_half(std::int64_t m) {
    if (m < 1) raise(errc::out_of_range, "telescoping needs m >= 1");
    if (m % 2 == 0) raise(errc::not_odd, "half-range telescoping needs odd m");
    std::int64_t h = (m - 1) / 2;
    SideValues r;
    for (std::int64_t n = 0; n <= h; ++n) r.lhs += f_term(n, 0);
    r.rhs = f_term(h, h);
    for (std::int64_t k = 1; k <= h; ++k) r.rhs += g_term(h + 1, k);
    r.equal = (r.lhs == r.rhs);
    return r;
  }

  /// sum_{n=0}^{m-1} F(n,0) = F(m-1,m-1) + sum_{k=1}^{m-1} G(m,k).
  SideValues telescope_full(std::int64_t m) {
    if (m < 1) raise(errc::out_of_range, "telescoping needs m >= 1");
    SideValues r;
    for (std::int64_t n = 0; n < m; ++n) r.lhs += f_term(n, 0);
    r.rhs = f_term(m - 1, m - 1);
    for (std::int64_t k = 1; k < m; ++k) r.rhs += g_term(m, k);
    r.equal = (r.lhs == r.rhs);
    return r;
  }

  /// F(n,0) = (6n+1) C(2n,n)^3 / (-512)^n.
  SideValues f_summand(std::int64_t n) {
    if (n < 0) raise(errc::out_of_range, "negative WZ point");
    SideValues r;
    r.lhs = f_term(n, 0);
    BigInt c = binomial(2 * n, n);
    BigInt num = BigInt(6 * n + 1) * c * c * c;
    if (n & 1) num = -num;
    r.rhs = make_rat(std::move(num), pow2(9 * n));
    r.equal = (r.lhs == r.rhs);
    return r;
  }

  /// G(n,k) against its Pochhammer reformulation
  ///   (-1)^{n+k}/2^{9n-k-8} * C(2n,n) C(2n-2,n-1)^2 (1/2+n)_k n!
  ///   / ((2n+2k-1) (1/2+n-k)_{k-1}^2 (n-k)!),  1 <= k <= n.
  SideValues g_reform(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) raise(errc::out_of_range, "reformulation needs 1 <= k <= n");
    SideValues r;
    r.lhs = g_term(n, k);
    BigRat half(1, 2);
    BigRat up = rising(half + n, k);
    BigRat down = rising(half + n - k, k - 1);
    BigRat rhs = BigRat(binomial(2 * n, n)) *
                 BigRat(binomial(2 * n - 2, n - 1) * binomial(2 * n - 2, n - 1)) *
                 up * BigRat(factorial(n));
    rhs /= BigRat(pow2(9 * n - k - 8)) * BigRat(2 * n + 2 * k - 1) * down *
           down * BigRat(factorial(n - k));
    if ((n + k) & 1) rhs = -rhs;
    r.rhs = rhs;
    r.equal = (r.lhs == r.rhs);
    return r;
  }

  /// (a)_len = a (a+1) ... (a+len-1) over the rationals.
  static BigRat rising(BigRat a, std::int64_t len) {
    BigRat acc(1);
    for (std::int64_t i = 0; i < len; ++i) {
      acc *= a;
      a += 1;
    }
    return acc;
  }

 private:
  // grow first, then take references: growing may reallocate the cache
  void grow(std::int64_t n) {
    while (static_cast<std::int64_t>(fact_.size()) <= n) {
      BigInt next = fact_.back();
      next *= static_cast<unsigned long>(fact_.size());
      fact_.push_back(std::move(next));
    }
  }

  const BigInt& factorial(std::int64_t n) {
    grow(n);
    return fact_[n];
  }

  BigInt binomial(std::int64_t a, std::int64_t b) {
    grow(a);
    BigInt r;
    mpz_divexact(r.get_mpz_t(), fact_[a].get_mpz_t(), fact_[b].get_mpz_t());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), fact_[a - b].get_mpz_t());
    return r;
  }

  std::vector<BigInt> fact_{BigInt(1)};
};

}  // namespace supercong::wz
