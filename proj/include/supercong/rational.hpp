#pragma once

// Arbitrary-precision integers and rationals (GMP) used as the exact
// ground truth for telescoping identities, plus reduction of an exact
// rational to a Residue mod p^e.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "supercong/arith.hpp"

namespace supercong {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(BigInt num, BigInt den) {
  BigRat q(std::move(num), std::move(den));
  mpq_canonicalize(q.get_mpq_t());
  return q;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), BigInt(1).get_mpz_t(), e);
  return r;
}

inline std::string to_string(const BigRat& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// p-adic valuation of a nonzero integer.
inline std::int64_t valuation(const BigInt& z, std::int64_t p) {
  if (z == 0) raise(errc::zero_input, "valuation of zero");
  BigInt stripped;
  return static_cast<std::int64_t>(
      mpz_remove(stripped.get_mpz_t(), z.get_mpz_t(), BigInt(p).get_mpz_t()));
}

inline Residue residue_of_bigint(const BigInt& z, const PrimeCtx& ctx) {
  BigInt r = z % ctx.m;  // mpz_class % keeps the sign of z
  std::int64_t v = r.get_si();
  return Residue(v, ctx);
}

/// Reduce an exact rational mod p^e.  Writes q = p^v * a/b with p coprime
/// to a and b; requires v >= 0.
inline Residue rational_to_residue(const BigRat& q, const PrimeCtx& ctx) {
  if (q == 0) return Residue(0, ctx);
  BigInt num = q.get_num();
  BigInt den = q.get_den();
  BigInt p(ctx.p);
  BigInt nu, du;
  std::int64_t vnum = static_cast<std::int64_t>(
      mpz_remove(nu.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  std::int64_t vden = static_cast<std::int64_t>(
      mpz_remove(du.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  std::int64_t v = vnum - vden;
  if (v < 0)
    raise(errc::negative_valuation,
          "rational has p^" + std::to_string(-v) + " in its denominator");
  if (v >= ctx.e) return Residue(0, ctx);
  Residue a = residue_of_bigint(nu, ctx);
  Residue b = residue_of_bigint(du, ctx);
  std::int64_t pv = 1;
  for (std::int64_t i = 0; i < v; ++i) pv *= ctx.p;
  return a * inverse(b) * Residue(pv, ctx);
}

}  // namespace supercong
