#pragma once

// Exact residue arithmetic modulo p^e for odd primes p, plus p-adically
// factored values unit * p^v whose unit stays exact mod p^e.  The factored
// form lets factorial-like quantities with p in them be multiplied and
// divided without losing precision; addition is deliberately not provided
// on factored values, callers convert to Residue first.
//
// All arithmetic runs in 64-bit values with 128-bit intermediate products;
// make_ctx rejects moduli that do not fit.

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supercong {

enum class errc {
  composite_p,
  overflow,
  ctx_mismatch,
  not_a_unit,
  zero_input,
  zero_factor,
  negative_valuation,
  out_of_range,
  not_odd,
  unknown_check,
  invalid_range,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::composite_p: return "CompositeP";
    case errc::overflow: return "Overflow";
    case errc::ctx_mismatch: return "CtxMismatch";
    case errc::not_a_unit: return "NotAUnit";
    case errc::zero_input: return "ZeroInput";
    case errc::zero_factor: return "ZeroFactor";
    case errc::negative_valuation: return "NegativeValuation";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_odd: return "NotOdd";
    case errc::unknown_check: return "UnknownCheck";
    case errc::invalid_range: return "InvalidRange";
  }
  return "Unknown";
}

class arith_error : public std::runtime_error {
 public:
  arith_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw arith_error(code, what);
}

namespace detail {

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp,
                            std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid; returns x with a*x == gcd(a, m) (mod m).
inline std::int64_t inv_mod(std::int64_t a, std::int64_t m, bool& ok) {
  std::int64_t old_r = a, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  ok = (old_r == 1 || old_r == -1);
  std::int64_t x = (old_r == -1) ? -old_s : old_s;
  x %= m;
  if (x < 0) x += m;
  return x;
}

}  // namespace detail

// Deterministic trial division; fine at desk scale.
inline bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// A validated odd prime p with exponent e and modulus m = p^e.
struct PrimeCtx {
  std::int64_t p = 0;
  int e = 0;
  std::int64_t m = 0;
  friend bool operator==(const PrimeCtx&, const PrimeCtx&) = default;
};

inline PrimeCtx make_ctx(std::int64_t p, int e) {
  if (!is_odd_prime(p))
    raise(errc::composite_p, std::to_string(p) + " is not an odd prime");
  if (e < 1 || e > 8)
    raise(errc::out_of_range, "exponent must be in 1..8, got " + std::to_string(e));
  std::int64_t m = 1;
  for (int i = 0; i < e; ++i) {
    if (m > std::numeric_limits<std::int64_t>::max() / p)
      raise(errc::overflow, std::to_string(p) + "^" + std::to_string(e) +
                                " exceeds the 63-bit modulus budget");
    m *= p;
  }
  return PrimeCtx{p, e, m};
}

/// An integer in [0, p^e) under a PrimeCtx.  Construction canonicalizes,
/// so negative inputs lift to their least nonnegative representative.
class Residue {
 public:
  Residue(std::int64_t z, const PrimeCtx& ctx)
      : v_(((z % ctx.m) + ctx.m) % ctx.m), ctx_(ctx) {}

  std::int64_t value() const { return v_; }
  const PrimeCtx& ctx() const { return ctx_; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    a.require_same_ctx(b);
    std::int64_t s = a.v_ + b.v_;
    if (s >= a.ctx_.m) s -= a.ctx_.m;
    return Residue(s, a.ctx_, raw_tag{});
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    a.require_same_ctx(b);
    std::int64_t s = a.v_ - b.v_;
    if (s < 0) s += a.ctx_.m;
    return Residue(s, a.ctx_, raw_tag{});
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    a.require_same_ctx(b);
    return Residue(detail::mul_mod(a.v_, b.v_, a.ctx_.m), a.ctx_, raw_tag{});
  }
  Residue operator-() const { return Residue(-v_, ctx_); }

  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator-=(const Residue& b) { return *this = *this - b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.v_ == b.v_ && a.ctx_ == b.ctx_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Residue& a) {
    return os << a.v_;
  }

 private:
  struct raw_tag {};
  Residue(std::int64_t canonical, const PrimeCtx& ctx, raw_tag)
      : v_(canonical), ctx_(ctx) {}

  void require_same_ctx(const Residue& b) const {
    if (!(ctx_ == b.ctx_))
      raise(errc::ctx_mismatch, "residues from different contexts");
  }

  std::int64_t v_;
  PrimeCtx ctx_;
};

inline Residue residue_of_int(std::int64_t z, const PrimeCtx& ctx) {
  return Residue(z, ctx);
}

inline std::string to_string(const Residue& a) {
  return std::to_string(a.value());
}

/// Multiplicative inverse mod p^e via extended Euclid.
inline Residue inverse(const Residue& a) {
  bool ok = false;
  std::int64_t x = detail::inv_mod(a.value(), a.ctx().m, ok);
  if (!ok)
    raise(errc::not_a_unit,
          std::to_string(a.value()) + " is not invertible mod " +
              std::to_string(a.ctx().m));
  return Residue(x, a.ctx());
}

/// a^n by square-and-multiply; a^0 = 1.
inline Residue pow(const Residue& a, std::int64_t n) {
  if (n < 0) raise(errc::out_of_range, "negative exponent");
  return Residue(detail::pow_mod(a.value(), n, a.ctx().m), a.ctx());
}

/// Legendre symbol (a|p) by the Euler criterion.
inline int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (!is_odd_prime(p))
    raise(errc::composite_p, std::to_string(p) + " is not an odd prime");
  std::int64_t aa = ((a % p) + p) % p;
  if (aa == 0) return 0;
  std::int64_t t = detail::pow_mod(aa, (p - 1) / 2, p);
  return t == 1 ? 1 : -1;
}

/// unit * p^val with gcd(unit, p) = 1.  val may be negative (a p in a
/// denominator); to_residue rejects that case.
class FactoredResidue {
 public:
  FactoredResidue(const Residue& unit, std::int64_t val)
      : unit_(unit), val_(val) {
    if (unit_.value() % unit_.ctx().p == 0)
      raise(errc::not_a_unit, "factored unit is divisible by p");
  }

  static FactoredResidue one(const PrimeCtx& ctx) {
    return FactoredResidue(Residue(1, ctx), 0);
  }

  const Residue& unit() const { return unit_; }
  std::int64_t val() const { return val_; }
  const PrimeCtx& ctx() const { return unit_.ctx(); }

  friend FactoredResidue operator*(const FactoredResidue& a,
                                   const FactoredResidue& b) {
    return FactoredResidue(a.unit_ * b.unit_, a.val_ + b.val_);
  }
  friend FactoredResidue operator/(const FactoredResidue& a,
                                   const FactoredResidue& b) {
    return FactoredResidue(a.unit_ * inverse(b.unit_), a.val_ - b.val_);
  }
  FactoredResidue& operator*=(const FactoredResidue& b) {
    return *this = *this * b;
  }
  FactoredResidue& operator/=(const FactoredResidue& b) {
    return *this = *this / b;
  }

  friend bool operator==(const FactoredResidue& a, const FactoredResidue& b) {
    return a.unit_ == b.unit_ && a.val_ == b.val_;
  }

 private:
  Residue unit_;
  std::int64_t val_;
};

inline FactoredResidue factored_of_int(std::int64_t z, const PrimeCtx& ctx) {
  if (z == 0) raise(errc::zero_input, "cannot factor zero");
  std::int64_t val = 0;
  while (z % ctx.p == 0) {
    z /= ctx.p;
    ++val;
  }
  return FactoredResidue(Residue(z, ctx), val);
}

/// (unit * p^val) mod p^e.  Exact: the unit is known mod p^e, and the p^val
/// factor only shifts information beyond p^e out of range.
inline Residue to_residue(const FactoredResidue& a) {
  if (a.val() < 0)
    raise(errc::negative_valuation,
          "p^" + std::to_string(-a.val()) + " in a denominator");
  const PrimeCtx& c = a.ctx();
  if (a.val() >= c.e) return Residue(0, c);
  std::int64_t pv = 1;
  for (std::int64_t i = 0; i < a.val(); ++i) pv *= c.p;
  return a.unit() * Residue(pv, c);
}

/// n! as unit * p^val: val by Legendre's formula, unit by the standard
/// recursion  n! = p^{floor(n/p)} * floor(n/p)! * prod_{i<=n, p∤i} i.
inline FactoredResidue factorial_factored(std::int64_t n, const PrimeCtx& ctx) {
  if (n < 0) raise(errc::out_of_range, "factorial of a negative integer");
  std::int64_t val = 0;
  for (std::int64_t q = n / ctx.p; q > 0; q /= ctx.p) val += q;
  std::int64_t unit = 1;
  for (std::int64_t top = n; top > 0; top /= ctx.p) {
    for (std::int64_t i = 1; i <= top; ++i)
      if (i % ctx.p != 0) unit = detail::mul_mod(unit, i % ctx.m, ctx.m);
  }
  return FactoredResidue(Residue(unit, ctx), val);
}

inline FactoredResidue binomial_factored(std::int64_t a, std::int64_t b,
                                         const PrimeCtx& ctx) {
  if (b < 0 || b > a)
    raise(errc::out_of_range, "binomial requires 0 <= b <= a");
  return factorial_factored(a, ctx) /
         (factorial_factored(b, ctx) * factorial_factored(a - b, ctx));
}

/// (num/den)_k = prod_{i=0}^{k-1} (num + i*den) / den^k, exactly factored.
/// Requires den a unit mod p and every factor num + i*den nonzero.
inline FactoredResidue rising_factorial_rational(std::int64_t num,
                                                 std::int64_t den,
                                                 std::int64_t k,
                                                 const PrimeCtx& ctx) {
  if (k < 0) raise(errc::out_of_range, "rising factorial length < 0");
  if (den % ctx.p == 0)
    raise(errc::not_a_unit, "rising factorial denominator divisible by p");
  FactoredResidue acc = FactoredResidue::one(ctx);
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t f = num + i * den;
    if (f == 0) raise(errc::zero_factor, "zero factor in rising factorial");
    acc *= factored_of_int(f, ctx);
  }
  Residue den_inv_pow = pow(inverse(Residue(den, ctx)), k);
  return FactoredResidue(acc.unit() * den_inv_pow, acc.val());
}

/// sum_{k=1}^{n} s(k)/k^order mod p^e with s(k) = (-1)^k when alternating.
/// Requires n < p so every k is a unit.
inline Residue harmonic_sum(std::int64_t n, int order, bool alternating,
                            const PrimeCtx& ctx) {
  if (order != 1 && order != 2)
    raise(errc::out_of_range, "harmonic order must be 1 or 2");
  if (n < 0 || n >= ctx.p)
    raise(errc::not_a_unit, "harmonic sum needs 0 <= n < p");
  Residue acc(0, ctx);
  for (std::int64_t k = 1; k <= n; ++k) {
    Residue t = inverse(Residue(k, ctx));
    if (order == 2) t *= t;
    if (alternating && (k & 1))
      acc -= t;
    else
      acc += t;
  }
  return acc;
}

/// Fermat quotient (a^{p-1} - 1)/p mod p^e, computed from a^{p-1} mod p^{e+1}.
inline Residue fermat_quotient(std::int64_t a, const PrimeCtx& ctx) {
  if (ctx.m > std::numeric_limits<std::int64_t>::max() / ctx.p)
    raise(errc::overflow, "p^{e+1} exceeds the modulus budget");
  std::int64_t m2 = ctx.m * ctx.p;
  std::int64_t aa = ((a % m2) + m2) % m2;
  if (aa % ctx.p == 0)
    raise(errc::not_a_unit, "Fermat quotient of a multiple of p");
  std::int64_t t = detail::pow_mod(aa, ctx.p - 1, m2);
  // t == 1 (mod p) by Fermat, so the division is exact.
  return Residue((t - 1) / ctx.p, ctx);
}

}  // namespace supercong
