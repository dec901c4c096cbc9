#pragma once

// Catalog of every congruence and finite identity the engine verifies.
// Each entry pairs a descriptor (stable id, kind, modulus exponent, prime
// filter, statement) with an evaluator returning both sides exactly.
//
// Congruence evaluators build sums term-by-term in factored residues and
// convert to Residue only at accumulation; a negative valuation at
// conversion is reported as a failing check with a diagnostic, not a crash.
// Entries quantified over k report the first mismatching k on failure and
// the values at the last k on success.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/rational.hpp"
#include "supercong/special.hpp"
#include "supercong/wz.hpp"

namespace supercong {

enum class CheckKind { congruence, exact_identity };

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckDescriptor {
  std::string id;
  CheckKind kind = CheckKind::congruence;
  int exponent = 0;         // e of the modulus p^e; 0 for exact identities
  std::int64_t min_p = 3;   // prime filter: run only for p > min_p
  std::string range;        // sweep-variable meaning for exact identities
  std::string statement;    // the verified statement, ASCII math
};

struct CheckReport {
  std::string id;
  std::int64_t p = 0;  // prime, or the sweep variable n for exact identities
  int exponent = 0;
  CheckStatus status = CheckStatus::skip;
  std::string lhs, rhs;
  double ms = 0.0;
};

inline std::string modulus_string(const CheckReport& r) {
  if (r.exponent == 0) return "exact";
  return std::to_string(r.p) + "^" + std::to_string(r.exponent);
}

/// Per-prime shared state: special-number tables built lazily on first use
/// and a WZ engine whose factorial cache persists across checks.  One
/// instance is owned by a single sweep task; no locking.
class PrimeTables {
 public:
  explicit PrimeTables(std::int64_t p) : p_(p) {}

  std::int64_t p() const { return p_; }

  std::int64_t euler_number(std::int64_t n) {
    if (!euler_) euler_ = euler_numbers_mod_p(p_, p_ - 3);
    return euler_->values.at(n);
  }

  /// E_{p-3}(1/4) mod p.
  std::int64_t euler_poly_quarter() {
    if (!epq_) {
      BernoulliTable bt = bernoulli_numbers_mod_p(p_, p_ - 2);
      epq_ = detail::euler_poly_from_table(bt, p_ - 3, 1, 4);
    }
    return *epq_;
  }

  wz::Engine& engine() { return engine_; }

 private:
  std::int64_t p_;
  std::optional<EulerTable> euler_;
  std::optional<std::int64_t> epq_;
  wz::Engine engine_;
};

namespace detail {

struct Outcome {
  bool pass = false;
  std::string lhs, rhs;
};

inline Outcome outcome(const Residue& lhs, const Residue& rhs) {
  return Outcome{lhs == rhs, to_string(lhs), to_string(rhs)};
}

inline Outcome outcome(const BigRat& lhs, const BigRat& rhs) {
  return Outcome{lhs == rhs, lhs.get_str(), rhs.get_str()};
}

inline Residue r_of(std::int64_t z, const PrimeCtx& c) { return Residue(z, c); }

inline Residue chi(std::int64_t a, const PrimeCtx& c) {
  return Residue(legendre_symbol(a, c.p), c);
}

inline Residue inv_of(std::int64_t z, const PrimeCtx& c) {
  return inverse(Residue(z, c));
}

inline Residue sign_of(std::int64_t k, const PrimeCtx& c) {
  return Residue((k & 1) ? -1 : 1, c);
}

// ---- congruence evaluators ----------------------------------------------

inline Outcome eval_thm_1_1(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), cb(1, c), pw(1, c);
  Residue inv512 = inv_of(-512, c);
  for (std::int64_t n = 0; n <= half; ++n) {
    if (n > 0) {
      cb *= r_of(2 * (2 * n - 1), c) * inv_of(n, c);
      pw *= inv512;
    }
    sum += r_of(6 * n + 1, c) * cb * cb * cb * pw;
  }
  Residue p3 = pow(r_of(c.p, c), 3);
  Residue rhs = r_of(c.p, c) * chi(-2, c) +
                p3 * inv_of(4, c) * chi(2, c) *
                    r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_thm_1_2(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), cb(1, c), h(0, c), pw(1, c);
  Residue inv2 = inv_of(2, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    cb *= r_of(2 * (2 * k - 1), c) * inv_of(k, c);
    h += inv_of(k, c);
    pw *= inv2;
    sum += cb * h * h * pw;
  }
  Residue q = fermat_quotient(2, c);
  Residue rhs = chi(-1, c) * q * q - r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_remark_1_2_full(const PrimeCtx& c, PrimeTables& tab) {
  Residue sum(0, c), h(0, c), pw(1, c);
  Residue inv2 = inv_of(2, c);
  FactoredResidue cb = FactoredResidue::one(c);
  for (std::int64_t k = 1; k <= c.p - 1; ++k) {
    cb *= factored_of_int(2 * (2 * k - 1), c);
    cb /= factored_of_int(k, c);
    h += inv_of(k, c);
    pw *= inv2;
    sum += to_residue(cb) * h * h * pw;
  }
  Residue q = fermat_quotient(2, c);
  Residue rhs = chi(-1, c) * q * q - r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_thm_1_3(const PrimeCtx& c, PrimeTables& tab) {
  Residue sum(1, c), pw(1, c);
  Residue inv512 = inv_of(-512, c);
  FactoredResidue cb = FactoredResidue::one(c);
  for (std::int64_t n = 1; n <= c.p - 1; ++n) {
    cb *= factored_of_int(2 * (2 * n - 1), c);
    cb /= factored_of_int(n, c);
    pw *= inv512;
    sum += to_residue(cb * cb * cb) * r_of(6 * n + 1, c) * pw;
  }
  Residue p3 = pow(r_of(c.p, c), 3);
  Residue rhs = r_of(c.p, c) * chi(-2, c) +
                p3 * inv_of(16, c) * r_of(tab.euler_poly_quarter(), c);
  return outcome(sum, rhs);
}

inline Outcome eval_vh_zudilin(const PrimeCtx& c, PrimeTables&) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), kf_inv(1, c);
  for (std::int64_t k = 0; k <= half; ++k) {
    if (k > 0) kf_inv *= inv_of(k, c);
    Residue u = to_residue(rising_factorial_rational(1, 2, k, c)) * kf_inv;
    sum += sign_of(k, c) * r_of(4 * k + 1, c) * u * u * u;
  }
  Residue rhs = chi(-1, c) * r_of(c.p, c);
  return outcome(sum, rhs);
}

inline Outcome eval_cxh_3k1(const PrimeCtx& c, PrimeTables& tab) {
  Residue sum(1, c), pw(1, c);
  Residue inv8 = inv_of(-8, c);
  FactoredResidue cb = FactoredResidue::one(c);
  for (std::int64_t k = 1; k <= c.p - 1; ++k) {
    cb *= factored_of_int(2 * (2 * k - 1), c);
    cb /= factored_of_int(k, c);
    pw *= inv8;
    sum += to_residue(cb * cb * cb) * r_of(3 * k + 1, c) * pw;
  }
  Residue p3 = pow(r_of(c.p, c), 3);
  Residue rhs = r_of(c.p, c) * chi(-1, c) +
                p3 * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_sun_4k1(const PrimeCtx& c, PrimeTables& tab) {
  Residue sum(1, c), pw(1, c);
  Residue inv64 = inv_of(-64, c);
  FactoredResidue cb = FactoredResidue::one(c);
  for (std::int64_t k = 1; k <= c.p - 1; ++k) {
    cb *= factored_of_int(2 * (2 * k - 1), c);
    cb /= factored_of_int(k, c);
    pw *= inv64;
    sum += to_residue(cb * cb * cb) * r_of(4 * k + 1, c) * pw;
  }
  Residue p3 = pow(r_of(c.p, c), 3);
  Residue rhs = chi(-1, c) * r_of(c.p, c) +
                p3 * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_guo_liu(const PrimeCtx& c, PrimeTables& tab) {
  Residue sum(0, c), kf_inv(1, c);
  for (std::int64_t k = 0; k <= (c.p + 1) / 2; ++k) {
    if (k > 0) kf_inv *= inv_of(k, c);
    Residue u = to_residue(rising_factorial_rational(-1, 2, k, c)) * kf_inv;
    sum += sign_of(k, c) * r_of(4 * k - 1, c) * u * u * u;
  }
  Residue p3 = pow(r_of(c.p, c), 3);
  Residue rhs = r_of(c.p, c) * sign_of((c.p + 1) / 2, c) +
                p3 * (r_of(2, c) - r_of(tab.euler_number(c.p - 3), c));
  return outcome(sum, rhs);
}

inline Outcome eval_wolstenholme_h1(const PrimeCtx& c, PrimeTables&) {
  return outcome(harmonic_sum(c.p - 1, 1, false, c), Residue(0, c));
}

inline Outcome eval_wolstenholme_h2(const PrimeCtx& c, PrimeTables&) {
  return outcome(harmonic_sum(c.p - 1, 2, false, c), Residue(0, c));
}

inline Outcome eval_binom_2p1p(const PrimeCtx& c, PrimeTables&) {
  Residue lhs = to_residue(binomial_factored(2 * c.p - 1, c.p - 1, c));
  return outcome(lhs, Residue(1, c));
}

inline Outcome eval_lem_2_2(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), h(0, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    Residue ik = inv_of(k, c);
    h += ik;
    sum += sign_of(k, c) * h * ik;
  }
  Residue q = fermat_quotient(2, c);
  Residue rhs = inv_of(2, c) * q * q +
                chi(-1, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_aux_binom_p1(const PrimeCtx& c, PrimeTables&) {
  Residue cb(1, c), h(0, c);
  Outcome last;
  for (std::int64_t k = 1; k <= c.p - 1; ++k) {
    Residue lhs = sign_of(k - 1, c) * cb;
    Residue rhs = r_of(1, c) - r_of(c.p, c) * h;
    last = outcome(lhs, rhs);
    if (!last.pass) return last;
    cb *= r_of(c.p - k, c) * inv_of(k, c);
    h += inv_of(k, c);
  }
  return last;
}

inline Outcome eval_sum_alt_inv(const PrimeCtx& c, PrimeTables& tab) {
  Residue lhs = harmonic_sum((c.p - 1) / 2, 1, true, c);
  Residue q = fermat_quotient(2, c);
  Residue rhs = -q + r_of(c.p, c) * inv_of(2, c) * q * q -
                chi(-1, c) * r_of(c.p, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(lhs, rhs);
}

inline Outcome eval_sum_alt_inv2(const PrimeCtx& c, PrimeTables& tab) {
  Residue lhs = harmonic_sum((c.p - 1) / 2, 2, true, c);
  Residue rhs = r_of(2, c) * chi(-1, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(lhs, rhs);
}

inline Outcome eval_h_half(const PrimeCtx& c, PrimeTables&) {
  Residue lhs = harmonic_sum((c.p - 1) / 2, 1, false, c);
  Residue rhs = r_of(-2, c) * fermat_quotient(2, c);
  return outcome(lhs, rhs);
}

inline Outcome eval_h2_half(const PrimeCtx& c, PrimeTables&) {
  return outcome(harmonic_sum((c.p - 1) / 2, 2, false, c), Residue(0, c));
}

inline Outcome eval_binom_transfer(const PrimeCtx& c, PrimeTables&) {
  std::int64_t half = (c.p - 1) / 2;
  Residue cb(1, c), ch(1, c), pw(1, c);
  Outcome last;
  for (std::int64_t k = 0; k <= half; ++k) {
    last = outcome(cb, ch * pw);
    if (!last.pass) return last;
    cb *= r_of(2 * (2 * k + 1), c) * inv_of(k + 1, c);
    ch *= r_of(half - k, c) * inv_of(k + 1, c);
    pw *= r_of(-4, c);
  }
  return last;
}

inline Outcome eval_morley(const PrimeCtx& c, PrimeTables&) {
  Residue lhs = to_residue(binomial_factored(c.p - 1, (c.p - 1) / 2, c));
  Residue rhs = chi(-1, c) * pow(r_of(4, c), c.p - 1);
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_3_2(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue lhs = rational_to_residue(tab.engine().f_term(half, half), c);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = chi(-1, c) * p1 * (r_of(1, c) - p1 * q + p1 * p1 * q * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_3_3(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), ch(1, c), h(0, c), pw(1, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    ch *= r_of(half - k + 1, c) * inv_of(k, c);
    pw *= r_of(-2, c);
    h += inv_of(k, c);
    sum += ch * pw * h;
  }
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = chi(-1, c) * (-q + p1 * inv_of(2, c) * q * q) +
                p1 * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_lem_3_4(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  BigRat s(0);
  for (std::int64_t k = 1; k <= half; ++k)
    s += tab.engine().g_term((c.p + 1) / 2, k);
  Residue lhs = rational_to_residue(s, c);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue p3 = pow(p1, 3);
  Residue rhs = p1 * chi(-2, c) +
                p3 * inv_of(4, c) * chi(2, c) *
                    r_of(tab.euler_number(c.p - 3), c) -
                chi(-1, c) * p1 * (r_of(1, c) - p1 * q + p1 * p1 * q * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_two_pow_half(const PrimeCtx& c, PrimeTables&) {
  Residue lhs = pow(r_of(2, c), (c.p - 1) / 2);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = chi(2, c) * (r_of(1, c) + p1 * inv_of(2, c) * q -
                             p1 * p1 * inv_of(8, c) * q * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_aux_odd_product(const PrimeCtx& c, PrimeTables&) {
  std::int64_t half = (c.p - 1) / 2;
  Residue pw2(1, c), rp(1, c), dfac(1, c), ch(1, c), cb(1, c), pw4(1, c);
  Outcome last;
  for (std::int64_t k = 1; k <= half; ++k) {
    Residue lhs = pw2 * rp;
    Residue rhs = dfac * ch * pw4 * inverse(cb);
    last = outcome(lhs, rhs);
    if (!last.pass) return last;
    pw2 *= r_of(-2, c);
    rp *= r_of((c.p + 1) / 2 - k, c);
    dfac *= r_of(2 * k - 1, c);
    ch *= r_of(half - k + 1, c) * inv_of(k, c);
    cb *= r_of(2 * (2 * k - 1), c) * inv_of(k, c);
    pw4 *= r_of(-4, c);
  }
  return last;
}

inline Outcome eval_lem_4_1(const PrimeCtx& c, PrimeTables& tab) {
  Residue lhs = rational_to_residue(tab.engine().f_term(c.p - 1, c.p - 1), c);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = r_of(-3, c) * p1 * p1 *
                (r_of(1, c) + r_of(4, c) * p1 - r_of(6, c) * p1 * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_binom_4p(const PrimeCtx& c, PrimeTables&) {
  Residue lhs = to_residue(binomial_factored(4 * c.p - 1, 2 * c.p - 1, c));
  return outcome(lhs, Residue(3, c));
}

inline Outcome eval_lem_4_3_a(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), cb(1, c), pw(1, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    cb *= r_of(2 * (2 * k - 1), c) * inv_of(k, c);
    pw *= r_of(8, c);
    sum += pw * inverse(r_of(k, c) * r_of(2 * k - 1, c) * cb);
  }
  Residue rhs = inv_of(4, c) * r_of(tab.euler_poly_quarter(), c);
  return outcome(sum, rhs);
}

inline Outcome eval_lem_4_3_b(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), cb(1, c), pw(1, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    cb *= r_of(2 * (2 * k - 1), c) * inv_of(k, c);
    pw *= r_of(2, c);
    sum += pw * inverse(r_of(k, c) * r_of(k, c) * cb);
  }
  Residue lhs = chi(-2, c) * sum;
  Residue rhs = inv_of(4, c) * r_of(tab.euler_poly_quarter(), c);
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_4_4(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  BigRat s(0);
  for (std::int64_t k = 1; k <= half; ++k) s += tab.engine().g_term(c.p, k);
  Residue lhs = rational_to_residue(s, c);
  Residue rhs = pow(r_of(c.p, c), 3) * inv_of(16, c) *
                r_of(tab.euler_poly_quarter(), c);
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_4_4_term(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue p3inv4 = pow(r_of(c.p, c), 3) * inv_of(4, c);
  Residue cb(1, c), pw(1, c);
  Outcome last;
  for (std::int64_t k = 1; k <= half; ++k) {
    cb *= r_of(2 * (2 * k - 1), c) * inv_of(k, c);
    pw *= r_of(8, c);
    Residue lhs = rational_to_residue(tab.engine().g_term(c.p, k), c);
    Residue rhs =
        p3inv4 * pw * inverse(r_of(k, c) * r_of(2 * k - 1, c) * cb);
    last = outcome(lhs, rhs);
    if (!last.pass) return last;
  }
  return last;
}

inline Outcome eval_lem_4_5(const PrimeCtx& c, PrimeTables& tab) {
  Residue lhs = rational_to_residue(tab.engine().g_term(c.p, (c.p + 1) / 2), c);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = p1 * chi(-2, c) *
                (r_of(1, c) - r_of(3, c) * p1 * inv_of(2, c) * q +
                 r_of(15, c) * p1 * p1 * inv_of(8, c) * q * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_4_6(const PrimeCtx& c, PrimeTables& tab) {
  BigRat s(0);
  for (std::int64_t k = (c.p + 3) / 2; k <= c.p - 1; ++k)
    s += tab.engine().g_term(c.p, k);
  Residue lhs = rational_to_residue(s, c);
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue p2 = p1 * p1;
  Residue rhs = chi(-2, c) * r_of(3, c) * p2 *
                    (inv_of(2, c) * q - r_of(5, c) * inv_of(8, c) * p1 * q * q) +
                r_of(3, c) * p2 *
                    (r_of(1, c) + r_of(4, c) * p1 - r_of(6, c) * p1 * q);
  return outcome(lhs, rhs);
}

inline Outcome eval_sigma_sum_1(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), ch(1, c), pw(1, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    ch *= r_of(half - k + 1, c) * inv_of(k, c);
    pw *= r_of(-2, c);
    sum += ch * pw * inv_of(k, c);
  }
  Residue q = fermat_quotient(2, c);
  Residue p1 = r_of(c.p, c);
  Residue rhs = q - p1 * inv_of(2, c) * q * q -
                p1 * chi(-1, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_sigma_sum_2(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), ch(1, c), pw(1, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    ch *= r_of(half - k + 1, c) * inv_of(k, c);
    pw *= r_of(-2, c);
    Residue ik = inv_of(k, c);
    sum += ch * pw * ik * ik;
  }
  Residue q = fermat_quotient(2, c);
  Residue rhs = -inv_of(2, c) * q * q +
                chi(-1, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

inline Outcome eval_sigma_sum_3(const PrimeCtx& c, PrimeTables& tab) {
  std::int64_t half = (c.p - 1) / 2;
  Residue sum(0, c), ch(1, c), pw(1, c), h(0, c);
  for (std::int64_t k = 1; k <= half; ++k) {
    ch *= r_of(half - k + 1, c) * inv_of(k, c);
    pw *= r_of(-2, c);
    Residue ik = inv_of(k, c);
    h += ik;
    sum += ch * pw * h * ik;
  }
  Residue rhs = chi(-1, c) * r_of(tab.euler_number(c.p - 3), c);
  return outcome(sum, rhs);
}

// ---- exact-identity evaluators -------------------------------------------

// Running alternating/harmonic partial sums shared by the finite identities.
struct HarmonicState {
  BigRat h, h2, s1, s2, s3;  // H_k, H^(2)_k, sum (-1)^j/j, /j^2, (-1)^j H_j/j
  void step(std::int64_t k) {
    BigRat inv_k(1, k);
    h += inv_k;
    h2 += inv_k * inv_k;
    BigRat alt = (k & 1) ? -inv_k : inv_k;
    s1 += alt;
    s2 += alt * inv_k;
    s3 += alt * h;
  }
};

inline BigInt binom_exact(std::int64_t n, std::int64_t k) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

inline Outcome eval_lem_2_1_a(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  BigRat lhs(0);
  BigInt pw(1);
  HarmonicState st;
  for (std::int64_t k = 1; k <= n; ++k) {
    pw *= -2;
    st.step(k);
    lhs += BigRat(binom_exact(n, k) * pw) * st.h * st.h;
  }
  BigRat half(1, 2);
  BigRat rhs = st.h2 * half + st.h * st.h - 2 * st.s2 - 2 * st.h * st.s1 -
               st.s1 * st.s1 * half + 3 * st.s3;
  if (n & 1) rhs = -rhs;
  return outcome(lhs, rhs);
}

inline Outcome eval_lem_2_1_b(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  BigRat lhs(0);
  BigInt pw(1);
  HarmonicState st;
  for (std::int64_t k = 1; k <= n; ++k) {
    pw *= -2;
    st.step(k);
    lhs += BigRat(binom_exact(n, k) * pw) * st.h;
  }
  BigRat rhs = st.h - st.s1;
  if (n & 1) rhs = -rhs;
  return outcome(lhs, rhs);
}

inline Outcome eval_sigma_id_1(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  BigRat lhs(0);
  BigInt pw(1);
  HarmonicState st;
  for (std::int64_t k = 1; k <= n; ++k) {
    pw *= -2;
    st.step(k);
    lhs += make_rat(binom_exact(n, k) * pw, BigInt(k));
  }
  return outcome(lhs, -st.h + st.s1);
}

inline Outcome eval_sigma_id_2(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  BigRat lhs(0), inner(0);
  BigInt pw(1);
  HarmonicState st;
  for (std::int64_t k = 1; k <= n; ++k) {
    pw *= -2;
    st.step(k);
    lhs += make_rat(binom_exact(n, k) * pw, BigInt(k) * k);
    inner += st.s1 / k;
  }
  BigRat half(1, 2);
  BigRat rhs = -st.h2 * half - st.h * st.h * half + inner;
  return outcome(lhs, rhs);
}

inline Outcome eval_sigma_id_3(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  BigRat lhs(0);
  BigInt pw(1);
  HarmonicState st;
  for (std::int64_t k = 1; k <= n; ++k) {
    pw *= -2;
    st.step(k);
    lhs += make_rat(binom_exact(n, k) * pw, BigInt(k)) * st.h;
  }
  BigRat half(1, 2);
  BigRat rhs = -st.h2 * half - st.s1 * st.s1 * half + st.s3;
  return outcome(lhs, rhs);
}

inline Outcome eval_sum_binom_p_half(std::int64_t m) {
  if (m < 1) raise(errc::out_of_range, "identity needs m >= 1");
  if (m % 2 == 0) raise(errc::not_odd, "identity needs odd m");
  BigInt lhs(0);
  for (std::int64_t k = 1; k <= (m - 1) / 2; ++k) lhs += binom_exact(m, k);
  BigInt rhs = pow2(m - 1) - 1;
  return Outcome{lhs == rhs, lhs.get_str(), rhs.get_str()};
}

inline Outcome eval_power_sum_residue_class(std::int64_t p) {
  if (p < 1) raise(errc::out_of_range, "identity needs p >= 1");
  Outcome last;
  for (std::int64_t r = 0; r < 8; ++r) {
    for (std::int64_t k = 0; k <= 3; ++k) {
      BigInt brute(0);
      for (std::int64_t x = r; x < p; x += 8) {
        BigInt xp(1);
        for (std::int64_t i = 0; i < k; ++i) xp *= x;
        brute += xp;  // x = 0, k = 0 contributes 1
      }
      BigRat hi = bernoulli_poly_exact(
          k + 1, make_rat(BigInt(p), BigInt(8)) +
                     make_rat(BigInt(((r - p) % 8 + 8) % 8), BigInt(8)));
      BigRat lo = bernoulli_poly_exact(k + 1, make_rat(BigInt(r), BigInt(8)));
      BigInt mk(1);
      for (std::int64_t i = 0; i < k; ++i) mk *= 8;
      BigRat closed = make_rat(mk, BigInt(k + 1)) * (hi - lo);
      last = outcome(BigRat(brute), closed);
      if (!last.pass) return last;
    }
  }
  return last;
}

inline Outcome eval_wz_relation(std::int64_t n) {
  if (n < 0) raise(errc::out_of_range, "identity needs n >= 0");
  wz::Engine eng;
  Outcome last;
  for (std::int64_t k = 1; k <= n + 1; ++k) {
    wz::SideValues v = eng.pair_check(n, k);
    last = outcome(v.lhs, v.rhs);
    if (!last.pass) return last;
  }
  return last;
}

inline Outcome eval_wz_telescope_half(std::int64_t m) {
  wz::Engine eng;
  wz::SideValues v = eng.telescope_half(m);
  return outcome(v.lhs, v.rhs);
}

inline Outcome eval_wz_telescope_full(std::int64_t m) {
  wz::Engine eng;
  wz::SideValues v = eng.telescope_full(m);
  return outcome(v.lhs, v.rhs);
}

inline Outcome eval_f_summand(std::int64_t n) {
  wz::Engine eng;
  wz::SideValues v = eng.f_summand(n);
  return outcome(v.lhs, v.rhs);
}

inline Outcome eval_g_reform(std::int64_t n) {
  if (n < 1) raise(errc::out_of_range, "identity needs n >= 1");
  wz::Engine eng;
  Outcome last;
  for (std::int64_t k = 1; k <= n; ++k) {
    wz::SideValues v = eng.g_reform(n, k);
    last = outcome(v.lhs, v.rhs);
    if (!last.pass) return last;
  }
  return last;
}

// ---- catalog --------------------------------------------------------------

using CongruenceFn = Outcome (*)(const PrimeCtx&, PrimeTables&);
using IdentityFn = Outcome (*)(std::int64_t);

struct Entry {
  CheckDescriptor desc;
  CongruenceFn congruence = nullptr;
  IdentityFn identity = nullptr;
};

inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v;
    auto cong = [&v](std::string id, int e, std::int64_t min_p,
                     std::string stmt, CongruenceFn fn) {
      v.push_back(Entry{CheckDescriptor{std::move(id), CheckKind::congruence,
                                        e, min_p, "", std::move(stmt)},
                        fn, nullptr});
    };
    auto ident = [&v](std::string id, std::string range, std::string stmt,
                      IdentityFn fn) {
      v.push_back(Entry{CheckDescriptor{std::move(id),
                                        CheckKind::exact_identity, 0, 0,
                                        std::move(range), std::move(stmt)},
                        nullptr, fn});
    };

    cong("THM_1_1", 4, 3,
         "sum_{n=0}^{(p-1)/2} (6n+1)C(2n,n)^3/(-512)^n == p(-2|p) + "
         "(p^3/4)(2|p)E_{p-3}  (mod p^4)",
         eval_thm_1_1);
    cong("THM_1_2", 1, 3,
         "sum_{k=1}^{(p-1)/2} C(2k,k)H_k^2/2^k == (-1)^((p-1)/2)q_p(2)^2 - "
         "E_{p-3}  (mod p)",
         eval_thm_1_2);
    cong("REMARK_1_2_FULL", 1, 3,
         "sum_{k=0}^{p-1} C(2k,k)H_k^2/2^k == (-1)^((p-1)/2)q_p(2)^2 - "
         "E_{p-3}  (mod p)",
         eval_remark_1_2_full);
    cong("THM_1_3", 4, 3,
         "sum_{n=0}^{p-1} (6n+1)C(2n,n)^3/(-512)^n == p(-2|p) + "
         "(p^3/16)E_{p-3}(1/4)  (mod p^4)",
         eval_thm_1_3);
    cong("VH_ZUDILIN", 3, 3,
         "sum_{k=0}^{(p-1)/2} (4k+1)(-1)^k((1/2)_k/k!)^3 == "
         "(-1)^((p-1)/2) p  (mod p^3)",
         eval_vh_zudilin);
    cong("CXH_3K1", 4, 3,
         "sum_{k=0}^{p-1} (3k+1)C(2k,k)^3/(-8)^k == p(-1)^((p-1)/2) + "
         "p^3 E_{p-3}  (mod p^4)",
         eval_cxh_3k1);
    cong("SUN_4K1", 4, 3,
         "sum_{k=0}^{p-1} (4k+1)C(2k,k)^3/(-64)^k == (-1)^((p-1)/2) p + "
         "p^3 E_{p-3}  (mod p^4)",
         eval_sun_4k1);
    cong("GUO_LIU", 4, 3,
         "sum_{k=0}^{(p+1)/2} (-1)^k(4k-1)(-1/2)_k^3/(1)_k^3 == "
         "p(-1)^((p+1)/2) + p^3(2 - E_{p-3})  (mod p^4)",
         eval_guo_liu);
    cong("WOLSTENHOLME_H1", 2, 3, "H_{p-1} == 0  (mod p^2)",
         eval_wolstenholme_h1);
    cong("WOLSTENHOLME_H2", 1, 3, "H^(2)_{p-1} == 0  (mod p)",
         eval_wolstenholme_h2);
    cong("BINOM_2P1P", 3, 3, "C(2p-1,p-1) == 1  (mod p^3)", eval_binom_2p1p);
    cong("LEM_2_2", 1, 3,
         "sum_{k=1}^{(p-1)/2} (-1)^k H_k/k == q_p(2)^2/2 + "
         "(-1)^((p-1)/2)E_{p-3}  (mod p)",
         eval_lem_2_2);
    cong("AUX_BINOM_P1", 2, 3,
         "(-1)^(k-1) C(p-1,k-1) == 1 - p H_{k-1}  (mod p^2) for 1 <= k <= p-1",
         eval_aux_binom_p1);
    cong("SUM_ALT_INV", 2, 3,
         "sum_{k=1}^{(p-1)/2} (-1)^k/k == -q_p(2) + (p/2)q_p(2)^2 - "
         "(-1)^((p-1)/2) p E_{p-3}  (mod p^2)",
         eval_sum_alt_inv);
    cong("SUM_ALT_INV2", 1, 5,
         "sum_{k=1}^{(p-1)/2} (-1)^k/k^2 == 2(-1)^((p-1)/2)E_{p-3}  (mod p)",
         eval_sum_alt_inv2);
    cong("H_HALF", 1, 3, "H_{(p-1)/2} == -2 q_p(2)  (mod p)", eval_h_half);
    cong("H2_HALF", 1, 3, "H^(2)_{(p-1)/2} == 0  (mod p)", eval_h2_half);
    cong("BINOM_TRANSFER", 1, 3,
         "C(2k,k) == C((p-1)/2,k)(-4)^k  (mod p) for 0 <= k <= (p-1)/2",
         eval_binom_transfer);
    cong("MORLEY", 3, 3,
         "C(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1)  (mod p^3)", eval_morley);
    cong("LEM_3_2", 4, 3,
         "F((p-1)/2,(p-1)/2) == (-1)^((p-1)/2) p (1 - p q_p(2) + "
         "p^2 q_p(2)^2)  (mod p^4)",
         eval_lem_3_2);
    cong("LEM_3_3", 2, 3,
         "sum_{k=1}^{(p-1)/2} C((p-1)/2,k)(-2)^k H_k == "
         "(-1)^((p-1)/2)(-q_p(2) + (p/2)q_p(2)^2) + p E_{p-3}  (mod p^2)",
         eval_lem_3_3);
    cong("LEM_3_4", 4, 3,
         "sum_{k=1}^{(p-1)/2} G((p+1)/2,k) == p(-2|p) + (p^3/4)(2|p)E_{p-3} "
         "- (-1)^((p-1)/2) p (1 - p q_p(2) + p^2 q_p(2)^2)  (mod p^4)",
         eval_lem_3_4);
    cong("TWO_POW_HALF", 3, 3,
         "2^((p-1)/2) == (2|p)(1 + (p/2)q_p(2) - (p^2/8)q_p(2)^2)  (mod p^3)",
         eval_two_pow_half);
    cong("AUX_ODD_PRODUCT", 3, 3,
         "(-2)^(k-1)((p+3)/2-k)_{k-1} == (2k-3)!! C((p-1)/2,k-1)(-4)^(k-1)"
         "/C(2k-2,k-1)  (mod p^3) for 1 <= k <= (p-1)/2",
         eval_aux_odd_product);
    cong("LEM_4_1", 4, 3,
         "F(p-1,p-1) == -3p^2(1 + 4p - 6p q_p(2))  (mod p^4)", eval_lem_4_1);
    cong("BINOM_4P", 2, 3, "C(4p-1,2p-1) == 3  (mod p^2)", eval_binom_4p);
    cong("LEM_4_3_A", 1, 3,
         "sum_{k=1}^{(p-1)/2} 8^k/(k(2k-1)C(2k,k)) == (1/4)E_{p-3}(1/4)  "
         "(mod p)",
         eval_lem_4_3_a);
    cong("LEM_4_3_B", 1, 3,
         "(-2|p) sum_{k=1}^{(p-1)/2} 2^k/(k^2 C(2k,k)) == "
         "(1/4)E_{p-3}(1/4)  (mod p)",
         eval_lem_4_3_b);
    cong("LEM_4_4", 4, 3,
         "sum_{k=1}^{(p-1)/2} G(p,k) == (p^3/16)E_{p-3}(1/4)  (mod p^4)",
         eval_lem_4_4);
    cong("LEM_4_4_TERM", 4, 3,
         "G(p,k) == (p^3/4) 8^k/(k(2k-1)C(2k,k))  (mod p^4) for "
         "1 <= k <= (p-1)/2",
         eval_lem_4_4_term);
    cong("LEM_4_5", 4, 3,
         "G(p,(p+1)/2) == p(-2|p)(1 - (3p/2)q_p(2) + (15p^2/8)q_p(2)^2)  "
         "(mod p^4)",
         eval_lem_4_5);
    cong("LEM_4_6", 4, 3,
         "sum_{k=(p+3)/2}^{p-1} G(p,k) == (-2|p) 3p^2((1/2)q_p(2) - "
         "(5/8)p q_p(2)^2) + 3p^2(1 + 4p - 6p q_p(2))  (mod p^4)",
         eval_lem_4_6);
    cong("SIGMA_SUM_1", 2, 3,
         "sum_{k=1}^{(p-1)/2} C((p-1)/2,k)(-2)^k/k == q_p(2) - "
         "(p/2)q_p(2)^2 - p(-1)^((p-1)/2)E_{p-3}  (mod p^2)",
         eval_sigma_sum_1);
    cong("SIGMA_SUM_2", 1, 3,
         "sum_{k=1}^{(p-1)/2} C((p-1)/2,k)(-2)^k/k^2 == -(1/2)q_p(2)^2 + "
         "(-1)^((p-1)/2)E_{p-3}  (mod p)",
         eval_sigma_sum_2);
    cong("SIGMA_SUM_3", 1, 3,
         "sum_{k=1}^{(p-1)/2} C((p-1)/2,k)(-2)^k H_k/k == "
         "(-1)^((p-1)/2)E_{p-3}  (mod p)",
         eval_sigma_sum_3);

    ident("LEM_2_1_A", "n: upper summation index, n >= 1",
          "sum_{k=1}^{n} C(n,k)(-2)^k H_k^2 == (-1)^n (H^(2)_n/2 + H_n^2 - "
          "2 sum (-1)^k/k^2 - 2 H_n sum (-1)^k/k - (sum (-1)^k/k)^2/2 + "
          "3 sum (-1)^k H_k/k)",
          eval_lem_2_1_a);
    ident("LEM_2_1_B", "n: upper summation index, n >= 1",
          "sum_{k=1}^{n} C(n,k)(-2)^k H_k == (-1)^n H_n - "
          "(-1)^n sum_{k=1}^{n} (-1)^k/k",
          eval_lem_2_1_b);
    ident("SIGMA_ID_1", "n: upper summation index, n >= 1",
          "sum_{k=1}^{n} C(n,k)(-2)^k/k == -H_n + sum_{k=1}^{n} (-1)^k/k",
          eval_sigma_id_1);
    ident("SIGMA_ID_2", "n: upper summation index, n >= 1",
          "sum_{k=1}^{n} C(n,k)(-2)^k/k^2 == -H^(2)_n/2 - H_n^2/2 + "
          "sum_{k=1}^{n} (1/k) sum_{j=1}^{k} (-1)^j/j",
          eval_sigma_id_2);
    ident("SIGMA_ID_3", "n: upper summation index, n >= 1",
          "sum_{k=1}^{n} C(n,k)(-2)^k H_k/k == -H^(2)_n/2 - "
          "(sum (-1)^k/k)^2/2 + sum_{k=1}^{n} (-1)^k H_k/k",
          eval_sigma_id_3);
    ident("SUM_BINOM_P_HALF", "m: odd upper index, m >= 1",
          "sum_{k=1}^{(m-1)/2} C(m,k) == 2^(m-1) - 1 for odd m",
          eval_sum_binom_p_half);
    ident("POWER_SUM_RESIDUE_CLASS", "p: range bound, p >= 1",
          "sum_{x<p, x==r (mod 8)} x^k == (8^k/(k+1))(B_{k+1}(p/8 + "
          "{(r-p)/8}) - B_{k+1}({r/8})) for 0 <= r < 8, 0 <= k <= 3",
          eval_power_sum_residue_class);
    ident("WZ_RELATION", "n: grid row; checks k = 1..n+1",
          "F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k)", eval_wz_relation);
    ident("WZ_TELESCOPE_HALF", "m: odd range bound",
          "sum_{j=0}^{(m-1)/2} F(j,0) == F((m-1)/2,(m-1)/2) + "
          "sum_{k=1}^{(m-1)/2} G((m+1)/2,k)",
          eval_wz_telescope_half);
    ident("WZ_TELESCOPE_FULL", "m: range bound, m >= 1",
          "sum_{j=0}^{m-1} F(j,0) == F(m-1,m-1) + sum_{k=1}^{m-1} G(m,k)",
          eval_wz_telescope_full);
    ident("F_SUMMAND", "n: row index, n >= 0",
          "F(n,0) == (6n+1)C(2n,n)^3/(-512)^n", eval_f_summand);
    ident("G_REFORM", "n: grid row; checks k = 1..n",
          "G(n,k) equals its Pochhammer reformulation", eval_g_reform);
    return v;
  }();
  return entries;
}

inline const Entry& find_entry(const std::string& id) {
  static const std::unordered_map<std::string, std::size_t> index = [] {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < catalog().size(); ++i)
      m.emplace(catalog()[i].desc.id, i);
    return m;
  }();
  auto it = index.find(id);
  if (it == index.end()) raise(errc::unknown_check, "no check named " + id);
  return catalog()[it->second];
}

}  // namespace detail

inline std::vector<CheckDescriptor> registry_list() {
  std::vector<CheckDescriptor> out;
  out.reserve(detail::catalog().size());
  for (const auto& e : detail::catalog()) out.push_back(e.desc);
  return out;
}

namespace detail {

inline CheckReport run_entry(const Entry& entry, std::int64_t arg,
                             PrimeTables* tables) {
  CheckReport rep;
  rep.id = entry.desc.id;
  rep.p = arg;
  rep.exponent = entry.desc.exponent;
  auto t0 = std::chrono::steady_clock::now();
  if (entry.desc.kind == CheckKind::congruence) {
    if (arg <= entry.desc.min_p) {
      rep.status = CheckStatus::skip;
    } else {
      PrimeCtx ctx = make_ctx(arg, entry.desc.exponent);
      try {
        std::optional<PrimeTables> local;
        if (!tables) local.emplace(arg);
        Outcome oc = entry.congruence(ctx, tables ? *tables : *local);
        rep.status = oc.pass ? CheckStatus::pass : CheckStatus::fail;
        rep.lhs = std::move(oc.lhs);
        rep.rhs = std::move(oc.rhs);
      } catch (const arith_error& err) {
        // ill-posed term (e.g. a p left in a denominator): fail, don't crash
        rep.status = CheckStatus::fail;
        rep.lhs = std::string("error: ") + err.what();
      }
    }
  } else {
    Outcome oc = entry.identity(arg);
    rep.status = oc.pass ? CheckStatus::pass : CheckStatus::fail;
    rep.lhs = std::move(oc.lhs);
    rep.rhs = std::move(oc.rhs);
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace detail

/// Evaluate one congruence at an odd prime p (both sides mod p^e).
/// For an exact-identity id this forwards to evaluate_identity with p as
/// the sweep variable, so prime sweeps can treat all entries uniformly.
inline CheckReport evaluate_check(const std::string& id, std::int64_t p) {
  return detail::run_entry(detail::find_entry(id), p, nullptr);
}

/// Same, reusing per-prime tables shared across checks in a sweep.
inline CheckReport evaluate_check(const std::string& id, std::int64_t p,
                                  PrimeTables& tables) {
  return detail::run_entry(detail::find_entry(id), p, &tables);
}

/// Evaluate one exact identity at sweep variable n; both sides exact.
inline CheckReport evaluate_identity(const std::string& id, std::int64_t n) {
  const detail::Entry& e = detail::find_entry(id);
  if (e.desc.kind != CheckKind::exact_identity)
    raise(errc::unknown_check, id + " is not an exact identity");
  return detail::run_entry(e, n, nullptr);
}

}  // namespace supercong
