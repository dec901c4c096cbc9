#include <catch2/catch.hpp>

#include <cstdint>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/rational.hpp"

using namespace supercong;

namespace {

// deterministic 64-bit generator for property-style sampling
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
};

bool throws_with(errc code, void (*fn)()) {
  try {
    fn();
  } catch (const arith_error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("make_ctx validates and builds p^e") {
  PrimeCtx c = make_ctx(5, 4);
  CHECK(c.m == 625);
  CHECK(make_ctx(3, 2).m == 9);
  CHECK(throws_with(errc::composite_p, [] { make_ctx(4, 2); }));
  CHECK(throws_with(errc::composite_p, [] { make_ctx(2, 1); }));
  CHECK(throws_with(errc::overflow, [] { make_ctx(65537, 4); }));
  CHECK(throws_with(errc::out_of_range, [] { make_ctx(5, 0); }));
  CHECK(throws_with(errc::out_of_range, [] { make_ctx(5, 9); }));
}

TEST_CASE("residue_of_int canonical lift") {
  CHECK(residue_of_int(-1, make_ctx(5, 2)).value() == 24);
  CHECK(residue_of_int(625, make_ctx(5, 4)).value() == 0);
  // C(9,4) = 126 == 1 mod 125
  CHECK(residue_of_int(126, make_ctx(5, 3)).value() == 1);
}

TEST_CASE("residue ring arithmetic") {
  PrimeCtx c25 = make_ctx(5, 2);
  PrimeCtx c625 = make_ctx(5, 4);
  CHECK((Residue(3, c25) + Residue(24, c25)).value() == 2);
  CHECK((Residue(24, c25) * Residue(24, c25)).value() == 1);
  CHECK((Residue(0, c625) - Residue(7, c625)).value() == 618);
  CHECK(throws_with(errc::ctx_mismatch, [] {
    PrimeCtx a = make_ctx(5, 2), b = make_ctx(5, 3);
    (void)(Residue(1, a) + Residue(1, b));
  }));
}

TEST_CASE("inverse by extended Euclid") {
  CHECK(inverse(Residue(4, make_ctx(5, 4))).value() == 469);
  CHECK(inverse(Residue(8, make_ctx(5, 2))).value() == 22);
  CHECK(throws_with(errc::not_a_unit,
                    [] { inverse(Residue(5, make_ctx(5, 4))); }));
}

TEST_CASE("inverse is exhaustive for small moduli") {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (int e = 1; e <= 4; ++e) {
      PrimeCtx c = make_ctx(p, e);
      for (std::int64_t a = 1; a < c.m; ++a) {
        if (a % p == 0) continue;
        REQUIRE((Residue(a, c) * inverse(Residue(a, c))).value() == 1);
      }
    }
  }
}

TEST_CASE("pow square-and-multiply") {
  PrimeCtx c = make_ctx(5, 4);
  CHECK(pow(Residue(2, c), 4).value() == 16);
  CHECK(pow(Residue(2, make_ctx(5, 2)), 4).value() == 16);
  CHECK(pow(Residue(123, c), 0).value() == 1);
}

TEST_CASE("legendre symbol by Euler criterion") {
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(-2, 5) == -1);
  CHECK(legendre_symbol(10, 5) == 0);
}

TEST_CASE("legendre symbol is multiplicative and chi(-1) matches parity") {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                         59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    CHECK(legendre_symbol(-1, p) == (((p - 1) / 2) % 2 == 0 ? 1 : -1));
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; b += 3)
        REQUIRE(legendre_symbol(a * b, p) ==
                legendre_symbol(a, p) * legendre_symbol(b, p));
  }
}

TEST_CASE("factored_of_int splits out the p part") {
  PrimeCtx c = make_ctx(5, 2);
  FactoredResidue f = factored_of_int(20, c);
  CHECK(f.unit().value() == 4);
  CHECK(f.val() == 1);
  FactoredResidue g = factored_of_int(-7, c);
  CHECK(g.unit().value() == 18);
  CHECK(g.val() == 0);
  CHECK(throws_with(errc::zero_input,
                    [] { factored_of_int(0, make_ctx(5, 2)); }));
}

TEST_CASE("factored multiply and divide are exact") {
  PrimeCtx c = make_ctx(5, 2);
  FactoredResidue u = factored_of_int(20, c);
  FactoredResidue self = u / u;
  CHECK(self.unit().value() == 1);
  CHECK(self.val() == 0);
  FactoredResidue sq = u * u;
  CHECK(sq.unit().value() == 16);
  CHECK(sq.val() == 2);
  FactoredResidue q = factored_of_int(3, c) / factored_of_int(50, c);
  CHECK(q.val() == -2);
  CHECK(q.unit().value() == (Residue(3, c) * inverse(Residue(2, c))).value());
}

TEST_CASE("factored to residue") {
  PrimeCtx c625 = make_ctx(5, 4);
  CHECK(to_residue(FactoredResidue(Residue(2, c625), 2)).value() == 50);
  PrimeCtx c25 = make_ctx(5, 2);
  CHECK(to_residue(FactoredResidue(Residue(3, c25), 0)).value() == 3);
  CHECK(to_residue(FactoredResidue(Residue(3, c25), 5)).value() == 0);
  CHECK(throws_with(errc::negative_valuation, [] {
    to_residue(FactoredResidue(Residue(3, make_ctx(5, 2)), -1));
  }));
}

TEST_CASE("round trip int -> factored -> residue") {
  Lcg rng;
  std::vector<std::int64_t> primes{5, 7, 11, 13, 31, 61, 97};
  for (std::int64_t p : primes) {
    for (int e = 1; e <= 4; ++e) {
      PrimeCtx c = make_ctx(p, e);
      for (std::int64_t z = 1; z <= 2000; ++z) {
        REQUIRE(to_residue(factored_of_int(z, c)) == residue_of_int(z, c));
        REQUIRE(to_residue(factored_of_int(-z, c)) == residue_of_int(-z, c));
      }
      for (int i = 0; i < 500; ++i) {
        std::int64_t z = static_cast<std::int64_t>(rng.next() % 1000000) + 1;
        REQUIRE(to_residue(factored_of_int(z, c)) == residue_of_int(z, c));
        REQUIRE(to_residue(factored_of_int(-z, c)) == residue_of_int(-z, c));
      }
    }
  }
}

TEST_CASE("factorial_factored values and recurrence") {
  PrimeCtx c = make_ctx(5, 2);
  FactoredResidue f10 = factorial_factored(10, c);
  CHECK(f10.unit().value() == 2);  // 3628800 = 25 * 145152, 145152 % 25 = 2
  CHECK(f10.val() == 2);
  FactoredResidue f0 = factorial_factored(0, c);
  CHECK(f0.unit().value() == 1);
  CHECK(f0.val() == 0);
  FactoredResidue f4 = factorial_factored(4, c);
  CHECK(f4.unit().value() == 24);
  CHECK(f4.val() == 0);

  PrimeCtx c7 = make_ctx(7, 3);
  FactoredResidue acc = factorial_factored(0, c7);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    acc *= factored_of_int(n, c7);
    if (n % 97 == 0 || n <= 50) REQUIRE(acc == factorial_factored(n, c7));
  }
}

TEST_CASE("binomial_factored matches Pascal oracle") {
  PrimeCtx c52 = make_ctx(5, 2);
  CHECK(binomial_factored(10, 5, c52).unit().value() == 2);  // 252 % 25
  CHECK(binomial_factored(10, 5, c52).val() == 0);
  CHECK(binomial_factored(6, 3, c52).unit().value() == 4);  // 20 = 5*4
  CHECK(binomial_factored(6, 3, c52).val() == 1);
  PrimeCtx c53 = make_ctx(5, 3);
  CHECK(binomial_factored(9, 4, c53).unit().value() == 1);  // 126 % 125
  CHECK(binomial_factored(9, 4, c53).val() == 0);
  CHECK(throws_with(errc::out_of_range,
                    [] { binomial_factored(3, 5, make_ctx(5, 2)); }));

  for (const PrimeCtx& c :
       {make_ctx(5, 2), make_ctx(7, 3), make_ctx(13, 2), make_ctx(3, 4)}) {
    // Pascal's triangle mod p^e, additions only
    std::vector<std::vector<std::int64_t>> row{{1}};
    for (std::int64_t a = 0; a <= 60; ++a) {
      for (std::int64_t b = 0; b <= a; ++b)
        REQUIRE(to_residue(binomial_factored(a, b, c)).value() ==
                row[a][b]);
      std::vector<std::int64_t> next(a + 2, 1);
      for (std::int64_t b = 1; b <= a; ++b)
        next[b] = (row[a][b - 1] + row[a][b]) % c.m;
      row.push_back(std::move(next));
    }
  }
}

TEST_CASE("rising factorial of a rational") {
  PrimeCtx c52 = make_ctx(5, 2);
  FactoredResidue r = rising_factorial_rational(1, 2, 3, c52);
  CHECK(r.unit().value() == 16);  // (1/2)_3 = 15/8 = 5 * 3/8, 3*inv(8) = 16
  CHECK(r.val() == 1);
  FactoredResidue e = rising_factorial_rational(9, 7, 0, c52);
  CHECK(e.unit().value() == 1);
  CHECK(e.val() == 0);
  FactoredResidue m = rising_factorial_rational(-1, 2, 1, make_ctx(7, 1));
  CHECK(m.unit().value() == 3);
  CHECK(m.val() == 0);
  CHECK(throws_with(errc::not_a_unit, [] {
    rising_factorial_rational(1, 5, 2, make_ctx(5, 2));
  }));
  CHECK(throws_with(errc::zero_factor, [] {
    rising_factorial_rational(-2, 1, 3, make_ctx(5, 2));
  }));
}

TEST_CASE("rising (1/2)_k equals (2k)!/(4^k k!)") {
  for (const PrimeCtx& c : {make_ctx(5, 2), make_ctx(7, 4)}) {
    for (std::int64_t k = 0; k <= 50; ++k) {
      FactoredResidue lhs = rising_factorial_rational(1, 2, k, c);
      FactoredResidue four_k = FactoredResidue(pow(Residue(4, c), k), 0);
      FactoredResidue rhs = factorial_factored(2 * k, c) /
                            (four_k * factorial_factored(k, c));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("harmonic sums") {
  CHECK(harmonic_sum(4, 1, false, make_ctx(5, 2)).value() == 0);
  CHECK(harmonic_sum(2, 1, false, make_ctx(7, 1)).value() == 5);
  CHECK(harmonic_sum(2, 1, true, make_ctx(7, 1)).value() == 3);
  CHECK(harmonic_sum(0, 1, false, make_ctx(7, 1)).value() == 0);
  CHECK(throws_with(errc::not_a_unit,
                    [] { harmonic_sum(7, 1, false, make_ctx(7, 2)); }));

  // exact-rational oracle across orders and signs
  for (const PrimeCtx& c : {make_ctx(11, 3), make_ctx(13, 1)}) {
    for (int order : {1, 2}) {
      for (bool alt : {false, true}) {
        BigRat exact(0);
        for (std::int64_t n = 1; n < c.p; ++n) {
          BigRat term = make_rat(BigInt(1), BigInt(order == 2 ? n * n : n));
          exact += (alt && (n & 1)) ? -term : term;
          REQUIRE(harmonic_sum(n, order, alt, c) ==
                  rational_to_residue(exact, c));
        }
      }
    }
  }
}

TEST_CASE("fermat quotient") {
  CHECK(fermat_quotient(2, make_ctx(5, 1)).value() == 3);
  CHECK(fermat_quotient(2, make_ctx(7, 1)).value() == 2);
  CHECK(fermat_quotient(2, make_ctx(7, 2)).value() == 9);
  CHECK(fermat_quotient(2, make_ctx(5, 3)).value() == 3);
  CHECK(fermat_quotient(1, make_ctx(7, 2)).value() == 0);
  CHECK(throws_with(errc::not_a_unit,
                    [] { fermat_quotient(10, make_ctx(5, 2)); }));
}

TEST_CASE("rational_to_residue") {
  CHECK(rational_to_residue(make_rat(BigInt(25), BigInt(12)), make_ctx(5, 2))
            .value() == 0);
  PrimeCtx c = make_ctx(5, 4);
  Residue want = Residue(-7, c) * inverse(Residue(64, c));
  CHECK(rational_to_residue(make_rat(BigInt(-7), BigInt(64)), c) == want);
  CHECK(throws_with(errc::negative_valuation, [] {
    rational_to_residue(make_rat(BigInt(1), BigInt(5)), make_ctx(5, 1));
  }));
  CHECK(rational_to_residue(BigRat(0), c).value() == 0);
}
