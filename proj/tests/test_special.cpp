#include <catch2/catch.hpp>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "supercong/rational.hpp"
#include "supercong/special.hpp"

using namespace supercong;

namespace {

const std::vector<std::int64_t> kSmallPrimes{5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61,
                                             67, 71, 73, 79, 83, 89, 97};

// frozen classical values
const std::vector<std::int64_t> kEuler{1, 0, -1, 0, 5, 0, -61, 0, 1385, 0,
                                       -50521};

std::vector<BigRat> frozen_bernoulli() {
  return {BigRat(1),
          make_rat(BigInt(-1), BigInt(2)),
          make_rat(BigInt(1), BigInt(6)),
          BigRat(0),
          make_rat(BigInt(-1), BigInt(30)),
          BigRat(0),
          make_rat(BigInt(1), BigInt(42)),
          BigRat(0),
          make_rat(BigInt(-1), BigInt(30)),
          BigRat(0),
          make_rat(BigInt(5), BigInt(66))};
}

}  // namespace

TEST_CASE("euler numbers mod p") {
  EulerTable t = euler_numbers_mod_p(7, 4);
  CHECK(t.values == std::vector<std::int64_t>{1, 0, 6, 0, 5});
  CHECK(euler_numbers_mod_p(11, 5).values[1] == 0);
  CHECK(euler_numbers_mod_p(5, 2).values[2] == 4);  // E_2 = -1
  CHECK_THROWS_AS(euler_numbers_mod_p(7, 5), arith_error);  // n_max > p-3
}

TEST_CASE("euler tables match the classical integers") {
  for (std::int64_t p : kSmallPrimes) {
    EulerTable t = euler_numbers_mod_p(p, p - 3);
    for (std::size_t n = 0;
         n < kEuler.size() && n + 3 <= static_cast<std::size_t>(p); ++n)
      REQUIRE(t.values[n] == ((kEuler[n] % p) + p) % p);
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(p - 3, 40); ++n)
      REQUIRE(residue_of_bigint(euler_exact(n), make_ctx(p, 1)).value() ==
              t.values[n]);
  }
}

TEST_CASE("bernoulli numbers mod p") {
  BernoulliTable t = bernoulli_numbers_mod_p(7, 4);
  CHECK(t.values == std::vector<std::int64_t>{1, 3, 6, 0, 3});
  CHECK(bernoulli_numbers_mod_p(11, 9).values[3] == 0);
  CHECK(bernoulli_numbers_mod_p(11, 9).values[5] == 0);
  CHECK_THROWS_AS(bernoulli_numbers_mod_p(5, 4), arith_error);
}

TEST_CASE("exact bernoulli numbers and mutual cross-check") {
  std::vector<BigRat> frozen = frozen_bernoulli();
  for (std::size_t n = 0; n < frozen.size(); ++n)
    REQUIRE(bernoulli_exact(n) == frozen[n]);
  for (std::int64_t p : {5, 7, 11, 13, 31, 61, 97}) {
    BernoulliTable t = bernoulli_numbers_mod_p(p, p - 2);
    PrimeCtx c = make_ctx(p, 1);
    for (std::int64_t n = 0; n <= p - 2; ++n)
      REQUIRE(rational_to_residue(bernoulli_exact(n), c).value() ==
              t.values[n]);
  }
}

TEST_CASE("bernoulli polynomial mod p") {
  CHECK(bernoulli_poly_mod_p(2, 1, 2, 7).value() == 4);  // B_2(1/2) = -1/12
  for (std::int64_t n = 0; n <= 9; ++n)
    CHECK(bernoulli_poly_mod_p(n, 0, 1, 11).value() ==
          bernoulli_numbers_mod_p(11, n).values[n]);
  CHECK(bernoulli_poly_mod_p(3, 5, 8, 11) ==
        rational_to_residue(make_rat(BigInt(-15), BigInt(512)),
                            make_ctx(11, 1)));
}

TEST_CASE("euler polynomial mod p") {
  // E_2(x) = x^2 - x, so E_2(1/4) = -3/16
  for (std::int64_t p : {7, 11, 13}) {
    CHECK(euler_poly_mod_p(2, 1, 4, p) ==
          rational_to_residue(make_rat(BigInt(-3), BigInt(16)),
                              make_ctx(p, 1)));
  }
  PrimeCtx c7 = make_ctx(7, 1);
  CHECK((euler_poly_mod_p(2, 1, 2, 7) * Residue(4, c7)).value() == 6);
  CHECK(euler_poly_mod_p(0, 3, 5, 11).value() == 1);
  CHECK_THROWS_AS(euler_poly_mod_p(3, 1, 4, 5), arith_error);  // n+1 > p-2
}

TEST_CASE("exact bernoulli polynomial values") {
  BigRat half = make_rat(BigInt(1), BigInt(2));
  CHECK(bernoulli_poly_exact(2, half) == make_rat(BigInt(-1), BigInt(12)));
  CHECK(bernoulli_poly_exact(0, make_rat(BigInt(17), BigInt(3))) == BigRat(1));
  CHECK(bernoulli_poly_exact(3, make_rat(BigInt(1), BigInt(8))) ==
        make_rat(BigInt(21), BigInt(512)));
}

TEST_CASE("bernoulli polynomial reflection") {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (int num : {0, 1, 2, 3, 4}) {
      BigRat x = make_rat(BigInt(num), BigInt(8));
      BigRat lhs = bernoulli_poly_exact(n, BigRat(1) - x);
      BigRat rhs = bernoulli_poly_exact(n, x);
      if (n & 1) rhs = -rhs;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("bernoulli polynomial translation") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (int xd : {2, 4}) {
      for (int yd : {2, 4}) {
        BigRat x = make_rat(BigInt(1), BigInt(xd));
        BigRat y = make_rat(BigInt(1), BigInt(yd));
        BigRat lhs = bernoulli_poly_exact(n, x + y);
        BigRat rhs(0), xp(1);
        for (std::int64_t k = 0; k <= n; ++k) {
          BigInt c;
          mpz_bin_uiui(c.get_mpz_t(), n, k);
          rhs += BigRat(c) * bernoulli_poly_exact(n - k, y) * xp;
          xp *= x;
        }
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("modular and exact polynomial evaluation agree") {
  for (std::int64_t p : kSmallPrimes) {
    PrimeCtx c = make_ctx(p, 1);
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(p - 2, 24); ++n) {
      for (auto [num, den] :
           {std::pair<int, int>{0, 1}, {1, 2}, {3, 4}, {5, 8}}) {
        REQUIRE(bernoulli_poly_mod_p(n, num, den, p) ==
                rational_to_residue(
                    bernoulli_poly_exact(n, make_rat(BigInt(num), BigInt(den))),
                    c));
      }
    }
  }
}

TEST_CASE("euler polynomial at 1/2 recovers euler numbers") {
  for (std::int64_t p : kSmallPrimes) {
    EulerTable t = euler_numbers_mod_p(p, p - 3);
    PrimeCtx c = make_ctx(p, 1);
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(p - 3, 20); n += 2)
      REQUIRE((euler_poly_mod_p(n, 1, 2, p) * pow(Residue(2, c), n)).value() ==
              t.values[n]);
  }
}

TEST_CASE("residue-class power sums match the bernoulli closed form") {
  for (std::int64_t p : kSmallPrimes) {
    for (std::int64_t r = 0; r < 8; ++r) {
      for (std::int64_t k = 0; k <= 3; ++k) {
        BigInt brute(0);
        for (std::int64_t x = r; x < p; x += 8) {
          BigInt xp(1);
          for (std::int64_t i = 0; i < k; ++i) xp *= x;
          brute += xp;
        }
        BigRat hi = bernoulli_poly_exact(
            k + 1, make_rat(BigInt(p), BigInt(8)) +
                       make_rat(BigInt(((r - p) % 8 + 8) % 8), BigInt(8)));
        BigRat lo = bernoulli_poly_exact(k + 1, make_rat(BigInt(r), BigInt(8)));
        BigInt mk(1);
        for (std::int64_t i = 0; i < k; ++i) mk *= 8;
        REQUIRE(BigRat(brute) == make_rat(mk, BigInt(k + 1)) * (hi - lo));
      }
    }
  }
}
