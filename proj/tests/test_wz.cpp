#include <catch2/catch.hpp>

#include <cstdint>
#include <map>
#include <utility>

#include "supercong/wz.hpp"

using namespace supercong;

namespace {

BigRat rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

// memoized term tables so the rectangle sums below stay cheap
struct Memo {
  wz::Engine eng;
  std::map<std::pair<std::int64_t, std::int64_t>, BigRat> fm, gm;
  const BigRat& f(std::int64_t n, std::int64_t k) {
    auto it = fm.find({n, k});
    if (it == fm.end()) it = fm.emplace(std::pair{n, k}, eng.f_term(n, k)).first;
    return it->second;
  }
  const BigRat& g(std::int64_t n, std::int64_t k) {
    auto it = gm.find({n, k});
    if (it == gm.end()) it = gm.emplace(std::pair{n, k}, eng.g_term(n, k)).first;
    return it->second;
  }
};

}  // namespace

TEST_CASE("f and g term values") {
  wz::Engine eng;
  CHECK(eng.f_term(0, 0) == BigRat(1));
  CHECK(eng.f_term(1, 0) == rat(-7, 64));
  CHECK(eng.f_term(0, 1) == BigRat(0));
  CHECK(eng.f_term(1, 1) == rat(15, 16));
  CHECK(eng.g_term(0, 0) == BigRat(0));
  CHECK(eng.g_term(0, 3) == BigRat(0));
  CHECK(eng.g_term(1, 1) == BigRat(1));
  CHECK(eng.g_term(2, 1) == rat(-3, 64));
}

TEST_CASE("f and g vanish above the diagonal") {
  wz::Engine eng;
  for (std::int64_t k = 1; k <= 25; ++k)
    for (std::int64_t n = 0; n < k; ++n) {
      REQUIRE(eng.f_term(n, k) == BigRat(0));
      REQUIRE(eng.g_term(n, k) == BigRat(0));
    }
}

TEST_CASE("pair relation holds on the grid") {
  wz::Engine eng;
  wz::SideValues w = eng.pair_check(1, 1);
  CHECK(w.equal);
  CHECK(w.lhs == rat(-67, 64));
  CHECK(w.rhs == rat(-67, 64));
  wz::SideValues b = eng.pair_check(0, 1);
  CHECK(b.equal);
  CHECK(b.lhs == BigRat(1));
  for (std::int64_t n = 0; n + 1 <= 30; ++n)
    for (std::int64_t k = 1; k <= n + 1; ++k)
      REQUIRE(eng.pair_check(n, k).equal);
  CHECK_THROWS_AS(eng.pair_check(3, 0), arith_error);
}

TEST_CASE("half-range telescoping") {
  wz::Engine eng;
  wz::SideValues one = eng.telescope_half(1);
  CHECK(one.equal);
  CHECK(one.lhs == BigRat(1));
  wz::SideValues three = eng.telescope_half(3);
  CHECK(three.equal);
  CHECK(three.lhs == rat(57, 64));
  for (std::int64_t m = 5; m <= 41; m += 2) REQUIRE(eng.telescope_half(m).equal);
  CHECK_THROWS_AS(eng.telescope_half(4), arith_error);
}

TEST_CASE("full-range telescoping") {
  wz::Engine eng;
  CHECK(eng.telescope_full(1).equal);
  CHECK(eng.telescope_full(2).equal);
  for (std::int64_t m = 3; m <= 30; ++m) REQUIRE(eng.telescope_full(m).equal);
}

TEST_CASE("f summand closed form") {
  wz::Engine eng;
  CHECK(eng.f_summand(0).equal);
  CHECK(eng.f_summand(1).equal);
  CHECK(eng.f_summand(1).rhs == rat(-7, 64));
  for (std::int64_t n = 2; n <= 60; ++n) REQUIRE(eng.f_summand(n).equal);
}

TEST_CASE("g reformulation") {
  wz::Engine eng;
  wz::SideValues a = eng.g_reform(1, 1);
  CHECK(a.equal);
  CHECK(a.lhs == BigRat(1));
  wz::SideValues b = eng.g_reform(2, 1);
  CHECK(b.equal);
  CHECK(b.lhs == rat(-3, 64));
  for (std::int64_t n = 1; n <= 25; ++n)
    for (std::int64_t k = 1; k <= n; ++k) REQUIRE(eng.g_reform(n, k).equal);
  CHECK_THROWS_AS(eng.g_reform(2, 3), arith_error);
}

TEST_CASE("denominator of F(n,0) divides 2^(9n)") {
  wz::Engine eng;
  for (std::int64_t n = 0; n <= 100; ++n) {
    BigRat f = eng.f_term(n, 0);
    BigInt d = f.get_den();
    BigInt two_pow = pow2(9 * n);
    REQUIRE(two_pow % d == 0);
  }
}

TEST_CASE("rectangle sums of the pair relation reproduce the telescoping") {
  Memo memo;
  for (std::int64_t m = 1; m <= 99; m += 2) {
    std::int64_t h = (m - 1) / 2;
    BigRat sum_lhs(0), sum_rhs(0);
    for (std::int64_t k = 1; k <= h; ++k)
      for (std::int64_t n = 0; n <= h; ++n) {
        sum_lhs += memo.f(n, k - 1) - memo.f(n, k);
        sum_rhs += memo.g(n + 1, k) - memo.g(n, k);
      }
    REQUIRE(sum_lhs == sum_rhs);
    wz::SideValues t = memo.eng.telescope_half(m);
    REQUIRE(t.equal);
    BigRat corner = memo.f(h, h);
    REQUIRE(sum_lhs == t.lhs - corner);
    REQUIRE(sum_rhs == t.rhs - corner);
  }
}
