#include <doctest.h>

#include <stdexcept>

#include "consarith/bench.hpp"
#include "consarith/binpos.hpp"
#include "oracle.hpp"

using namespace consarith;

TEST_CASE("decimal parse and print round-trip") {
  CHECK(printDecimal(parseDecimal("1")) == "1");
  CHECK(printDecimal(parseDecimal("18446744073709551616")) == "18446744073709551616");
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    std::string s = randomDecimal(rng, 100);
    BinPos p = parseDecimal(s);
    CHECK(printDecimal(p) == s);
    CHECK(oracle::decimal(oracle::toMpz(p)) == s);
    CHECK(parseDecimal(printDecimal(p)) == p);
  }
}

TEST_CASE("decimal parsing rejects non-numerals") {
  CHECK_THROWS_AS(parseDecimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parseDecimal("0"), std::invalid_argument);
  CHECK_THROWS_AS(parseDecimal("00"), std::invalid_argument);
  CHECK_THROWS_AS(parseDecimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parseDecimal("-5"), std::invalid_argument);
  CHECK(parseDecimal("007") == BinPos(7));  // leading zeros are just digits
}

TEST_CASE("arithmetic agrees with the oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::size_t ba = 1 + rng() % 256, bb = 1 + rng() % 256;
    BinPos a = oracle::randPos(rng, ba), b = oracle::randPos(rng, bb);
    mpz_class za = oracle::toMpz(a), zb = oracle::toMpz(b);
    CHECK(oracle::toMpz(add(a, b)) == za + zb);
    CHECK(oracle::toMpz(mulBin(a, b)) == za * zb);
    CHECK((cmp(a, b) < 0) == (za < zb));
    CHECK((cmp(a, b) == 0) == (za == zb));
    if (b < a) CHECK(oracle::toMpz(subStrict(a, b)) == za - zb);
  }
  // A couple of big ones to cross limb boundaries heavily.
  BinPos a = oracle::randPos(rng, 7001), b = oracle::randPos(rng, 6400);
  CHECK(oracle::toMpz(mulBin(a, b)) == oracle::toMpz(a) * oracle::toMpz(b));
  CHECK(oracle::toMpz(subStrict(a, b)) == oracle::toMpz(a) - oracle::toMpz(b));
}

TEST_CASE("strict subtraction refuses a non-positive difference") {
  CHECK_THROWS_AS(subStrict(BinPos(5), BinPos(5)), std::domain_error);
  CHECK_THROWS_AS(subStrict(BinPos(5), BinPos(9)), std::domain_error);
}

TEST_CASE("digit constructors and observers") {
  BinPos one(1);
  CHECK(one.isOne());
  CHECK(!one.isEven());
  CHECK(one.s0() == BinPos(2));
  CHECK(one.s1() == BinPos(3));
  CHECK(BinPos(6).isEven());
  CHECK(posLog(BinPos(6)) == 2);  // 6 = S0 (S1 1)
  CHECK(posLog(BinPos(1)) == 0);
  CHECK(BinPos::pow2(100).bitLength() == 101);
  CHECK(BinPos(40).trailingZeros() == 3);
  CHECK(BinPos(40).shr(3) == BinPos(5));
  CHECK(BinPos(5).shl(3) == BinPos(40));
  CHECK(BinPos(5).bit(0));
  CHECK(!BinPos(5).bit(1));
  CHECK(BinPos(5).bit(2));
  CHECK_THROWS_AS(BinPos(5).shr(3), std::domain_error);
  CHECK_THROWS_AS(BinPos(0), std::domain_error);
}

TEST_CASE("conversions between numerals and nat counters") {
  for (UnaryNat n = 1; n <= (1u << 16); ++n) {
    if (posToNat(natToPos(n)) != n) {
      REQUIRE(posToNat(natToPos(n)) == n);
    }
  }
  CHECK_THROWS_AS(natToPos(0), std::domain_error);
  CHECK_THROWS_AS(posToNat(BinPos::pow2(64)), std::domain_error);
  CHECK(posToNat(BinPos::pow2(63)) == (UnaryNat{1} << 63));
  // The embedding respects the arithmetic.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    UnaryNat a = 1 + rng() % 100000, b = 1 + rng() % 100000;
    CHECK(posToNat(add(natToPos(a), natToPos(b))) == a + b);
    CHECK(posToNat(mulBin(natToPos(a), natToPos(b))) == a * b);
  }
}
