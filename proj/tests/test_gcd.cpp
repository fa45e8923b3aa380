#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "consarith/gcd.hpp"
#include "oracle.hpp"

using namespace consarith;

TEST_CASE("three gcds agree with std::gcd on a small exhaustive grid") {
  for (UnaryNat a = 1; a <= 160; ++a) {
    for (UnaryNat b = 1; b <= 160; ++b) {
      UnaryNat expect = std::gcd(a, b);
      if (natGcd(a, b) != expect) REQUIRE(natGcd(a, b) == expect);
      BinPos pa = natToPos(a), pb = natToPos(b);
      if (posToNat(steinGcd(pa, pb)) != expect)
        REQUIRE(posToNat(steinGcd(pa, pb)) == expect);
      if (posToNat(euclidGcdBin(pa, pb)) != expect)
        REQUIRE(posToNat(euclidGcdBin(pa, pb)) == expect);
    }
  }
  CHECK(natGcd(0, 12) == 12);
  CHECK(natGcd(12, 0) == 12);
  CHECK(natGcd(0, 0) == 0);
}

TEST_CASE("binary gcd matches the oracle on wide inputs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    BinPos a = oracle::randPos(rng, 1 + rng() % 512);
    BinPos b = oracle::randPos(rng, 1 + rng() % 512);
    CHECK(oracle::toMpz(steinGcd(a, b)) ==
          oracle::gcd(oracle::toMpz(a), oracle::toMpz(b)));
  }
  // Force a large shared power of two and a large odd common factor.
  BinPos f = oracle::randPos(rng, 200);
  BinPos a = mulBin(f, oracle::randPos(rng, 100)).shl(37);
  BinPos b = mulBin(f, oracle::randPos(rng, 90)).shl(21);
  CHECK(oracle::toMpz(steinGcd(a, b)) ==
        oracle::gcd(oracle::toMpz(a), oracle::toMpz(b)));
}

TEST_CASE("euclidean gcd equals the binary one on wide inputs") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    BinPos a = oracle::randPos(rng, 1 + rng() % 400);
    BinPos b = oracle::randPos(rng, 1 + rng() % 400);
    CHECK(euclidGcdBin(a, b) == steinGcd(a, b));
  }
}

TEST_CASE("floor division by descent") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    BinPos q = oracle::randPos(rng, 1 + rng() % 128);
    BinPos p = add(mulBin(q, oracle::randPos(rng, 1 + rng() % 64)),
                   oracle::randPos(rng, 1 + rng() % 32));
    mpz_class zp = oracle::toMpz(p), zq = oracle::toMpz(q);
    if (zp < zq) continue;
    mpz_class want = zp / zq;
    CHECK(oracle::toMpz(floorDiv(p, q)) == want);
  }
  CHECK(floorDiv(BinPos(7), BinPos(7)) == BinPos(1));
  CHECK_THROWS_AS(floorDiv(BinPos(6), BinPos(7)), std::domain_error);
}

TEST_CASE("divisibility tests and the division witness") {
  CHECK(natDivides(3, 12));
  CHECK(!natDivides(5, 12));
  CHECK(natDivides(1, 1));
  CHECK(natDivides(7, 0));   // nothing to cover
  CHECK(!natDivides(0, 12));
  CHECK(natDivides(0, 0));
  CHECK(posDivides(BinPos(3), BinPos(12)));
  CHECK(!posDivides(BinPos(5), BinPos(12)));
  CHECK(posDivides(BinPos(1), BinPos(7)));
  CHECK(divWitness(BinPos(3), BinPos(12)) == BinPos(4));
  CHECK(divWitness(BinPos(7), BinPos(7)) == BinPos(1));
  CHECK_THROWS_AS(divWitness(BinPos(5), BinPos(12)), std::domain_error);
  CHECK_THROWS_AS(divWitness(BinPos(12), BinPos(5)), std::domain_error);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    BinPos d = oracle::randPos(rng, 1 + rng() % 64);
    BinPos k = oracle::randPos(rng, 1 + rng() % 64);
    CHECK(posDivides(d, mulBin(d, k)));
    CHECK(divWitness(d, mulBin(d, k)) == k);
  }
}
