#include <doctest.h>

#include <cmath>

#include "consarith/isqrt.hpp"
#include "oracle.hpp"

using namespace consarith;

TEST_CASE("rounded-up nat square root, exhaustively small") {
  CHECK(natSqrtCeil(0) == 0);
  CHECK(natSqrtCeil(1) == 1);
  CHECK(natSqrtCeil(2) == 2);
  for (UnaryNat n = 0; n <= 4096; ++n) {
    UnaryNat r = natSqrtCeil(n);
    CHECK(r * r >= n);
    if (r > 0) CHECK((r - 1) * (r - 1) < n);
  }
}

TEST_CASE("floor square root by descent matches the oracle") {
  for (UnaryNat v = 1; v <= 4096; ++v) {
    BinPos p = natToPos(v);
    CHECK(oracle::toMpz(posSqrtFloor(p)) == oracle::isqrt(oracle::toMpz(p)));
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    BinPos p = oracle::randPos(rng, 1 + rng() % 300);
    CHECK(oracle::toMpz(posSqrtFloor(p)) == oracle::isqrt(oracle::toMpz(p)));
  }
}

TEST_CASE("floor square root uses exactly half-log-plus-one probes") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    BinPos p = oracle::randPos(rng, 1 + rng() % 200);
    UnaryNat probes = 0;
    posSqrtFloor(p, &probes);
    CHECK(probes == posLog(p) / 2 + 1);
  }
}

TEST_CASE("digit-pair square root equals the descent version") {
  CHECK(fastSqrt(BinPos(1)) == BinPos(1));
  CHECK(fastSqrt(BinPos(2)) == BinPos(1));
  CHECK(fastSqrt(BinPos(3)) == BinPos(1));
  CHECK(fastSqrt(BinPos(4)) == BinPos(2));
  CHECK(fastSqrt(BinPos(9)) == BinPos(3));
  for (UnaryNat v = 1; v <= 1 << 16; ++v) {
    BinPos p = natToPos(v);
    if (fastSqrt(p) != posSqrtFloor(p)) {
      REQUIRE(fastSqrt(p) == posSqrtFloor(p));
    }
  }
}

TEST_CASE("square root sandwich on wide inputs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    BinPos p = oracle::randPos(rng, 256);
    BinPos s = fastSqrt(p);
    CHECK(mulBin(s, s) <= p);
    BinPos s1 = addSmall(s, 1);
    CHECK(p < mulBin(s1, s1));
    CHECK(s == posSqrtFloor(p));
  }
}

TEST_CASE("square recognition") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    BinPos r = oracle::randPos(rng, 1 + rng() % 128);
    BinPos sq = mulBin(r, r);
    CHECK(isSquare(sq));
    CHECK(!isSquare(addSmall(sq, 1)));  // r^2 + 1 is never a square for r >= 1
  }
}
