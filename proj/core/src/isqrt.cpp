#include "consarith/isqrt.hpp"

#include "consarith/search.hpp"

namespace consarith {

UnaryNat natSqrtCeil(UnaryNat n) {
  return natLeast(n + 1, [n](UnaryNat m) {
    return (unsigned __int128)n <= (unsigned __int128)m * m;
  });
}

BinPos posSqrtFloor(const BinPos& p, UnaryNat* probes) {
  UnaryNat n = posLog(p) / 2 + 1;
  UnaryNat count = 0;
  BinPos r = posMonMax(
      [&](const BinPos& q) {
        ++count;
        return mulBin(q, q) <= p;
      },
      n);
  if (probes) *probes = count;
  return r;
}

BinPos fastSqrt(const BinPos& p) {
  std::size_t b = p.bitLength();
  // p >> 2K has one or two digits (value 1, 2 or 3), whose root is 1.
  std::size_t K = (b - 1) / 2;
  BinPos q(1);
  for (std::size_t k = K; k > 0; --k) {
    BinPos prefix = p.shr(2 * (k - 1));
    BinPos cand = q.s1();
    q = (mulBin(cand, cand) <= prefix) ? cand : q.s0();
  }
  return q;
}

bool isSquare(const BinPos& p) {
  BinPos s = fastSqrt(p);
  return mulBin(s, s) == p;
}

}  // namespace consarith
