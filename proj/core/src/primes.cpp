#include "consarith/primes.hpp"

#include <stdexcept>

#include "consarith/gcd.hpp"
#include "consarith/isqrt.hpp"
#include "consarith/search.hpp"

namespace consarith {

bool isComposedNat(UnaryNat n) {
  return exbNat(n, [&](UnaryNat m) { return 1 < m && natDivides(m, n); });
}

bool isPrimeNat(UnaryNat n) { return !isComposedNat(n) && n > 1; }

bool isComposedPos(const BinPos& p) {
  BinPos bound = posSqrtFloor(p);
  return exbPos(bound,
                [&](const BinPos& q) { return !q.isOne() && posDivides(q, p); });
}

bool isPrimePos(const BinPos& p) { return !isComposedPos(p) && !p.isOne(); }

BinPos leastFactor(const BinPos& p, bool oddStep) {
  if (p.isOne()) return BinPos(1);
  if (p.isEven()) return BinPos(2);
  BinPos s = posSqrtFloor(p);
  UnaryNat bound = posToNat(s);
  auto hits = [&](UnaryNat q) {
    BinPos qp = natToPos(q);
    return steinGcd(qp, p) == qp;
  };
  UnaryNat q;
  if (oddStep) {
    // p is odd, so even candidates can never divide; stepping by two keeps
    // the least hit unchanged.
    q = bound + 1;
    for (UnaryNat i = 3; i <= bound; i += 2) {
      if (hits(i)) {
        q = i;
        break;
      }
    }
  } else {
    q = natLeast(bound + 1, [&](UnaryNat i) { return 1 < i && hits(i); });
  }
  return q <= bound ? natToPos(q) : p;
}

BinPos prodSeq(const PosSeq& ps, UnaryNat n) {
  BinPos acc(1);
  for (UnaryNat i = 0; i < n; ++i) acc = mulBin(acc, ps(i));
  return acc;
}

BinPos newPrime(const PosSeq& ps, UnaryNat n) {
  return leastFactor(addSmall(prodSeq(ps, n), 1));
}

bool irreducibleSplitFirst(const BinPos& p, const BinPos& q0, const BinPos& q1) {
  if (!posDivides(p, mulBin(q0, q1)))
    throw std::domain_error("irreducibleSplit: p does not divide the product");
  return posDivides(p, q0);
}

UnaryNat primeIndexInProduct(const BinPos& p, const PosSeq& ps, UnaryNat n) {
  BinPos acc(1);
  for (UnaryNat i = 0; i < n; ++i) {
    acc = mulBin(acc, ps(i));
    if (posDivides(p, acc)) return i;
  }
  throw std::domain_error("primeIndexInProduct: p does not divide the product");
}

}  // namespace consarith
