#pragma once

#include "consarith/binpos.hpp"
#include "consarith/seq.hpp"

namespace consarith {

// n has a proper divisor strictly between 1 and n.
bool isComposedNat(UnaryNat n);
bool isPrimeNat(UnaryNat n);

// p has a divisor q with 1 < q <= floor(sqrt p); enough to decide primality.
bool isComposedPos(const BinPos& p);
bool isPrimePos(const BinPos& p);

// Least factor: 1 for 1, 2 for even numbers, otherwise the least q with
// 1 < q <= floor(sqrt p) and gcd(q, p) = q, falling back to p itself when
// the scan comes up empty (p is then prime). oddStep skips even candidates;
// the default scans every candidate.
BinPos leastFactor(const BinPos& p, bool oddStep = false);

// Product of the first n entries of ps (empty product = 1).
BinPos prodSeq(const PosSeq& ps, UnaryNat n);

// A prime dividing prodSeq(ps, n) + 1; outside any list of given primes.
BinPos newPrime(const PosSeq& ps, UnaryNat n);

// For prime p with p | q0*q1: which factor does p divide?
// true means p | q0, false means p | q1 (checked in that order).
bool irreducibleSplitFirst(const BinPos& p, const BinPos& q0, const BinPos& q1);

// Least i < n with p | ps(0)*...*ps(i). Requires p | prodSeq(ps, n);
// throws std::domain_error otherwise.
UnaryNat primeIndexInProduct(const BinPos& p, const PosSeq& ps, UnaryNat n);

}  // namespace consarith
