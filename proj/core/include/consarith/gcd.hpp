#pragma once

#include "consarith/binpos.hpp"

namespace consarith {

// Subtractive gcd on naturals; gcd(0, n) = gcd(n, 0) = n.
UnaryNat natGcd(UnaryNat m, UnaryNat n);

// n | m on naturals, as a bounded search for a cofactor (0 divides only 0).
bool natDivides(UnaryNat m, UnaryNat n);

// Binary (Stein) gcd by the seven digit rules: halve while a shared or
// one-sided factor of two is visible, subtract when both arguments are odd.
BinPos steinGcd(const BinPos& p, const BinPos& q);

// floor(p / q) by binary descent over the digit-length gap.
// Requires q <= p.
BinPos floorDiv(const BinPos& p, const BinPos& q);

// Euclidean gcd driven by remainder steps (quotient by floorDiv, remainder
// by strict subtraction, guarded by the exact-multiple check).
BinPos euclidGcdBin(const BinPos& p, const BinPos& q);

bool posDivides(const BinPos& p, const BinPos& q);  // p | q, via the gcd

// The cofactor r with r * p = q; requires p | q.
BinPos divWitness(const BinPos& p, const BinPos& q);

}  // namespace consarith
