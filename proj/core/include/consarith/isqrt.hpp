#pragma once

#include "consarith/binpos.hpp"

namespace consarith {

// Least m with n <= m*m (the rounded-up square root on naturals).
UnaryNat natSqrtCeil(UnaryNat n);

// Greatest q with q*q <= p, found by binary descent over floor(posLog p / 2)+1
// probe multiplications. probes, when given, receives the exact probe count.
BinPos posSqrtFloor(const BinPos& p, UnaryNat* probes = nullptr);

// Floor square root by the digit-pair recurrence: strip two digits, take the
// root q of the rest, then the answer is S1 q when (S1 q)^2 still fits below
// the argument and S0 q otherwise. Runs as an iteration over the
// most-significant digit pairs.
BinPos fastSqrt(const BinPos& p);

bool isSquare(const BinPos& p);

}  // namespace consarith
