#pragma once

#include <utility>

#include "consarith/binpos.hpp"

namespace consarith {

// Result of the difference-of-squares factoring attempt: either a proper
// split p = q0 * q1 with q0 >= q1 > 1, or a primality verdict.
struct FermatOutcome {
  bool prime = false;
  BinPos q0 = BinPos(1);
  BinPos q1 = BinPos(1);
};

struct FermatStats {
  UnaryNat scanIterations = 0;  // candidates l tested in the square scan
};

// Fermat's method. Undefined on 1 (throws std::domain_error). Even numbers
// split off the factor 2 directly; odd p scans l upward from fastSqrt(p)
// looking for a square l*l - p, stopping below (p-1)/2; exhaustion means p
// is prime.
FermatOutcome fermatFactor(const BinPos& p, FermatStats* stats = nullptr);

// For odd q0 <= q1: the pair ((q1-q0)/2, (q1+q0)/2), whose squares differ
// by q0*q1. The first component needs q0 < q1.
std::pair<BinPos, BinPos> oddSplitToSquares(const BinPos& q0, const BinPos& q1);

}  // namespace consarith
