#pragma once

#include <array>
#include <vector>

#include "consarith/binpos.hpp"
#include "consarith/seq.hpp"

namespace consarith {

// Prime factorization in non-decreasing order; empty for 1.
using Factorization = std::vector<BinPos>;

Factorization factorize(const BinPos& p, bool oddStep = false);

// Finite permutation: explicit forward and inverse tables on [0, bound),
// identity everywhere beyond.
struct PermWitness {
  UnaryNat bound = 0;
  std::vector<UnaryNat> fwd;
  std::vector<UnaryNat> inv;
};

UnaryNat applyFwd(const PermWitness& w, UnaryNat i);
UnaryNat applyInv(const PermWitness& w, UnaryNat i);

// Inverse laws on [0, bound) plus identity behavior on a margin above it.
bool verifyPermWitness(const PermWitness& w);

// The transposition swapping n and m.
UnaryNat transp(UnaryNat n, UnaryNat m, UnaryNat i);

// Matches two prime lists of equal product: returns a permutation relating
// positions of ps to positions of qs. Works down from the last entry of qs,
// first looking for a hit inside the prefix product of ps, then at the last
// entry of ps; if neither test fires the inputs disagree and the identity is
// returned at once.
PermWitness genPms(UnaryNat n, UnaryNat m, const PosSeq& ps, const PosSeq& qs);

// Regroups p0*p1 = q0*q1 into (r0, r1, r2, r3) with r0*r1 = p0, r2*r3 = p1,
// r0*r2 = q0, r1*r3 = q1. Throws std::domain_error unless p0*p1 = q0*q1.
std::array<BinPos, 4> prodSplit(const BinPos& p0, const BinPos& p1,
                                const BinPos& q0, const BinPos& q1);

}  // namespace consarith
