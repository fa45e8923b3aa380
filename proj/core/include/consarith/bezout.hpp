#pragma once

#include "consarith/binpos.hpp"

namespace consarith {

// Negative-free Bezout certificate for a pair (p0, p1) with gcd g.
// The four shapes avoid signed coefficients:
//   Multiple0(q):      q * p0 = p1
//   Multiple1(q):      q * p1 = p0
//   PlusCase(q0, q1):  g + q0 * p0 = q1 * p1
//   MinusCase(q0, q1): g + q1 * p1 = q0 * p0
enum class BezoutTag { Multiple0, Multiple1, PlusCase, MinusCase };

struct BezoutCert {
  BezoutTag tag;
  BinPos q0;
  BinPos q1 = BinPos(1);  // unused for the Multiple shapes
};

// Certificate via the binary gcd case analysis. Mirrored digit cases are
// spelled out; the arguments are never swapped.
BezoutCert bezoutStein(const BinPos& p0, const BinPos& p1);

// Certificate via remainder steps (extended Euclid, negative-free).
BezoutCert bezoutEuclid(const BinPos& p0, const BinPos& p1);

// Checks the certificate equation against g = steinGcd(p0, p1).
bool verifyBezout(const BezoutCert& c, const BinPos& p0, const BinPos& p1);

std::string showBezout(const BezoutCert& c);

// Nat-level certificate: g + l0*m = l1*n (onN true) or g + l0*n = l1*m
// (onN false), with zero coefficients allowed.
struct NatBezoutCert {
  UnaryNat l0 = 0;
  UnaryNat l1 = 0;
  bool onN = true;
};

NatBezoutCert natBezout(UnaryNat m, UnaryNat n);
bool verifyNatBezout(const NatBezoutCert& c, UnaryNat m, UnaryNat n);

}  // namespace consarith
