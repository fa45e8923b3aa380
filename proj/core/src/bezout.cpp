#include "consarith/bezout.hpp"

#include <stdexcept>
#include <vector>

#include "consarith/gcd.hpp"

namespace consarith {

namespace {

BezoutCert mult0(BinPos q) { return {BezoutTag::Multiple0, std::move(q)}; }
BezoutCert mult1(BinPos q) { return {BezoutTag::Multiple1, std::move(q)}; }
BezoutCert plus(BinPos q0, BinPos q1) {
  return {BezoutTag::PlusCase, std::move(q0), std::move(q1)};
}
BezoutCert minus(BinPos q0, BinPos q1) {
  return {BezoutTag::MinusCase, std::move(q0), std::move(q1)};
}

const BinPos kOne(1);

// Case analysis on the digits of (p0, p1). Each subtraction step is followed
// by at least one halving step, so the call depth is bounded by twice the
// total digit count; the fuel turns a broken invariant into a hard error
// instead of a hang.
BezoutCert steinGo(const BinPos& p0, const BinPos& p1, UnaryNat fuel) {
  if (fuel == 0) throw std::logic_error("bezoutStein: fuel exhausted");
  --fuel;
  if (p0.isOne()) return mult0(p1);
  if (p1.isOne()) return mult1(p0);
  bool e0 = p0.isEven(), e1 = p1.isEven();
  if (e0 && e1) {
    // Doubling both arguments doubles the gcd and every product in the
    // equation, so the certificate carries over unchanged.
    return steinGo(p0.shr(1), p1.shr(1), fuel);
  }
  if (e0) {  // p0 = S0 h0, p1 = S1 h1
    BinPos h0 = p0.shr(1), h1 = p1.shr(1);
    BezoutCert c = steinGo(h0, p1, fuel);
    switch (c.tag) {
      case BezoutTag::Multiple0:
        // c.q0 * h0 = p1, hence g = h0 and h0 + h1*p0 = h0*p1.
        return plus(h1, h0);
      case BezoutTag::Multiple1:
        return mult1(c.q0.s0());
      case BezoutTag::PlusCase:
        // g + q0*h0 = q1*p1 lifts to g + (h1+1)*q0*p0 = (q1 + q0*h0)*p1.
        return plus(mulBin(addSmall(h1, 1), c.q0), add(c.q1, mulBin(c.q0, h0)));
      case BezoutTag::MinusCase:
        return minus(mulBin(c.q0, addSmall(h1, 1)), add(c.q1, mulBin(c.q0, h0)));
    }
  }
  if (e1) {  // p0 = S1 h0, p1 = S0 h1 (mirror of the previous case)
    BinPos h0 = p0.shr(1), h1 = p1.shr(1);
    BezoutCert c = steinGo(p0, h1, fuel);
    switch (c.tag) {
      case BezoutTag::Multiple0:
        return mult0(c.q0.s0());
      case BezoutTag::Multiple1:
        // c.q0 * h1 = p0, hence g = h1 and h1 + h0*p1 = h1*p0.
        return minus(h1, h0);
      case BezoutTag::PlusCase:
        return plus(add(c.q0, mulBin(c.q1, h1)), mulBin(c.q1, addSmall(h0, 1)));
      case BezoutTag::MinusCase:
        return minus(add(c.q0, mulBin(c.q1, h1)), mulBin(addSmall(h0, 1), c.q1));
    }
  }
  // Both odd.
  int c0 = cmp(p0, p1);
  if (c0 == 0) return mult0(BinPos(1));
  if (c0 < 0) {
    BinPos d = subStrict(p1, p0);  // even
    BezoutCert c = steinGo(p0, d, fuel);
    switch (c.tag) {
      case BezoutTag::Multiple0:
        return mult0(addSmall(c.q0, 1));
      case BezoutTag::Multiple1:
        // q * (p1 - p0) = p0 would make an even number odd.
        throw std::logic_error("bezoutStein: impossible parity case");
      case BezoutTag::PlusCase:
        return plus(add(c.q0, c.q1), c.q1);
      case BezoutTag::MinusCase:
        return minus(add(c.q0, c.q1), c.q1);
    }
  }
  BinPos d = subStrict(p0, p1);
  BezoutCert c = steinGo(d, p1, fuel);
  switch (c.tag) {
    case BezoutTag::Multiple1:
      return mult1(addSmall(c.q0, 1));
    case BezoutTag::Multiple0:
      throw std::logic_error("bezoutStein: impossible parity case");
    case BezoutTag::PlusCase:
      return plus(c.q0, add(c.q0, c.q1));
    case BezoutTag::MinusCase:
      return minus(c.q0, add(c.q0, c.q1));
  }
  throw std::logic_error("bezoutStein: unreachable");
}

BezoutCert euclidGo(const BinPos& p0, const BinPos& p1) {
  int c0 = cmp(p0, p1);
  if (c0 == 0) return mult0(BinPos(1));
  if (c0 < 0) {
    BinPos k = floorDiv(p1, p0);
    BinPos m = mulBin(k, p0);
    if (m == p1) return mult0(k);
    BinPos r = subStrict(p1, m);  // 1 <= r < p0
    BezoutCert c = euclidGo(p0, r);
    switch (c.tag) {
      case BezoutTag::Multiple0:
        throw std::logic_error("bezoutEuclid: cofactor below divisor");
      case BezoutTag::Multiple1:
        // r | p0, so g = r = p1 - k*p0.
        return plus(k, BinPos(1));
      case BezoutTag::PlusCase:
        return plus(add(c.q0, mulBin(c.q1, k)), c.q1);
      case BezoutTag::MinusCase:
        return minus(add(c.q0, mulBin(c.q1, k)), c.q1);
    }
  }
  BinPos k = floorDiv(p0, p1);
  BinPos m = mulBin(k, p1);
  if (m == p0) return mult1(k);
  BinPos r = subStrict(p0, m);
  BezoutCert c = euclidGo(r, p1);
  switch (c.tag) {
    case BezoutTag::Multiple1:
      throw std::logic_error("bezoutEuclid: cofactor below divisor");
    case BezoutTag::Multiple0:
      return minus(BinPos(1), k);
    case BezoutTag::PlusCase:
      return plus(c.q0, add(c.q1, mulBin(c.q0, k)));
    case BezoutTag::MinusCase:
      return minus(c.q0, add(c.q1, mulBin(c.q0, k)));
  }
  throw std::logic_error("bezoutEuclid: unreachable");
}

}  // namespace

BezoutCert bezoutStein(const BinPos& p0, const BinPos& p1) {
  UnaryNat fuel = 2 * (posLog(p0) + posLog(p1)) + 4;
  return steinGo(p0, p1, fuel);
}

BezoutCert bezoutEuclid(const BinPos& p0, const BinPos& p1) {
  return euclidGo(p0, p1);
}

bool verifyBezout(const BezoutCert& c, const BinPos& p0, const BinPos& p1) {
  BinPos g = steinGcd(p0, p1);
  switch (c.tag) {
    case BezoutTag::Multiple0:
      return mulBin(c.q0, p0) == p1 && g == p0;
    case BezoutTag::Multiple1:
      return mulBin(c.q0, p1) == p0 && g == p1;
    case BezoutTag::PlusCase:
      return add(g, mulBin(c.q0, p0)) == mulBin(c.q1, p1);
    case BezoutTag::MinusCase:
      return add(g, mulBin(c.q1, p1)) == mulBin(c.q0, p0);
  }
  return false;
}

std::string showBezout(const BezoutCert& c) {
  switch (c.tag) {
    case BezoutTag::Multiple0:
      return "Multiple0(" + printDecimal(c.q0) + ")";
    case BezoutTag::Multiple1:
      return "Multiple1(" + printDecimal(c.q0) + ")";
    case BezoutTag::PlusCase:
      return "PlusCase(" + printDecimal(c.q0) + "," + printDecimal(c.q1) + ")";
    case BezoutTag::MinusCase:
      return "MinusCase(" + printDecimal(c.q0) + "," + printDecimal(c.q1) + ")";
  }
  return "";
}

NatBezoutCert natBezout(UnaryNat m, UnaryNat n) {
  // Replay the subtractive gcd, then fold the certificate back up through
  // the recorded steps.
  std::vector<bool> stepLeft;  // true: n lost m; false: m lost n
  UnaryNat a = m, b = n;
  while (a != 0 && b != 0) {
    if (a < b) {
      b -= a;
      stepLeft.push_back(true);
    } else {
      a -= b;
      stepLeft.push_back(false);
    }
  }
  NatBezoutCert c;
  if (a == 0) {
    c = {0, 1, true};  // g = n' and g + 0*m' = 1*n'
  } else {
    c = {0, 1, false};  // g = m' and g + 0*n' = 1*m'
  }
  for (std::size_t i = stepLeft.size(); i-- > 0;) {
    if (stepLeft[i]) {
      // The pair was (m', n') -> (m', n' - m').
      if (c.onN)
        c = {c.l0 + c.l1, c.l1, true};
      else
        c = {c.l0, c.l1 + c.l0, false};
    } else {
      // The pair was (m', n') -> (m' - n', n').
      if (c.onN)
        c = {c.l0, c.l0 + c.l1, true};
      else
        c = {c.l0 + c.l1, c.l1, false};
    }
  }
  return c;
}

bool verifyNatBezout(const NatBezoutCert& c, UnaryNat m, UnaryNat n) {
  using u128 = unsigned __int128;
  u128 g = natGcd(m, n);
  if (c.onN) return g + (u128)c.l0 * m == (u128)c.l1 * n;
  return g + (u128)c.l0 * n == (u128)c.l1 * m;
}

}  // namespace consarith
