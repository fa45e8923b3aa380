#pragma once

#include <utility>

#include "consarith/binpos.hpp"

namespace consarith {

// Bounded existence over naturals below n. The defining equations test the
// highest index first and short-circuit, so the predicate runs at most n
// times, starting from n-1 and walking down.
template <class WS>
bool exbNat(UnaryNat n, WS&& ws) {
  for (UnaryNat i = n; i-- > 0;) {
    if (ws(i)) return true;
  }
  return false;
}

namespace detail {
// Existence over the interval base+1 .. base+p, following the digit
// recursion: a numeral S0 p covers the two halves 1..p and p+1..2p of its
// range, a numeral S1 p tests its own value first and then falls back to
// the even numeral below it. hasBase marks whether an offset is present
// (there is no zero numeral to stand for an empty offset).
template <class WF>
bool exbPosFrom(const BinPos& p, bool hasBase, const BinPos& base, WF& wf) {
  auto at = [&](const BinPos& q) { return hasBase ? wf(add(base, q)) : wf(q); };
  if (p.isOne()) return at(BinPos(1));
  if (!p.isEven()) {
    if (at(p)) return true;
    BinPos even = subStrict(p, BinPos(1));
    return exbPosFrom(even, hasBase, base, wf);
  }
  BinPos half = p.shr(1);
  if (exbPosFrom(half, hasBase, base, wf)) return true;
  BinPos shifted = hasBase ? add(base, half) : half;
  return exbPosFrom(half, true, shifted, wf);
}
}  // namespace detail

// Bounded existence over positive numerals 1 .. p.
template <class WF>
bool exbPos(const BinPos& p, WF&& wf) {
  BinPos none(1);
  return detail::exbPosFrom(p, false, none, wf);
}

// Least m < n with ws(m), or n when there is none. The recursion peels
// successors off the bound while shifting the predicate, which amounts to
// scanning from 0 upward with short-circuit on the first hit.
template <class WS>
UnaryNat natLeast(UnaryNat n, WS&& ws) {
  for (UnaryNat i = 0; i < n; ++i) {
    if (ws(i)) return i;
  }
  return n;
}

// Least index in [m, n) satisfying ws, or n when there is none; 0 when the
// interval is empty (m > n).
template <class WS>
UnaryNat natLeastUp(UnaryNat m, UnaryNat n, WS&& ws) {
  if (m > n) return 0;
  return natLeast(n - m, [&](UnaryNat i) { return ws(i + m); }) + m;
}

// Greatest numeral below 2^n satisfying a monotone (downward closed)
// predicate, by binary descent. The accumulator starts at the constructor 1
// and each round k probes the accumulator extended by 2^(k-1); while the
// accumulator is still 1 the probe replaces it instead of adding. Exactly n
// probes are evaluated.
template <class WF>
BinPos posMonMax(WF&& wf, UnaryNat n) {
  BinPos acc(1);
  for (UnaryNat k = n; k > 0; --k) {
    BinPos step = BinPos::pow2((std::size_t)(k - 1));
    BinPos cand = acc.isOne() ? step : add(acc, step);
    if (wf(cand)) acc = std::move(cand);
  }
  return acc;
}

}  // namespace consarith
