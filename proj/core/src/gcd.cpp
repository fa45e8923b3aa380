#include "consarith/gcd.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "consarith/search.hpp"

namespace consarith {

UnaryNat natGcd(UnaryNat m, UnaryNat n) {
  while (m != 0 && n != 0) {
    if (m < n)
      n -= m;
    else
      m -= n;
  }
  return m == 0 ? n : m;
}

bool natDivides(UnaryNat m, UnaryNat n) {
  return exbNat(n + 1, [&](UnaryNat l) {
    return (unsigned __int128)l * m == (unsigned __int128)n;
  });
}

namespace {

using u64 = std::uint64_t;
using Limbs = std::vector<u64>;

// The Stein loop runs on raw limb buffers with explicit sizes so the hot
// subtract and shift passes stay branch-lean and allocation-free.

int cmpRaw(const Limbs& a, std::size_t na, const Limbs& b, std::size_t nb) {
  if (na != nb) return na < nb ? -1 : 1;
  for (std::size_t i = na; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void subRaw(Limbs& a, std::size_t& na, const Limbs& b, std::size_t nb) {
  unsigned long long borrow = 0;
  std::size_t i = 0;
  for (; i < nb; ++i) {
    unsigned long long t;
    bool b1 = __builtin_sub_overflow(a[i], b[i], &t);
    bool b2 = __builtin_sub_overflow(t, borrow, &t);
    a[i] = t;
    borrow = b1 | b2;
  }
  for (; borrow && i < na; ++i)
    borrow = __builtin_sub_overflow(a[i], 1ull, &a[i]);
  while (na > 1 && a[na - 1] == 0) --na;
}

void shrRaw(Limbs& a, std::size_t& na, std::size_t k) {
  std::size_t ws = k / 64, bs = k % 64;
  if (bs == 0) {
    for (std::size_t i = 0; i + ws < na; ++i) a[i] = a[i + ws];
  } else {
    for (std::size_t i = 0; i + ws < na; ++i) {
      u64 lo = a[i + ws] >> bs;
      u64 hi = (i + ws + 1 < na) ? (a[i + ws + 1] << (64 - bs)) : 0;
      a[i] = lo | hi;
    }
  }
  na -= ws;
  while (na > 1 && a[na - 1] == 0) --na;
}

std::size_t tzRaw(const Limbs& a) {
  std::size_t i = 0;
  while (a[i] == 0) ++i;
  return 64 * i + (std::size_t)std::countr_zero(a[i]);
}

bool isOneRaw(const Limbs& a, std::size_t na) { return na == 1 && a[0] == 1; }

}  // namespace

BinPos steinGcd(const BinPos& p0, const BinPos& q0) {
  Limbs a = p0.limbs(), b = q0.limbs();
  std::size_t na = a.size(), nb = b.size();
  std::size_t shift = 0;
  // Shared factors of two: gcd(S0 p, S0 q) = S0 gcd(p, q), applied in a batch.
  if (!isOneRaw(a, na) && !isOneRaw(b, nb) && !(a[0] & 1) && !(b[0] & 1)) {
    std::size_t k = std::min(tzRaw(a), tzRaw(b));
    if (k > 0) {
      shrRaw(a, na, k);
      shrRaw(b, nb, k);
      shift = k;
    }
  }
  // From here at most one argument is even at a time.
  while (true) {
    if (isOneRaw(a, na) || isOneRaw(b, nb)) {
      a[0] = 1;
      na = 1;
      break;
    }
    if (!(a[0] & 1)) {
      shrRaw(a, na, tzRaw(a));
      continue;
    }
    if (!(b[0] & 1)) {
      shrRaw(b, nb, tzRaw(b));
      continue;
    }
    int c = cmpRaw(a, na, b, nb);
    if (c == 0) break;
    if (c < 0)
      subRaw(b, nb, a, na);
    else
      subRaw(a, na, b, nb);
  }
  a.resize(na);
  BinPos g;
  g.w_ = std::move(a);
  return shift ? g.shl(shift) : g;
}

BinPos floorDiv(const BinPos& p, const BinPos& q) {
  if (p < q) throw std::domain_error("floorDiv: dividend below divisor");
  UnaryNat n = posLog(p) - posLog(q) + 1;
  return posMonMax([&](const BinPos& r) { return mulBin(r, q) <= p; }, n);
}

BinPos euclidGcdBin(const BinPos& p0, const BinPos& q0) {
  BinPos p(p0), q(q0);
  while (true) {
    int c = cmp(p, q);
    if (c == 0) return q;
    if (c < 0) {
      BinPos m = mulBin(floorDiv(q, p), p);
      if (m == q) return p;
      q = subStrict(q, m);
    } else {
      BinPos m = mulBin(floorDiv(p, q), q);
      if (m == p) return q;
      p = subStrict(p, m);
    }
  }
}

bool posDivides(const BinPos& p, const BinPos& q) { return steinGcd(p, q) == p; }

BinPos divWitness(const BinPos& p, const BinPos& q) {
  if (p == q) return BinPos(1);
  if (q < p) throw std::domain_error("divWitness: no cofactor");
  BinPos r = floorDiv(q, p);
  if (mulBin(r, p) != q) throw std::domain_error("divWitness: no cofactor");
  return r;
}

}  // namespace consarith
