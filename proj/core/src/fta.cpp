#include "consarith/fta.hpp"

#include <stdexcept>

#include "consarith/gcd.hpp"
#include "consarith/primes.hpp"

namespace consarith {

Factorization factorize(const BinPos& p, bool oddStep) {
  Factorization out;
  BinPos rest(p);
  while (!rest.isOne()) {
    BinPos f = leastFactor(rest, oddStep);
    out.push_back(f);
    if (f == rest) break;
    rest = divWitness(f, rest);
  }
  return out;
}

UnaryNat applyFwd(const PermWitness& w, UnaryNat i) {
  return i < w.bound ? w.fwd[(std::size_t)i] : i;
}

UnaryNat applyInv(const PermWitness& w, UnaryNat i) {
  return i < w.bound ? w.inv[(std::size_t)i] : i;
}

bool verifyPermWitness(const PermWitness& w) {
  if (w.fwd.size() != w.bound || w.inv.size() != w.bound) return false;
  for (UnaryNat i = 0; i < w.bound; ++i) {
    if (w.fwd[(std::size_t)i] >= w.bound || w.inv[(std::size_t)i] >= w.bound)
      return false;
  }
  for (UnaryNat i = 0; i < w.bound + 8; ++i) {
    if (applyInv(w, applyFwd(w, i)) != i) return false;
    if (applyFwd(w, applyInv(w, i)) != i) return false;
  }
  for (UnaryNat i = w.bound; i < w.bound + 8; ++i) {
    if (applyFwd(w, i) != i) return false;
  }
  return true;
}

UnaryNat transp(UnaryNat n, UnaryNat m, UnaryNat i) {
  if (i == n) return m;
  if (i == m) return n;
  return i;
}

namespace {

PermWitness identityPerm(UnaryNat n) {
  PermWitness w;
  w.bound = n;
  w.fwd.resize((std::size_t)n);
  w.inv.resize((std::size_t)n);
  for (UnaryNat i = 0; i < n; ++i) {
    w.fwd[(std::size_t)i] = i;
    w.inv[(std::size_t)i] = i;
  }
  return w;
}

}  // namespace

PermWitness genPms(UnaryNat n, UnaryNat m, const PosSeq& ps, const PosSeq& qs) {
  if (n == 0 || m == 0) return identityPerm(n);
  UnaryNat n1 = n - 1, m1 = m - 1;
  const BinPos& t = qs(m1);
  if (posDivides(t, prodSeq(ps, n1))) {
    UnaryNat l = primeIndexInProduct(t, ps, n1);
    // Swap the hit to the last slot, match the shortened lists, then undo
    // the swap on the resulting tables.
    PosSeq rs;
    rs.entries.reserve((std::size_t)n);
    for (UnaryNat i = 0; i < n; ++i) rs.entries.push_back(ps(transp(l, n1, i)));
    rs.dflt = ps.dflt;
    PermWitness w = genPms(n1, m1, rs, qs);
    PermWitness r;
    r.bound = n;
    r.fwd.resize((std::size_t)n);
    r.inv.resize((std::size_t)n);
    for (UnaryNat i = 0; i < n; ++i) {
      r.fwd[(std::size_t)i] = transp(l, n1, applyFwd(w, i));
      r.inv[(std::size_t)i] = applyInv(w, transp(l, n1, i));
    }
    return r;
  }
  if (posDivides(t, ps(n1))) {
    PermWitness w = genPms(n1, m1, ps, qs);
    PermWitness r;
    r.bound = n;
    r.fwd.resize((std::size_t)n);
    r.inv.resize((std::size_t)n);
    for (UnaryNat i = 0; i < n1; ++i) {
      r.fwd[(std::size_t)i] = applyFwd(w, i);
      r.inv[(std::size_t)i] = applyInv(w, i);
    }
    r.fwd[(std::size_t)n1] = n1;
    r.inv[(std::size_t)n1] = n1;
    return r;
  }
  // The last entry of qs occurs nowhere in ps: the lists do not match and
  // the search stops right away.
  return identityPerm(n);
}

std::array<BinPos, 4> prodSplit(const BinPos& p0, const BinPos& p1,
                                const BinPos& q0, const BinPos& q1) {
  if (mulBin(p0, p1) != mulBin(q0, q1))
    throw std::domain_error("prodSplit: products differ");
  Factorization f0 = factorize(p0), f1 = factorize(p1);
  Factorization g0 = factorize(q0), g1 = factorize(q1);
  UnaryNat m0 = f0.size();
  UnaryNat n0 = g0.size();
  std::vector<BinPos> psv(f0);
  psv.insert(psv.end(), f1.begin(), f1.end());
  std::vector<BinPos> qsv(g0);
  qsv.insert(qsv.end(), g1.begin(), g1.end());
  UnaryNat N = psv.size(), M = qsv.size();
  PosSeq ps(std::move(psv)), qs(std::move(qsv));
  PermWitness w = genPms(N, M, ps, qs);
  BinPos r0(1), r1(1), r2(1), r3(1);
  for (UnaryNat i = 0; i < N; ++i) {
    bool intoQ0 = applyInv(w, i) < n0;
    if (i < m0) {
      (intoQ0 ? r0 : r1) = mulBin(intoQ0 ? r0 : r1, ps(i));
    } else {
      (intoQ0 ? r2 : r3) = mulBin(intoQ0 ? r2 : r3, ps(i));
    }
  }
  return {r0, r1, r2, r3};
}

}  // namespace consarith
