#include "consarith/fermat.hpp"

#include <stdexcept>

#include "consarith/isqrt.hpp"

namespace consarith {

FermatOutcome fermatFactor(const BinPos& p, FermatStats* stats) {
  if (stats) stats->scanIterations = 0;
  if (p.isOne()) throw std::domain_error("fermatFactor: undefined on 1");
  if (p.isEven()) {
    if (p == BinPos(2)) return {true};
    return {false, p.shr(1), BinPos(2)};
  }
  if (isSquare(p)) {
    BinPos s = fastSqrt(p);
    if (!s.isOne()) return {false, s, s};
    // p = 1 is excluded above, so this is unreachable; kept for clarity.
  }
  BinPos bound = p.shr(1);  // (p-1)/2 for odd p
  if (bound <= BinPos(2)) return {true};  // p = 3 or 5
  BinPos l = fastSqrt(p);
  while (l < bound) {
    if (stats) ++stats->scanIterations;
    BinPos sq = mulBin(l, l);
    if (sq > p) {
      BinPos diff = subStrict(sq, p);
      if (isSquare(diff)) {
        BinPos r = fastSqrt(diff);
        return {false, add(l, r), subStrict(l, r)};
      }
    }
    l = addSmall(l, 1);
  }
  return {true};
}

std::pair<BinPos, BinPos> oddSplitToSquares(const BinPos& q0, const BinPos& q1) {
  if (q0.isEven() || q1.isEven() || q0 >= q1)
    throw std::domain_error("oddSplitToSquares: needs odd q0 < q1");
  return {subStrict(q1, q0).shr(1), add(q1, q0).shr(1)};
}

}  // namespace consarith
