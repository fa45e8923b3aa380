#pragma once

#include <utility>
#include <vector>

#include "consarith/binpos.hpp"

namespace consarith {

// Total map from nat indices to positive numerals: a finite table plus a
// default value for every index beyond it.
struct PosSeq {
  std::vector<BinPos> entries;
  BinPos dflt = BinPos(1);

  PosSeq() = default;
  explicit PosSeq(std::vector<BinPos> es, BinPos d = BinPos(1))
      : entries(std::move(es)), dflt(std::move(d)) {}

  const BinPos& operator()(UnaryNat i) const {
    return i < entries.size() ? entries[(std::size_t)i] : dflt;
  }
};

}  // namespace consarith
