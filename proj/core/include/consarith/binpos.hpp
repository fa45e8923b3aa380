#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace consarith {

// Unary naturals. Semantically zero/successor; storage is a plain counter.
using UnaryNat = std::uint64_t;

// Positive binary numeral: the type of nonempty binary digit strings,
// built from the constructors 1, S0 (append digit 0) and S1 (append digit 1).
// Stored as 64-bit limbs, least significant first, top limb nonzero.
// There is no zero and no sign.
class BinPos {
 public:
  BinPos() : w_{1} {}
  explicit BinPos(std::uint64_t v);

  bool isOne() const { return w_.size() == 1 && w_[0] == 1; }
  bool isEven() const { return (w_[0] & 1u) == 0; }

  std::size_t bitLength() const;
  std::size_t trailingZeros() const;
  bool bit(std::size_t i) const;

  // Constructor applications: s0(p) = 2p, s1(p) = 2p+1.
  BinPos s0() const;
  BinPos s1() const;

  BinPos shl(std::size_t k) const;
  BinPos shr(std::size_t k) const;  // floor(p / 2^k); requires k < bitLength()
  void shrInPlace(std::size_t k);

  static BinPos pow2(std::size_t n);

  const std::vector<std::uint64_t>& limbs() const { return w_; }

  friend int cmp(const BinPos& a, const BinPos& b);
  friend BinPos add(const BinPos& a, const BinPos& b);
  friend BinPos addSmall(const BinPos& a, std::uint64_t c);
  // a - b, defined only for b < a (result stays positive).
  friend BinPos subStrict(const BinPos& a, const BinPos& b);
  friend BinPos mulBin(const BinPos& a, const BinPos& b);
  friend void subInPlace(BinPos& a, const BinPos& b);
  friend BinPos parseDecimal(std::string_view s);
  friend BinPos steinGcd(const BinPos& p, const BinPos& q);

 private:
  std::vector<std::uint64_t> w_;
  void normalize();
};

inline bool operator==(const BinPos& a, const BinPos& b) { return cmp(a, b) == 0; }
inline bool operator!=(const BinPos& a, const BinPos& b) { return cmp(a, b) != 0; }
inline bool operator<(const BinPos& a, const BinPos& b) { return cmp(a, b) < 0; }
inline bool operator<=(const BinPos& a, const BinPos& b) { return cmp(a, b) <= 0; }
inline bool operator>(const BinPos& a, const BinPos& b) { return cmp(a, b) > 0; }
inline bool operator>=(const BinPos& a, const BinPos& b) { return cmp(a, b) >= 0; }

// Number of digits above the leading 1, e.g. posLog(6) = 2.
UnaryNat posLog(const BinPos& p);

UnaryNat posToNat(const BinPos& p);  // throws std::domain_error above 64 bits
BinPos natToPos(UnaryNat n);         // throws std::domain_error for 0

BinPos parseDecimal(std::string_view s);
std::string printDecimal(const BinPos& p);

}  // namespace consarith
