#include "consarith/binpos.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace consarith {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

BinPos::BinPos(std::uint64_t v) {
  if (v == 0) throw std::domain_error("BinPos: no zero");
  w_.push_back(v);
}

void BinPos::normalize() {
  while (w_.size() > 1 && w_.back() == 0) w_.pop_back();
}

std::size_t BinPos::bitLength() const {
  return 64 * w_.size() - std::countl_zero(w_.back());
}

std::size_t BinPos::trailingZeros() const {
  std::size_t i = 0;
  while (w_[i] == 0) ++i;
  return 64 * i + std::countr_zero(w_[i]);
}

bool BinPos::bit(std::size_t i) const {
  std::size_t k = i / 64;
  if (k >= w_.size()) return false;
  return (w_[k] >> (i % 64)) & 1u;
}

BinPos BinPos::s0() const { return shl(1); }

BinPos BinPos::s1() const {
  BinPos r = shl(1);
  r.w_[0] |= 1u;
  return r;
}

BinPos BinPos::shl(std::size_t k) const {
  BinPos r;
  std::size_t limbShift = k / 64, s = k % 64;
  r.w_.assign(w_.size() + limbShift + 1, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    r.w_[i + limbShift] |= (s == 0) ? w_[i] : (w_[i] << s);
    if (s != 0) r.w_[i + limbShift + 1] |= w_[i] >> (64 - s);
  }
  r.normalize();
  return r;
}

BinPos BinPos::shr(std::size_t k) const {
  BinPos r(*this);
  r.shrInPlace(k);
  return r;
}

void BinPos::shrInPlace(std::size_t k) {
  if (k == 0) return;
  if (k >= bitLength()) throw std::domain_error("BinPos::shr: result would be zero");
  std::size_t limbShift = k / 64, s = k % 64;
  std::size_t n = w_.size();
  for (std::size_t i = 0; i + limbShift < n; ++i) {
    u64 lo = w_[i + limbShift] >> s;
    u64 hi = (s != 0 && i + limbShift + 1 < n) ? (w_[i + limbShift + 1] << (64 - s)) : 0;
    w_[i] = lo | hi;
  }
  w_.resize(n - limbShift);
  normalize();
}

BinPos BinPos::pow2(std::size_t n) {
  BinPos r;
  r.w_.assign(n / 64 + 1, 0);
  r.w_[n / 64] = u64{1} << (n % 64);
  return r;
}

int cmp(const BinPos& a, const BinPos& b) {
  if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size() ? -1 : 1;
  for (std::size_t i = a.w_.size(); i-- > 0;) {
    if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
  }
  return 0;
}

BinPos add(const BinPos& a, const BinPos& b) {
  const auto& x = a.w_.size() >= b.w_.size() ? a.w_ : b.w_;
  const auto& y = a.w_.size() >= b.w_.size() ? b.w_ : a.w_;
  BinPos r;
  r.w_.assign(x.size() + 1, 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    u128 t = (u128)x[i] + (i < y.size() ? y[i] : 0) + carry;
    r.w_[i] = (u64)t;
    carry = (u64)(t >> 64);
  }
  r.w_[x.size()] = carry;
  r.normalize();
  return r;
}

BinPos addSmall(const BinPos& a, std::uint64_t c) {
  BinPos r(a);
  u64 carry = c;
  for (std::size_t i = 0; i < r.w_.size() && carry; ++i) {
    u128 t = (u128)r.w_[i] + carry;
    r.w_[i] = (u64)t;
    carry = (u64)(t >> 64);
  }
  if (carry) r.w_.push_back(carry);
  return r;
}

BinPos subStrict(const BinPos& a, const BinPos& b) {
  if (cmp(b, a) >= 0) throw std::domain_error("subStrict: minuend must exceed subtrahend");
  BinPos r(a);
  subInPlace(r, b);
  return r;
}

void subInPlace(BinPos& a, const BinPos& b) {
  u64 borrow = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    u64 bi = i < b.w_.size() ? b.w_[i] : 0;
    u64 t = a.w_[i] - bi - borrow;
    borrow = (a.w_[i] < bi || (a.w_[i] == bi && borrow)) ? 1 : 0;
    a.w_[i] = t;
  }
  a.normalize();
}

BinPos mulBin(const BinPos& a, const BinPos& b) {
  BinPos r;
  r.w_.assign(a.w_.size() + b.w_.size(), 0);
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < b.w_.size(); ++j) {
      u128 t = (u128)a.w_[i] * b.w_[j] + r.w_[i + j] + carry;
      r.w_[i + j] = (u64)t;
      carry = (u64)(t >> 64);
    }
    r.w_[i + b.w_.size()] = carry;
  }
  r.normalize();
  return r;
}

UnaryNat posLog(const BinPos& p) { return p.bitLength() - 1; }

UnaryNat posToNat(const BinPos& p) {
  if (p.bitLength() > 64) throw std::domain_error("posToNat: value exceeds the nat counter");
  return p.limbs()[0];
}

BinPos natToPos(UnaryNat n) {
  if (n == 0) throw std::domain_error("natToPos: zero is not a positive numeral");
  return BinPos(n);
}

namespace {
// 10^19, the largest power of ten below 2^64.
constexpr u64 kDecChunk = 10000000000000000000ull;

// a = a * m + c, in place on the raw limb vector.
void mulAddSmall(std::vector<u64>& w, u64 m, u64 c) {
  u64 carry = c;
  for (auto& limb : w) {
    u128 t = (u128)limb * m + carry;
    limb = (u64)t;
    carry = (u64)(t >> 64);
  }
  if (carry) w.push_back(carry);
}

u64 divmodSmall(std::vector<u64>& w, u64 d) {
  u128 rem = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    u128 cur = (rem << 64) | w[i];
    w[i] = (u64)(cur / d);
    rem = cur % d;
  }
  while (w.size() > 1 && w.back() == 0) w.pop_back();
  return (u64)rem;
}
}  // namespace

BinPos parseDecimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("parseDecimal: empty string");
  std::vector<u64> w{0};
  for (std::size_t i = 0; i < s.size();) {
    std::size_t n = std::min<std::size_t>(19, s.size() - i);
    u64 chunk = 0, scale = 1;
    for (std::size_t j = 0; j < n; ++j, ++i) {
      char ch = s[i];
      if (ch < '0' || ch > '9') throw std::invalid_argument("parseDecimal: not a digit");
      chunk = chunk * 10 + (u64)(ch - '0');
      scale *= 10;
    }
    mulAddSmall(w, scale, chunk);
  }
  if (w.size() == 1 && w[0] == 0)
    throw std::invalid_argument("parseDecimal: positive numerals start at 1");
  BinPos r(1);
  r.w_ = std::move(w);
  return r;
}

std::string printDecimal(const BinPos& p) {
  std::vector<u64> w = p.limbs();
  std::string out;
  while (!(w.size() == 1 && w[0] == 0)) {
    u64 r = divmodSmall(w, kDecChunk);
    bool last = w.size() == 1 && w[0] == 0;
    for (int k = 0; k < 19; ++k) {
      out.push_back((char)('0' + r % 10));
      r /= 10;
      if (last && r == 0) break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace consarith
