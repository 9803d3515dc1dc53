#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian.
// Group orders are exact claims; this covers products of basic orbit
// lengths and the metadata orders of groups too large to construct.
class BigUint {
public:
  BigUint() : limbs_{0} {}
  BigUint(std::uint64_t v) {
    limbs_ = {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)};
    trim();
  }

  static BigUint from_decimal(std::string_view s) {
    if (s.empty()) throw Error("empty decimal integer");
    BigUint r(0);
    for (char c : s) {
      if (c < '0' || c > '9') throw Error("bad decimal digit in integer: " + std::string(s));
      r.mul_u32(10);
      r.add_u32(static_cast<std::uint32_t>(c - '0'));
    }
    return r;
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw Error("integer does not fit in 64 bits: " + to_decimal());
    std::uint64_t v = limbs_[0];
    if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  BigUint &operator*=(std::uint64_t m) {
    BigUint factor(m);
    *this = *this * factor;
    return *this;
  }

  BigUint operator*(const BigUint &rhs) const {
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                            out[i + j] + carry;
        out[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + rhs.limbs_.size();
      while (carry) {
        std::uint64_t cur = out[k] + carry;
        out[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    BigUint r;
    r.limbs_ = std::move(out);
    r.trim();
    return r;
  }

  BigUint operator+(const BigUint &rhs) const {
    BigUint r;
    r.limbs_.assign(std::max(limbs_.size(), rhs.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
      std::uint64_t cur = carry;
      if (i < limbs_.size()) cur += limbs_[i];
      if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
      r.limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r.trim();
    return r;
  }

  BigUint operator-(const BigUint &rhs) const {
    if (*this < rhs) throw Error("BigUint underflow");
    BigUint r;
    r.limbs_.assign(limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
      borrow = 0;
      if (cur < 0) { cur += (std::int64_t{1} << 32); borrow = 1; }
      r.limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    r.trim();
    return r;
  }

  // Division by a machine-word divisor; returns quotient, sets remainder.
  BigUint div_u64(std::uint64_t d, std::uint64_t &rem) const {
    if (d == 0) throw Error("division by zero");
    if (d >> 32) {
      // two-limb divisor: fall back to long division on 32-bit halves
      return div_small_big(BigUint(d), rem);
    }
    BigUint q;
    q.limbs_.assign(limbs_.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | limbs_[i];
      q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    q.trim();
    rem = r;
    return q;
  }

  // Exact division: throws if not divisible.
  BigUint divide_exact(const BigUint &d) const {
    if (d.is_zero()) throw Error("division by zero");
    if (d.fits_u64()) {
      std::uint64_t rem = 0;
      BigUint q = div_u64(d.to_u64(), rem);
      if (rem != 0)
        throw Error("non-exact division: " + to_decimal() + " / " + d.to_decimal());
      return q;
    }
    std::uint64_t rem_ignored = 0;
    BigUint q = div_small_big(d, rem_ignored);
    if (rem_ignored != 0 || !(q * d == *this))
      throw Error("non-exact division: " + to_decimal() + " / " + d.to_decimal());
    return q;
  }

  bool divisible_by(const BigUint &d) const {
    if (d.is_zero()) return false;
    if (d.fits_u64()) {
      std::uint64_t rem = 0;
      (void)div_u64(d.to_u64(), rem);
      return rem == 0;
    }
    std::uint64_t sentinel = 0;
    BigUint q = div_small_big(d, sentinel);
    return q * d == *this;
  }

  bool operator==(const BigUint &rhs) const { return limbs_ == rhs.limbs_; }
  bool operator!=(const BigUint &rhs) const { return limbs_ != rhs.limbs_; }
  bool operator<(const BigUint &rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
      if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i];
    return false;
  }
  bool operator<=(const BigUint &rhs) const { return !(rhs < *this); }
  bool operator>(const BigUint &rhs) const { return rhs < *this; }
  bool operator>=(const BigUint &rhs) const { return !(*this < rhs); }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    BigUint t = *this;
    std::string out;
    while (!t.is_zero()) {
      std::uint64_t rem = 0;
      t = t.div_u64(1000000000ull, rem);
      std::string chunk = std::to_string(rem);
      if (!t.is_zero())
        chunk = std::string(9 - chunk.size(), '0') + chunk;
      out = chunk + out;
    }
    return out;
  }

private:
  // Schoolbook binary long division; only used for big divisors, which are
  // rare (family-order arithmetic), so simplicity wins over speed.
  BigUint div_small_big(const BigUint &d, std::uint64_t &rem_u64) const {
    BigUint q(0), rem(0);
    for (std::size_t bit = limbs_.size() * 32; bit-- > 0;) {
      rem = rem + rem;
      if ((limbs_[bit / 32] >> (bit % 32)) & 1u) rem.add_u32(1);
      q = q + q;
      if (!(rem < d)) {
        rem = rem - d;
        q.add_u32(1);
      }
    }
    rem_u64 = rem.fits_u64() ? rem.to_u64() : 1;  // nonzero marker when huge
    return q;
  }

  void mul_u32(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto &l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void add_u32(std::uint32_t a) {
    std::uint64_t carry = a;
    for (auto &l : limbs_) {
      std::uint64_t cur = l + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (!carry) break;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) limbs_.push_back(0);
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace cgt
