#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsaw {

// Unsigned arbitrary-precision integer, little-endian base-2^32 limbs.
// Covers exactly what exact counting needs: addition, multiplication,
// halving, comparison and decimal printing. Division and subtraction are
// intentionally absent.
class BigUint {
public:
  BigUint() = default;
  BigUint(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_u64() const { return limbs_.size() <= 2; }

  std::uint64_t low_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 0) v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i];
      if (i < o.limbs_.size()) s += o.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) {
    a += b;
    return a;
  }

  // In-place multiply by a machine word.
  BigUint& operator*=(std::uint32_t m) {
    if (m == 0) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(p);
      carry = p >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    return *this;
  }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t p = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(p);
        carry = p >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
  }

  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // Exact division by two; throws if odd.
  BigUint half() const {
    if (!is_even()) throw std::domain_error("BigUint::half: value is odd");
    BigUint r = *this;
    std::uint32_t carry = 0;
    for (std::size_t i = r.limbs_.size(); i-- > 0;) {
      std::uint32_t cur = r.limbs_[i];
      r.limbs_[i] = (cur >> 1) | (carry << 31);
      carry = cur & 1u;
    }
    r.trim();
    return r;
  }

  std::strong_ordering operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const BigUint& o) const = default;

  double to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return r;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    // Repeated division by 10^9; quadratic, fine at counting scale.
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      std::vector<std::uint32_t> next;
      for (std::uint32_t limb : work) {
        std::uint64_t cur = (rem << 32) | limb;
        std::uint32_t q = static_cast<std::uint32_t>(cur / 1000000000ull);
        rem = cur % 1000000000ull;
        if (!next.empty() || q != 0) next.push_back(q);
      }
      std::string chunk = std::to_string(rem);
      if (!next.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
      work = std::move(next);
    }
    return out;
  }

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace hsaw
