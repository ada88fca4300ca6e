#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

// Unsigned arbitrary-precision integer on base-10^9 limbs (little-endian).
// Covers exactly what iterated cube-lifting needs: +, -, *, pow, ordering,
// decimal I/O. Subtraction requires minuend >= subtrahend and throws
// std::underflow_error otherwise; there is no division.
class BigUint {
 public:
  BigUint() = default;

  BigUint(std::uint64_t value) {  // NOLINT(google-explicit-constructor)
    while (value != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
      value /= kBase;
    }
  }

  static BigUint from_string(std::string_view text) {
    if (text.empty()) {
      throw std::invalid_argument("BigUint: empty decimal string");
    }
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("BigUint: invalid decimal digit");
      }
    }
    BigUint out;
    std::size_t end = text.size();
    while (end > 0) {
      const std::size_t begin = end >= 9 ? end - 9 : 0;
      std::uint32_t limb = 0;
      for (std::size_t i = begin; i < end; ++i) {
        limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
      }
      out.limbs_.push_back(limb);
      end = begin;
    }
    out.trim();
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }

  std::size_t digit_count() const {
    if (limbs_.empty()) return 1;
    std::uint32_t top = limbs_.back();
    std::size_t digits = 0;
    while (top != 0) {
      ++digits;
      top /= 10;
    }
    return digits + 9 * (limbs_.size() - 1);
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      const std::string part = std::to_string(*it);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  BigUint& operator+=(const BigUint& other) {
    if (limbs_.size() < other.limbs_.size()) {
      limbs_.resize(other.limbs_.size(), 0);
    }
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry;
      if (i < other.limbs_.size()) cur += other.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = static_cast<std::uint32_t>(cur / kBase);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
  }

  BigUint& operator-=(const BigUint& other) {
    if (other > *this) {
      throw std::underflow_error("BigUint: negative difference");
    }
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
      if (i < other.limbs_.size()) cur -= other.limbs_[i];
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      limbs_[i] = static_cast<std::uint32_t>(cur);
      if (borrow == 0 && i >= other.limbs_.size()) break;
    }
    trim();
    return *this;
  }

  BigUint& operator*=(const BigUint& other) {
    *this = *this * other;
    return *this;
  }

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return BigUint{};
    BigUint out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      const std::uint64_t a = lhs.limbs_[i];
      for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
        const std::uint64_t cur = out.limbs_[i + j] + carry + a * rhs.limbs_[j];
        out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      std::size_t k = i + rhs.limbs_.size();
      while (carry != 0) {
        const std::uint64_t cur = out.limbs_[k] + carry;
        out.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    out.trim();
    return out;
  }

  // Square-and-multiply; pow(0) == 1, including for zero base.
  BigUint pow(std::uint64_t exponent) const {
    BigUint result{1};
    BigUint base = *this;
    while (exponent != 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const BigUint&, const BigUint&) = default;

  friend std::strong_ordering operator<=>(const BigUint& lhs, const BigUint& rhs) {
    if (lhs.limbs_.size() != rhs.limbs_.size()) {
      return lhs.limbs_.size() <=> rhs.limbs_.size();
    }
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
      if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigUint& v) {
    return os << v.to_string();
  }

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace circulant
