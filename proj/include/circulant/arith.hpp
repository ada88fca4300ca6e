#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace circulant {

// Floor of the square root, integer Newton iteration. No floating point:
// a double sqrt misclassifies perfect squares near 2^53.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto x = static_cast<std::uint64_t>(n);
  if (x < 2) return n;
  std::uint64_t r = std::uint64_t{1} << ((std::bit_width(x) + 1) / 2);
  while (true) {
    const std::uint64_t next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  return static_cast<std::int64_t>(r);
}

// Exact perfect-square test via isqrt + squaring back.
inline bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Deterministic trial division. Adequate for desk-scale arguments
// (sqrt(n) candidate divisors); not a general primality library.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= limit; m += p) {
      composite[static_cast<std::size_t>(m)] = true;
    }
  }
  return primes;
}

// base^exp over int64, throwing instead of wrapping.
inline std::int64_t ipow_checked(std::int64_t base, std::int64_t exp) {
  if (base < 0 || exp < 0) {
    throw std::invalid_argument("ipow_checked: negative argument");
  }
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::overflow_error("ipow_checked: result exceeds int64 range");
    }
    result *= base;
  }
  return result;
}

}  // namespace circulant
