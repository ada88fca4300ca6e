#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circulant/arith.hpp"
#include "circulant/bigint.hpp"
#include "circulant/form.hpp"

namespace circulant {

// Closed-form representations. The three families
//
//   F(k-1, k,   k)   = 3k - 1
//   F(k-1, k-1, k)   = 3k - 2
//   F(k,   k+1, k+2) = 9(k + 1)
//
// together cover every n with n mod 9 not in {3, 6}.

inline Triple rep_3k_minus_1(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("rep_3k_minus_1: k must be positive");
  return Triple{k - 1, k, k};
}

inline Triple rep_3k_minus_2(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("rep_3k_minus_2: k must be positive");
  return Triple{k - 1, k - 1, k};
}

inline Triple rep_9k(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("rep_9k: k must be nonnegative");
  return Triple{k, k + 1, k + 2};
}

// One representation of n, when any exists. Selection is deterministic: the
// residue of n mod 3 is tested first, so the 3k-2 / 3k-1 families win
// whenever they apply and only multiples of 3 fall through to the mod-9
// test. Absent exactly when n mod 9 is 3 or 6.
inline std::optional<Triple> construct_any(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("construct_any: n must be positive");
  switch (n % 3) {
    case 1:
      return rep_3k_minus_2((n + 2) / 3);
    case 2:
      return rep_3k_minus_1((n + 1) / 3);
    default:
      break;
  }
  if (n % 9 == 0) return rep_9k(n / 9 - 1);
  return std::nullopt;
}

namespace detail {

inline void require_prime_not_3(std::int64_t p, const char* where) {
  if (p == 3 || !is_prime(p)) {
    throw std::invalid_argument(std::string(where) + ": requires a prime p != 3");
  }
}

}  // namespace detail

// The unique representation of a prime p != 3:
//   p == 1 (mod 3):  x = y = z-1 = (p-1)/3
//   p == 2 (mod 3):  x+1 = y = z = (p+1)/3
inline Triple canonical_prime(std::int64_t p) {
  detail::require_prime_not_3(p, "canonical_prime");
  if (p % 3 == 1) {
    const std::int64_t k = (p - 1) / 3;
    return Triple{k, k, k + 1};
  }
  const std::int64_t k = (p + 1) / 3;
  return Triple{k - 1, k, k};
}

// The unique representation of 2p for a prime p != 3:
//   p == 1 (mod 3):  x+1 = y = z = (2p+1)/3
//   p == 2 (mod 3):  x = y = z-1 = (2p-1)/3
inline Triple canonical_2p(std::int64_t p) {
  detail::require_prime_not_3(p, "canonical_2p");
  if (p % 3 == 1) {
    const std::int64_t k = (2 * p + 1) / 3;
    return Triple{k - 1, k, k};
  }
  const std::int64_t k = (2 * p - 1) / 3;
  return Triple{k, k, k + 1};
}

// Arbitrary-precision triple. Same ordering and admissibility conventions
// as Triple; mandatory for lift chains, where 27^(3^3) already has 39
// digits.
struct BigTriple {
  BigUint x;
  BigUint y;
  BigUint z;

  friend bool operator==(const BigTriple&, const BigTriple&) = default;
};

inline bool is_admissible(const BigTriple& t) {
  return t.x <= t.y && t.y <= t.z && t.x < t.z;
}

inline BigTriple to_big(const Triple& t) {
  if (t.x < 0 || t.y < 0 || t.z < 0) {
    throw std::invalid_argument("to_big: negative coordinate");
  }
  return BigTriple{BigUint(static_cast<std::uint64_t>(t.x)),
                   BigUint(static_cast<std::uint64_t>(t.y)),
                   BigUint(static_cast<std::uint64_t>(t.z))};
}

inline BigUint eval_f(const BigTriple& t) {
  const BigUint cubes = t.x.pow(3) + t.y.pow(3) + t.z.pow(3);
  return cubes - BigUint(3) * t.x * t.y * t.z;  // nonnegative by AM-GM
}

// The cube-lift map: F(u,v,w) = F(x,y,z)^3 for
//
//   u = F(x,y,z) + 9xyz
//   v = 3(x^2 y + y^2 z + z^2 x)
//   w = 3(x^2 z + z^2 y + y^2 x).
//
// The output is sorted ascending; for arithmetic-progression inputs the
// natural order is v < u < w, but it is not guaranteed in general, and
// sorting keeps the result canonically admissible.
inline BigTriple cube_lift(const BigTriple& t) {
  if (!is_admissible(t)) {
    throw std::invalid_argument("cube_lift: triple is not admissible");
  }
  const BigUint xx = t.x * t.x;
  const BigUint yy = t.y * t.y;
  const BigUint zz = t.z * t.z;
  std::array<BigUint, 3> lifted{
      eval_f(t) + BigUint(9) * t.x * t.y * t.z,
      BigUint(3) * (xx * t.y + yy * t.z + zz * t.x),
      BigUint(3) * (xx * t.z + zz * t.y + yy * t.x),
  };
  if (lifted[0] > lifted[1]) std::swap(lifted[0], lifted[1]);
  if (lifted[1] > lifted[2]) std::swap(lifted[1], lifted[2]);
  if (lifted[0] > lifted[1]) std::swap(lifted[0], lifted[1]);
  return BigTriple{lifted[0], lifted[1], lifted[2]};
}

// When (x, y, z) is an arithmetic progression, its common difference;
// otherwise empty. Cube-lifting an AP triple with difference d yields an AP
// triple with difference 3d^3.
inline std::optional<BigUint> ap_difference(const BigTriple& t) {
  if (!is_admissible(t)) return std::nullopt;
  const BigUint d1 = t.y - t.x;
  const BigUint d2 = t.z - t.y;
  if (d1 != d2) return std::nullopt;
  return d1;
}

struct LiftEntry {
  std::int64_t level = 0;
  BigTriple triple;
  BigUint value;  // F(triple) == F(seed)^(3^level)
};

struct LiftChain {
  BigTriple seed;
  std::vector<LiftEntry> entries;  // entries[0] = (0, seed, F(seed))
};

inline LiftChain lift_chain(const BigTriple& seed, std::int64_t depth) {
  if (depth < 0) throw std::invalid_argument("lift_chain: depth must be nonnegative");
  if (!is_admissible(seed)) {
    throw std::invalid_argument("lift_chain: seed is not admissible");
  }
  LiftChain chain{seed, {}};
  chain.entries.reserve(static_cast<std::size_t>(depth) + 1);
  BigTriple current = seed;
  chain.entries.push_back({0, current, eval_f(current)});
  for (std::int64_t level = 1; level <= depth; ++level) {
    current = cube_lift(current);
    chain.entries.push_back({level, current, eval_f(current)});
  }
  return chain;
}

inline std::string lift_chain_report(const LiftChain& chain) {
  std::string out;
  for (const LiftEntry& e : chain.entries) {
    out += "level " + std::to_string(e.level) + ": (" + e.triple.x.to_string() +
           ", " + e.triple.y.to_string() + ", " + e.triple.z.to_string() +
           ")  F = " + e.value.to_string() + "  (" +
           std::to_string(e.value.digit_count()) + " digits)";
    if (const auto d = ap_difference(e.triple)) {
      out += "  d = " + d->to_string();
    }
    out += '\n';
  }
  return out;
}

// Machine-readable line format: one CSV row per level, ap_diff empty when
// the triple is not an arithmetic progression.
inline std::string lift_chain_csv(const LiftChain& chain) {
  std::string out = "level,x,y,z,value,ap_diff\n";
  for (const LiftEntry& e : chain.entries) {
    out += std::to_string(e.level) + ',' + e.triple.x.to_string() + ',' +
           e.triple.y.to_string() + ',' + e.triple.z.to_string() + ',' +
           e.value.to_string() + ',';
    if (const auto d = ap_difference(e.triple)) out += d->to_string();
    out += '\n';
  }
  return out;
}

}  // namespace circulant
