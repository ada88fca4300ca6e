#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace circulant {

// The circulant cubic form
//
//   F(x,y,z) = x^3 + y^3 + z^3 - 3xyz = (x+y+z)(x^2+y^2+z^2-xy-xz-yz),
//
// the determinant of the 3x3 circulant matrix with first row (x,y,z).
// A representation of n is an admissible triple 0 <= x <= y <= z, z >= x+1
// with F(x,y,z) = n; the z >= x+1 condition excludes the degenerate
// F(x,x,x) = 0 case. Everything here is exact int64 arithmetic with
// explicit overflow detection (intermediates run through unsigned
// __int128); the arbitrary-precision twin used by lift chains lives in
// constructive.hpp.

struct Triple {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Gap coordinates (x, a, b) with a = y-x, b = z-y. In these coordinates the
// quadratic cofactor is Q = a^2 + ab + b^2, which is also how the divisor
// backend reconstructs triples.
struct GapForm {
  std::int64_t x = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const GapForm&, const GapForm&) = default;
};

using FormValue = std::int64_t;

// Largest coordinate accepted by eval_f/eval_q. Beyond this the __int128
// intermediates could wrap; below it they cannot. Values of F still have to
// fit in int64, so calls with large coordinates may throw on the result.
inline constexpr std::int64_t kEvalCoordMax = 3'000'000'000'000;

namespace detail {

using u128 = unsigned __int128;

// 3*c^3 fits in uint64 for c up to this bound: the common fast path.
inline constexpr std::uint64_t kCubeFastMax = 1'800'000;
static_assert(3 * static_cast<u128>(kCubeFastMax) * kCubeFastMax * kCubeFastMax <=
              std::numeric_limits<std::uint64_t>::max());

inline constexpr std::uint64_t kQuadFastMax = 3'000'000'000;
static_assert(2 * static_cast<u128>(kQuadFastMax) * kQuadFastMax <=
              std::numeric_limits<std::uint64_t>::max());

inline constexpr std::uint64_t kInt64Max =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

inline void check_coordinates(std::int64_t x, std::int64_t y, std::int64_t z,
                              const char* where) {
  if (x < 0 || y < 0 || z < 0) {
    throw std::invalid_argument(std::string(where) + ": negative coordinate");
  }
  if (x > kEvalCoordMax || y > kEvalCoordMax || z > kEvalCoordMax) {
    throw std::overflow_error(std::string(where) +
                              ": coordinate exceeds safe evaluation range");
  }
}

}  // namespace detail

// F(x,y,z) = x^3 + y^3 + z^3 - 3xyz, exact. Accepts raw (possibly
// inadmissible) coordinates; F >= 0 for all nonnegative inputs by AM-GM.
// Throws std::overflow_error instead of wrapping.
inline FormValue eval_f(std::int64_t x, std::int64_t y, std::int64_t z) {
  detail::check_coordinates(x, y, z, "eval_f");
  const auto ux = static_cast<std::uint64_t>(x);
  const auto uy = static_cast<std::uint64_t>(y);
  const auto uz = static_cast<std::uint64_t>(z);
  if (ux <= detail::kCubeFastMax && uy <= detail::kCubeFastMax &&
      uz <= detail::kCubeFastMax) {
    const std::uint64_t cubes = ux * ux * ux + uy * uy * uy + uz * uz * uz;
    const std::uint64_t value = cubes - 3 * ux * uy * uz;
    if (value > detail::kInt64Max) {
      throw std::overflow_error("eval_f: value exceeds int64 range");
    }
    return static_cast<FormValue>(value);
  }
  const auto cube = [](detail::u128 v) { return v * v * v; };
  const detail::u128 cubes = cube(ux) + cube(uy) + cube(uz);
  const detail::u128 prod = 3 * static_cast<detail::u128>(ux) * uy * uz;
  const detail::u128 value = cubes - prod;
  if (value > detail::kInt64Max) {
    throw std::overflow_error("eval_f: value exceeds int64 range");
  }
  return static_cast<FormValue>(value);
}

inline FormValue eval_f(const Triple& t) { return eval_f(t.x, t.y, t.z); }

// Quadratic cofactor Q = x^2 + y^2 + z^2 - xy - xz - yz, computed as half
// the sum of squared pairwise differences (no cancellation, stays
// nonnegative throughout).
inline FormValue eval_q(std::int64_t x, std::int64_t y, std::int64_t z) {
  detail::check_coordinates(x, y, z, "eval_q");
  const auto sq_diff = [](std::int64_t a, std::int64_t b) {
    const auto d = static_cast<std::uint64_t>(a > b ? a - b : b - a);
    return static_cast<detail::u128>(d) * d;
  };
  const detail::u128 doubled = sq_diff(x, y) + sq_diff(y, z) + sq_diff(z, x);
  const detail::u128 value = doubled / 2;
  if (value > detail::kInt64Max) {
    throw std::overflow_error("eval_q: value exceeds int64 range");
  }
  return static_cast<FormValue>(value);
}

inline FormValue eval_q(const Triple& t) { return eval_q(t.x, t.y, t.z); }

// Q in gap coordinates: a^2 + ab + b^2. Agrees exactly with eval_q of the
// corresponding triple.
inline FormValue eval_q(const GapForm& g) {
  if (g.a < 0 || g.b < 0) {
    throw std::invalid_argument("eval_q: negative gap");
  }
  const auto a = static_cast<detail::u128>(g.a);
  const auto b = static_cast<detail::u128>(g.b);
  const detail::u128 value = a * a + a * b + b * b;
  if (value > detail::kInt64Max) {
    throw std::overflow_error("eval_q: value exceeds int64 range");
  }
  return static_cast<FormValue>(value);
}

inline bool is_admissible(std::int64_t x, std::int64_t y, std::int64_t z) noexcept {
  return x >= 0 && x <= y && y <= z && z > x;
}

inline bool is_admissible(const Triple& t) noexcept {
  return is_admissible(t.x, t.y, t.z);
}

inline GapForm to_gaps(const Triple& t) {
  if (!is_admissible(t)) {
    throw std::invalid_argument("to_gaps: triple is not admissible");
  }
  return GapForm{t.x, t.y - t.x, t.z - t.y};
}

inline Triple from_gaps(const GapForm& g) {
  if (g.x < 0 || g.a < 0 || g.b < 0 || (g.a == 0 && g.b == 0)) {
    throw std::invalid_argument("from_gaps: invalid gap form");
  }
  std::int64_t y = 0;
  std::int64_t z = 0;
  if (__builtin_add_overflow(g.x, g.a, &y) || __builtin_add_overflow(y, g.b, &z)) {
    throw std::overflow_error("from_gaps: coordinate overflow");
  }
  return Triple{g.x, y, z};
}

enum class ResidueClass { admissible, excluded };

// n mod 9 in {3, 6} admits no representation; everything else does.
inline ResidueClass residue_class(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("residue_class: n must be positive");
  const std::int64_t r = n % 9;
  return (r == 3 || r == 6) ? ResidueClass::excluded : ResidueClass::admissible;
}

inline bool is_excluded_residue(std::int64_t n) {
  return residue_class(n) == ResidueClass::excluded;
}

inline std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '(' << t.x << ", " << t.y << ", " << t.z << ')';
}

inline std::ostream& operator<<(std::ostream& os, const GapForm& g) {
  return os << "(x=" << g.x << ", a=" << g.a << ", b=" << g.b << ')';
}

}  // namespace circulant
