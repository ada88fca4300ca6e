#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "circulant/arith.hpp"
#include "circulant/form.hpp"

namespace circulant {

// nu(n), the number of admissible triples with F = n, computed by two
// independent backends:
//
//   naive    exhaustive scan of the region forced by the bounds
//            F >= 3z-2 (always) and F >= 9z-10 (when z >= x+2),
//   divisor  for every factorization n = s*q, solve a^2+ab+b^2 = q in gap
//            coordinates and decode x = (s-2a-b)/3.
//
// Both return the full sorted representation set and re-verify every triple
// they emit. Disagreement is an implementation bug, never a data condition,
// and surfaces as backend_mismatch.

struct RepresentationSet {
  std::int64_t n = 0;
  std::vector<Triple> reps;  // strictly ascending lexicographic

  std::int64_t nu() const { return static_cast<std::int64_t>(reps.size()); }

  friend bool operator==(const RepresentationSet&, const RepresentationSet&) = default;
};

enum class Backend { naive, divisor, both };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::naive: return "naive";
    case Backend::divisor: return "divisor";
    case Backend::both: return "both";
  }
  return "?";
}

class backend_mismatch : public std::logic_error {
 public:
  backend_mismatch(RepresentationSet naive_set, RepresentationSet divisor_set)
      : std::logic_error("backend mismatch at n=" + std::to_string(naive_set.n) +
                         ": naive nu=" + std::to_string(naive_set.nu()) +
                         ", divisor nu=" + std::to_string(divisor_set.nu())),
        naive_result(std::move(naive_set)),
        divisor_result(std::move(divisor_set)) {}

  RepresentationSet naive_result;
  RepresentationSet divisor_result;
};

// Divisor of n as x+y+z together with the cofactor n/s as Q; s * q = n.
struct DivisorTerm {
  std::int64_t s = 0;
  std::int64_t q = 0;

  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

// All divisors of n, ascending, by trial division up to sqrt(n). Trial
// division is deliberate at desk scale (single queries up to ~10^12, range
// sweeps up to ~10^7); this routine is the one seam to swap for a faster
// factorizer, nothing else cares how the list is produced.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<DivisorTerm> divisor_terms(std::int64_t n) {
  std::vector<DivisorTerm> out;
  for (const std::int64_t s : divisors(n)) out.push_back({s, n / s});
  return out;
}

// All ordered pairs (a, b) with a, b >= 0 and a^2 + ab + b^2 = q. For each
// a <= isqrt(q) the candidate b is the nonnegative root of
// b^2 + ab + (a^2 - q) = 0, i.e. b = (-a + sqrt(4q - 3a^2)) / 2, kept when
// the discriminant is a perfect square and the root is a nonnegative
// integer. Exact integer arithmetic throughout.
inline std::vector<std::pair<std::int64_t, std::int64_t>> solve_loeschian(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("solve_loeschian: q must be positive");
  if (q > std::numeric_limits<std::int64_t>::max() / 4) {
    throw std::overflow_error("solve_loeschian: q too large for exact discriminant");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t a_max = isqrt(q);
  for (std::int64_t a = 0; a <= a_max; ++a) {
    const std::int64_t disc = 4 * q - 3 * a * a;
    std::int64_t root = 0;
    if (!is_perfect_square(disc, &root)) continue;
    if (root < a || (root - a) % 2 != 0) continue;
    out.emplace_back(a, (root - a) / 2);
  }
  return out;
}

namespace detail {

inline void finalize_representation_set(RepresentationSet& set, const char* who) {
  std::sort(set.reps.begin(), set.reps.end());
  for (std::size_t i = 0; i < set.reps.size(); ++i) {
    const Triple& t = set.reps[i];
    if (!is_admissible(t) || eval_f(t) != set.n) {
      throw std::logic_error(std::string(who) + ": emitted triple failed verification");
    }
    if (i > 0 && !(set.reps[i - 1] < t)) {
      throw std::logic_error(std::string(who) + ": duplicate triple emitted");
    }
  }
}

}  // namespace detail

// Exhaustive enumeration backend. The scan region is finite because
// F >= 3z-2 forces z <= (n+2)/3; on top of that F >= 9z-10 (for z >= x+2)
// confines everything with z > (n+10)/9 to the two x = z-1 families
// F(k-1,k-1,k) = 3k-2 and F(k-1,k,k) = 3k-1, which are resolved in closed
// form. Inside the remaining region the scan walks (x, y) pairs, pruned by
// the fact that min_z F(x,y,z) is nondecreasing in y, and locates z by
// binary search, which is sound because F is strictly increasing in z on
// the admissible region (F'_z = 3z^2 - 3xy > 0).
//
// With paranoid = true the z > (n+10)/9 shortcut and the monotone search
// are both dropped: a plain triple loop over the full z <= (n+2)/3 region.
// Cubic in n/3, so oracle duty only; keep n small.
inline RepresentationSet nu_naive(std::int64_t n, bool paranoid = false) {
  if (n < 1) throw std::invalid_argument("nu_naive: n must be positive");
  RepresentationSet out{n, {}};
  if (paranoid) {
    const std::int64_t z_max = (n + 2) / 3;
    for (std::int64_t z = 1; z <= z_max; ++z) {
      for (std::int64_t x = 0; x < z; ++x) {
        for (std::int64_t y = x; y <= z; ++y) {
          if (eval_f(x, y, z) == n) out.reps.push_back({x, y, z});
        }
      }
    }
    detail::finalize_representation_set(out, "nu_naive");
    return out;
  }

  const std::int64_t z_cap = (n + 10) / 9;
  for (std::int64_t x = 0; 3 * x + 1 <= n && x + 1 <= z_cap; ++x) {
    for (std::int64_t y = x; y <= z_cap; ++y) {
      const std::int64_t z_min = std::max(y, x + 1);
      const std::int64_t at_min = eval_f(x, y, z_min);
      if (at_min > n) break;  // min over z grows with y
      if (at_min == n) out.reps.push_back({x, y, z_min});
      std::int64_t lo = z_min + 1;
      std::int64_t hi = z_cap;
      while (lo <= hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        const std::int64_t f = eval_f(x, y, mid);
        if (f == n) {
          out.reps.push_back({x, y, mid});
          break;
        }
        if (f < n) {
          lo = mid + 1;
        } else {
          hi = mid - 1;
        }
      }
    }
  }
  if (n % 3 == 1) {
    const std::int64_t k = (n + 2) / 3;
    if (k > z_cap) out.reps.push_back({k - 1, k - 1, k});
  } else if (n % 3 == 2) {
    const std::int64_t k = (n + 1) / 3;
    if (k > z_cap) out.reps.push_back({k - 1, k, k});
  }
  detail::finalize_representation_set(out, "nu_naive");
  return out;
}

// Factorization backend. Every representation has F = s*Q with s = x+y+z a
// divisor of n, and in gap coordinates s = 3x + 2a + b, so each Loeschian
// solution (a, b) of Q = n/s decodes to at most one triple. The map
// (s, a, b) -> triple is injective; the no-duplicates assertion double
// checks that.
inline RepresentationSet nu_divisor(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("nu_divisor: n must be positive");
  RepresentationSet out{n, {}};
  for (const DivisorTerm& term : divisor_terms(n)) {
    for (const auto& [a, b] : solve_loeschian(term.q)) {
      const std::int64_t rem = term.s - 2 * a - b;
      if (rem < 0 || rem % 3 != 0) continue;
      out.reps.push_back(from_gaps(GapForm{rem / 3, a, b}));
    }
  }
  detail::finalize_representation_set(out, "nu_divisor");
  return out;
}

inline RepresentationSet nu(std::int64_t n, Backend backend = Backend::divisor) {
  switch (backend) {
    case Backend::naive:
      return nu_naive(n);
    case Backend::divisor:
      return nu_divisor(n);
    case Backend::both: {
      auto from_naive = nu_naive(n);
      auto from_divisor = nu_divisor(n);
      if (from_naive != from_divisor) {
        throw backend_mismatch(std::move(from_naive), std::move(from_divisor));
      }
      return from_divisor;
    }
  }
  throw std::invalid_argument("nu: unknown backend");
}

namespace detail {

inline unsigned resolve_threads(unsigned requested, std::int64_t span) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (static_cast<std::int64_t>(t) > span) t = static_cast<unsigned>(span);
  return std::max(1u, t);
}

// Applies fn(n) for every n in [lo, hi] across workers. fn must only touch
// state indexed by n, so the merged result is independent of scheduling.
// Exceptions are collected and the one with the lowest n is rethrown after
// all workers drain (workers keep going past an error so the lowest
// offender is deterministic).
template <typename Fn>
void parallel_apply(std::int64_t lo, std::int64_t hi, unsigned threads, Fn&& fn) {
  const std::int64_t span = hi - lo + 1;
  const unsigned worker_count = resolve_threads(threads, span);
  if (worker_count <= 1) {
    for (std::int64_t n = lo; n <= hi; ++n) fn(n);
    return;
  }
  constexpr std::int64_t kBlock = 16;
  std::atomic<std::int64_t> next{lo};
  std::mutex error_mutex;
  std::optional<std::pair<std::int64_t, std::exception_ptr>> first_error;
  auto worker = [&] {
    while (true) {
      const std::int64_t start = next.fetch_add(kBlock);
      if (start > hi) return;
      const std::int64_t end = std::min(hi, start + kBlock - 1);
      for (std::int64_t n = start; n <= end; ++n) {
        try {
          fn(n);
        } catch (...) {
          std::lock_guard<std::mutex> guard(error_mutex);
          if (!first_error || n < first_error->first) {
            first_error = {n, std::current_exception()};
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(worker_count);
  for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error->second);
}

}  // namespace detail

struct RangeReport {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Backend backend = Backend::divisor;
  std::vector<std::int64_t> counts;  // counts[n - lo] = nu(n)

  std::int64_t nu_of(std::int64_t n) const {
    if (n < lo || n > hi) throw std::out_of_range("RangeReport: n outside range");
    return counts[static_cast<std::size_t>(n - lo)];
  }

  friend bool operator==(const RangeReport&, const RangeReport&) = default;
};

// nu for every n in [lo, hi]. threads = 0 means use available parallelism;
// the result is identical for every worker count.
inline RangeReport nu_range(std::int64_t lo, std::int64_t hi,
                            Backend backend = Backend::divisor,
                            unsigned threads = 0) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("nu_range: require 1 <= lo <= hi");
  RangeReport report{lo, hi, backend,
                     std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
  detail::parallel_apply(lo, hi, threads, [&](std::int64_t n) {
    report.counts[static_cast<std::size_t>(n - lo)] = nu(n, backend).nu();
  });
  return report;
}

inline std::string to_csv(const RangeReport& report) {
  std::string out = "n,nu\n";
  for (std::int64_t n = report.lo; n <= report.hi; ++n) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(report.nu_of(n));
    out += '\n';
  }
  return out;
}

// OEIS b-file lines: "n a(n)", space separated, LF terminated.
inline std::string to_bfile(const RangeReport& report) {
  std::string out;
  for (std::int64_t n = report.lo; n <= report.hi; ++n) {
    out += std::to_string(n);
    out += ' ';
    out += std::to_string(report.nu_of(n));
    out += '\n';
  }
  return out;
}

}  // namespace circulant
