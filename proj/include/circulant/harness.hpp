#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/arith.hpp"
#include "circulant/constructive.hpp"
#include "circulant/counting.hpp"

namespace circulant {

// Mechanical verification of the headline facts at desk scale, plus OEIS
// b-file cross-checking. Every report is reproducible: same bounds, same
// bytes, and a failing report carries the lowest counterexample with enough
// data to re-check it by hand.

struct Counterexample {
  std::int64_t n = 0;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  std::string range;
  std::int64_t checked = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  std::string to_text() const {
    std::string out;
    out += "claim: " + claim + '\n';
    out += "range: " + range + '\n';
    out += "checked: " + std::to_string(checked) + '\n';
    for (const std::string& note : notes) out += "note: " + note + '\n';
    out += std::string("result: ") + (pass ? "PASS" : "FAIL") + '\n';
    if (counterexample) {
      out += "counterexample: n=" + std::to_string(counterexample->n) + ' ' +
             counterexample->detail + '\n';
    }
    return out;
  }

  std::string summary_line() const {
    std::string out = "claim=" + claim + " range=\"" + range +
                      "\" checked=" + std::to_string(checked) +
                      " result=" + (pass ? "PASS" : "FAIL");
    if (counterexample) {
      out += " counterexample=\"n=" + std::to_string(counterexample->n) + ' ' +
             counterexample->detail + '"';
    }
    return out;
  }
};

// nu(n) = 0 exactly when n mod 9 is 3 or 6, checked for all n <= limit with
// the divisor backend.
inline VerificationReport verify_exceptional(std::int64_t limit, unsigned threads = 0) {
  if (limit < 1) throw std::invalid_argument("verify_exceptional: limit must be positive");
  VerificationReport report;
  report.claim = "exceptional-residues";
  report.range = "n in [1, " + std::to_string(limit) + "]";
  report.checked = limit;
  const RangeReport counts = nu_range(1, limit, Backend::divisor, threads);
  for (std::int64_t n = 1; n <= limit; ++n) {
    const bool excluded = is_excluded_residue(n);
    const bool zero = counts.nu_of(n) == 0;
    if (excluded != zero) {
      report.pass = false;
      report.counterexample = Counterexample{
          n, "nu=" + std::to_string(counts.nu_of(n)) +
                 " n_mod_9=" + std::to_string(n % 9)};
      break;
    }
  }
  return report;
}

// nu(p) = nu(2p) = 1 for every prime p != 3 up to limit, and the unique
// triples are exactly the canonical closed forms.
inline VerificationReport verify_primes(std::int64_t limit) {
  if (limit < 2) throw std::invalid_argument("verify_primes: limit must be at least 2");
  VerificationReport report;
  report.claim = "prime-uniqueness";
  report.range = "primes p <= " + std::to_string(limit) + ", p != 3";
  for (const std::int64_t p : primes_up_to(limit)) {
    if (p == 3) continue;
    ++report.checked;
    const RepresentationSet rp = nu_divisor(p);
    if (rp.nu() != 1 || rp.reps[0] != canonical_prime(p)) {
      report.pass = false;
      report.counterexample =
          Counterexample{p, "nu(p)=" + std::to_string(rp.nu()) + " expected canonical form"};
      break;
    }
    const RepresentationSet r2p = nu_divisor(2 * p);
    if (r2p.nu() != 1 || r2p.reps[0] != canonical_2p(p)) {
      report.pass = false;
      report.counterexample =
          Counterexample{2 * p, "nu(2p)=" + std::to_string(r2p.nu()) + " expected canonical form"};
      break;
    }
  }
  return report;
}

// For 0 <= k <= max_k: nu(8^k) = k+1; exactly one representation of 8^k has
// not-all-even coordinates (equivalently no representation has odd Q >= 3);
// and doubling every representation of 8^k lands in the set for 8^(k+1).
inline VerificationReport verify_pow8(std::int64_t max_k) {
  if (max_k < 0) throw std::invalid_argument("verify_pow8: max_k must be nonnegative");
  VerificationReport report;
  report.claim = "pow8-counts";
  report.range = "8^k for k in [0, " + std::to_string(max_k) + "]";
  RepresentationSet previous;
  for (std::int64_t k = 0; k <= max_k; ++k) {
    const std::int64_t n = ipow_checked(8, k);
    const RepresentationSet current = nu_divisor(n);
    ++report.checked;
    if (current.nu() != k + 1) {
      report.pass = false;
      report.counterexample = Counterexample{
          n, "nu=" + std::to_string(current.nu()) + " expected " + std::to_string(k + 1)};
      break;
    }
    std::int64_t not_all_even = 0;
    bool odd_q_violation = false;
    for (const Triple& t : current.reps) {
      if (t.x % 2 != 0 || t.y % 2 != 0 || t.z % 2 != 0) ++not_all_even;
      const std::int64_t q = eval_q(t);
      if (q % 2 != 0 && q >= 3) odd_q_violation = true;
    }
    if (not_all_even != 1 || odd_q_violation) {
      report.pass = false;
      report.counterexample = Counterexample{
          n, "not_all_even_count=" + std::to_string(not_all_even) +
                 (odd_q_violation ? " and a representation with odd Q >= 3" : "")};
      break;
    }
    if (k > 0) {
      bool doubling_ok = true;
      for (const Triple& t : previous.reps) {
        const Triple doubled{2 * t.x, 2 * t.y, 2 * t.z};
        if (!std::binary_search(current.reps.begin(), current.reps.end(), doubled)) {
          doubling_ok = false;
          break;
        }
      }
      if (!doubling_ok) {
        report.pass = false;
        report.counterexample =
            Counterexample{n, "doubled representation of 8^" + std::to_string(k - 1) +
                                  " missing from 8^" + std::to_string(k)};
        break;
      }
    }
    previous = current;
  }
  return report;
}

// Smallest m >= 1 with nu(m) = n, scanning upward with the divisor backend.
// The default cap 8^(n-1) is guaranteed to be a hit; an explicit smaller cap
// may exhaust, which returns absent.
inline std::optional<std::int64_t> smallest_k(std::int64_t n,
                                              std::optional<std::int64_t> cap = {}) {
  if (n < 1) throw std::invalid_argument("smallest_k: n must be positive");
  const std::int64_t limit = cap ? *cap : ipow_checked(8, n - 1);
  if (limit < 1) throw std::invalid_argument("smallest_k: cap must be positive");
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (nu_divisor(m).nu() == n) return m;
  }
  return std::nullopt;
}

// --- OEIS b-file support ----------------------------------------------

struct BFileEntry {
  std::int64_t index = 0;
  std::int64_t value = 0;

  friend auto operator<=>(const BFileEntry&, const BFileEntry&) = default;
};

class bfile_parse_error : public std::runtime_error {
 public:
  bfile_parse_error(std::size_t line, const std::string& what_happened)
      : std::runtime_error("b-file parse error at line " + std::to_string(line) +
                           ": " + what_happened),
        line_number(line) {}

  std::size_t line_number;
};

namespace detail {

inline std::optional<std::int64_t> parse_int_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
  rest.remove_prefix(i);
  if (rest.empty()) return std::nullopt;
  std::int64_t value = 0;
  const auto* begin = rest.data();
  const auto* end = rest.data() + rest.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) return std::nullopt;
  rest.remove_prefix(static_cast<std::size_t>(ptr - begin));
  return value;
}

}  // namespace detail

// Parses OEIS b-file text: blank lines and '#' comments are ignored, every
// other line is "index value" separated by whitespace. Indices must be
// strictly increasing; gaps are legal here and reported by compare_bfile.
inline std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    std::string_view rest = line.substr(first);
    const auto index = detail::parse_int_token(rest);
    const auto value = detail::parse_int_token(rest);
    if (!index || !value) {
      throw bfile_parse_error(line_number, "expected two integers");
    }
    if (rest.find_first_not_of(" \t") != std::string_view::npos) {
      throw bfile_parse_error(line_number, "trailing garbage after value");
    }
    if (!entries.empty() && *index <= entries.back().index) {
      throw bfile_parse_error(line_number, "indices must be strictly increasing");
    }
    entries.push_back({*index, *value});
  }
  return entries;
}

enum class SequenceId { nu, admissible_n, smallest_k };

inline const char* sequence_name(SequenceId id) {
  switch (id) {
    case SequenceId::nu: return "nu";
    case SequenceId::admissible_n: return "admissible-n";
    case SequenceId::smallest_k: return "smallest-k";
  }
  return "?";
}

namespace detail {

// The i-th positive integer whose residue class admits a representation
// (i >= 1). Plain upward scan; this is reference-grade code, not fast code.
inline std::int64_t nth_admissible(std::int64_t i) {
  std::int64_t seen = 0;
  for (std::int64_t n = 1;; ++n) {
    if (!is_excluded_residue(n)) {
      if (++seen == i) return n;
    }
  }
}

inline std::optional<std::int64_t> sequence_value(SequenceId id, std::int64_t n,
                                                  std::string* why_not) {
  switch (id) {
    case SequenceId::nu:
      if (n == 0) return 0;  // nu(0) = 0 by convention
      if (n < 0) {
        *why_not = "nu undefined for negative n";
        return std::nullopt;
      }
      return nu_divisor(n).nu();
    case SequenceId::admissible_n:
      if (n < 1) {
        *why_not = "admissible-n is 1-indexed";
        return std::nullopt;
      }
      return nth_admissible(n);
    case SequenceId::smallest_k: {
      if (n < 1) {
        *why_not = "smallest-k is defined for n >= 1";
        return std::nullopt;
      }
      const auto k = smallest_k(n);
      if (!k) {
        *why_not = "scan cap exhausted";
        return std::nullopt;
      }
      return *k;
    }
  }
  *why_not = "unknown sequence";
  return std::nullopt;
}

}  // namespace detail

// Evaluates the named generator at index + offset for every entry and
// reports the first mismatch. Entries below min_index are skipped (that is
// how an a(0) entry outside the generator's domain is handled). Index gaps
// are noted, not fatal. An empty entry list passes vacuously.
inline VerificationReport compare_bfile(const std::vector<BFileEntry>& entries,
                                        SequenceId sequence, std::int64_t offset = 0,
                                        std::optional<std::int64_t> min_index = {}) {
  VerificationReport report;
  report.claim = std::string("bfile:") + sequence_name(sequence);
  if (entries.empty()) {
    report.range = "empty b-file";
    return report;
  }
  report.range = "indices [" + std::to_string(entries.front().index) + ", " +
                 std::to_string(entries.back().index) + "], offset " +
                 std::to_string(offset);

  std::int64_t skipped = 0;
  std::int64_t gaps = 0;
  std::optional<std::int64_t> last_index;
  for (const BFileEntry& entry : entries) {
    if (last_index && entry.index != *last_index + 1) ++gaps;
    last_index = entry.index;
    if (min_index && entry.index < *min_index) {
      ++skipped;
      continue;
    }
    const std::int64_t n = entry.index + offset;
    std::string why_not;
    const auto expected = detail::sequence_value(sequence, n, &why_not);
    ++report.checked;
    if (!expected) {
      report.pass = false;
      report.counterexample =
          Counterexample{n, "index " + std::to_string(entry.index) + ": " + why_not};
      break;
    }
    if (*expected != entry.value) {
      report.pass = false;
      report.counterexample = Counterexample{
          n, "index " + std::to_string(entry.index) + " file=" +
                 std::to_string(entry.value) + " computed=" + std::to_string(*expected)};
      break;
    }
  }
  if (skipped > 0) {
    report.notes.push_back("skipped " + std::to_string(skipped) +
                           " entries below index " + std::to_string(*min_index));
  }
  if (gaps > 0) {
    report.notes.push_back("index gaps: " + std::to_string(gaps) + " (non-fatal)");
  }
  return report;
}

}  // namespace circulant
