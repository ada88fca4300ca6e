// circulant: CLI for counting, enumerating and constructing
// representations of positive integers by x^3 + y^3 + z^3 - 3xyz.
//
// Exit codes: 0 success/PASS, 1 FAIL or backend mismatch, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "circulant/circulant.hpp"

namespace {

using nlohmann::json;
using namespace circulant;

enum class Format { text, json_out, csv, bfile };

// Bounded-integer backends are exercised well inside int64 up to here;
// refuse anything larger with a clear message. Lift is exempt (arbitrary
// precision).
constexpr std::int64_t kMaxQueryN = 1'000'000'000'000;
constexpr std::int64_t kMaxRangeSpan = 10'000'000;
constexpr std::int64_t kMaxLiftDepth = 12;
constexpr std::int64_t kSmallestKCapFreeMax = 7;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

bool check_query_bound(std::int64_t n, int& rc) {
  if (n > kMaxQueryN) {
    rc = usage_error("n exceeds the overflow-safe bound " + std::to_string(kMaxQueryN) +
                     " of the bounded-integer backends");
    return false;
  }
  return true;
}

json triple_to_json(const Triple& t) { return json::array({t.x, t.y, t.z}); }

json report_to_json(const VerificationReport& r) {
  json j;
  j["claim"] = r.claim;
  j["range"] = r.range;
  j["checked"] = r.checked;
  j["pass"] = r.pass;
  if (r.counterexample) {
    j["counterexample"] = {{"n", r.counterexample->n}, {"detail", r.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

int print_report(const VerificationReport& report, Format format) {
  if (format == Format::json_out) {
    std::cout << report_to_json(report).dump() << '\n';
  } else {
    std::cout << report.to_text();
    std::cout << report.summary_line() << '\n';
  }
  return report.pass ? 0 : 1;
}

int run_count(std::int64_t n, Backend backend, Format format) {
  int rc = 0;
  if (!check_query_bound(n, rc)) return rc;
  const RepresentationSet set = nu(n, backend);
  switch (format) {
    case Format::text:
      std::cout << "nu(" << n << ") = " << set.nu()
                << (backend == Backend::both ? " (backends agree)" : "") << '\n';
      break;
    case Format::json_out: {
      json j{{"n", n}, {"nu", set.nu()}, {"backend", backend_name(backend)}};
      if (backend == Backend::both) j["agree"] = true;
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "n,nu\n" << n << ',' << set.nu() << '\n';
      break;
    case Format::bfile:
      std::cout << n << ' ' << set.nu() << '\n';
      break;
  }
  return 0;
}

int run_reps(std::int64_t n, Backend backend, Format format) {
  int rc = 0;
  if (!check_query_bound(n, rc)) return rc;
  if (format == Format::bfile) return usage_error("reps: bfile format is not applicable");
  const RepresentationSet set = nu(n, backend);
  switch (format) {
    case Format::text:
      for (const Triple& t : set.reps) std::cout << t << '\n';
      break;
    case Format::json_out: {
      json j = json::array();
      for (const Triple& t : set.reps) j.push_back(triple_to_json(t));
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "x,y,z\n";
      for (const Triple& t : set.reps) std::cout << t.x << ',' << t.y << ',' << t.z << '\n';
      break;
    case Format::bfile:
      break;  // unreachable
  }
  return 0;
}

int run_construct(std::int64_t n, Format format) {
  int rc = 0;
  if (!check_query_bound(n, rc)) return rc;
  const std::optional<Triple> t = construct_any(n);
  switch (format) {
    case Format::text:
      if (t) {
        std::cout << "construct(" << n << ") = " << *t << '\n';
      } else {
        std::cout << "construct(" << n << ") = none\n";
      }
      break;
    case Format::json_out: {
      json j{{"n", n}, {"triple", t ? triple_to_json(*t) : json(nullptr)}};
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "x,y,z\n";
      if (t) std::cout << t->x << ',' << t->y << ',' << t->z << '\n';
      break;
    case Format::bfile:
      return usage_error("construct: bfile format is not applicable");
  }
  return 0;
}

int run_lift(const std::string& xs, const std::string& ys, const std::string& zs,
             std::int64_t depth, Format format) {
  BigTriple seed;
  try {
    seed = BigTriple{BigUint::from_string(xs), BigUint::from_string(ys),
                     BigUint::from_string(zs)};
  } catch (const std::invalid_argument& e) {
    return usage_error(std::string("lift: ") + e.what());
  }
  if (!is_admissible(seed)) {
    return usage_error("lift: seed must satisfy 0 <= x <= y <= z with z >= x+1");
  }
  if (depth < 0 || depth > kMaxLiftDepth) {
    return usage_error("lift: depth must be in [0, " + std::to_string(kMaxLiftDepth) + "]");
  }
  const LiftChain chain = lift_chain(seed, depth);
  switch (format) {
    case Format::text:
      std::cout << lift_chain_report(chain);
      break;
    case Format::csv:
      std::cout << lift_chain_csv(chain);
      break;
    case Format::json_out: {
      json j = json::array();
      for (const LiftEntry& e : chain.entries) {
        const auto d = ap_difference(e.triple);
        j.push_back({{"level", e.level},
                     {"triple", {e.triple.x.to_string(), e.triple.y.to_string(),
                                 e.triple.z.to_string()}},
                     {"value", e.value.to_string()},
                     {"digits", e.value.digit_count()},
                     {"ap_diff", d ? json(d->to_string()) : json(nullptr)}});
      }
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::bfile:
      return usage_error("lift: bfile format is not applicable");
  }
  return 0;
}

int run_range(std::int64_t lo, std::int64_t hi, Backend backend, Format format,
              unsigned threads) {
  if (lo < 1 || hi < lo) return usage_error("range: require 1 <= lo <= hi");
  int rc = 0;
  if (!check_query_bound(hi, rc)) return rc;
  if (hi - lo + 1 > kMaxRangeSpan) {
    return usage_error("range: span exceeds " + std::to_string(kMaxRangeSpan));
  }
  const RangeReport report = nu_range(lo, hi, backend, threads);
  switch (format) {
    case Format::text:
      for (std::int64_t n = lo; n <= hi; ++n) {
        std::cout << "nu(" << n << ") = " << report.nu_of(n) << '\n';
      }
      break;
    case Format::csv:
      std::cout << to_csv(report);
      break;
    case Format::bfile:
      std::cout << to_bfile(report);
      break;
    case Format::json_out: {
      json j = json::array();
      for (std::int64_t n = lo; n <= hi; ++n) j.push_back({n, report.nu_of(n)});
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

int run_smallest_k(std::int64_t n, std::optional<std::int64_t> cap, Format format) {
  if (!cap && n > kSmallestKCapFreeMax) {
    return usage_error("smallest-k: the default cap 8^(n-1) is huge for n > " +
                       std::to_string(kSmallestKCapFreeMax) + "; pass an explicit --cap");
  }
  if (cap && *cap < 1) return usage_error("smallest-k: cap must be positive");
  if (cap) {
    int rc = 0;
    if (!check_query_bound(*cap, rc)) return rc;
  }
  const std::int64_t effective_cap = cap ? *cap : ipow_checked(8, n - 1);
  const std::optional<std::int64_t> k = smallest_k(n, effective_cap);
  if (format == Format::json_out) {
    json j{{"n", n},
           {"cap", effective_cap},
           {"k", k ? json(*k) : json(nullptr)},
           {"scanned", k ? *k : effective_cap}};  // full prefix scan length
    std::cout << j.dump() << '\n';
  } else if (k) {
    std::cout << "smallest_k(" << n << ") = " << *k << '\n';
  } else {
    std::cout << "smallest_k(" << n << ") = not found (cap " << effective_cap << ")\n";
  }
  return k ? 0 : 1;
}

int run_verify(const std::string& claim, std::optional<std::int64_t> limit,
               unsigned threads, Format format) {
  VerificationReport report;
  if (claim == "exceptional") {
    report = verify_exceptional(limit.value_or(100'000), threads);
  } else if (claim == "primes") {
    report = verify_primes(limit.value_or(10'000));
  } else if (claim == "pow8") {
    report = verify_pow8(limit.value_or(8));
  } else {
    return usage_error("verify: unknown claim '" + claim + "'");
  }
  return print_report(report, format);
}

int run_oeis_compare(const std::string& path, SequenceId sequence, std::int64_t offset,
                     std::optional<std::int64_t> min_index, Format format) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return usage_error("oeis compare: cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  const std::vector<BFileEntry> entries = parse_bfile(text);
  const VerificationReport report = compare_bfile(entries, sequence, offset, min_index);
  return print_report(report, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"representations of positive integers by x^3 + y^3 + z^3 - 3xyz"};
  app.require_subcommand(1);

  const std::map<std::string, Backend> backend_names{
      {"naive", Backend::naive}, {"divisor", Backend::divisor}, {"both", Backend::both}};
  const std::map<std::string, Format> format_names{{"text", Format::text},
                                                   {"json", Format::json_out},
                                                   {"csv", Format::csv},
                                                   {"bfile", Format::bfile}};
  const std::map<std::string, SequenceId> sequence_names{
      {"nu", SequenceId::nu},
      {"admissible", SequenceId::admissible_n},
      {"smallest-k", SequenceId::smallest_k}};

  Backend backend = Backend::divisor;
  Format format = Format::text;
  unsigned threads = 0;
  std::int64_t n = 1;
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::int64_t depth = 1;
  std::int64_t offset = 0;
  std::optional<std::int64_t> cap;
  std::optional<std::int64_t> limit;
  std::optional<std::int64_t> min_index;
  std::string claim;
  std::string path;
  std::string lift_x, lift_y, lift_z;
  SequenceId sequence = SequenceId::nu;

  const auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend,-b", backend, "counting backend")
        ->transform(CLI::CheckedTransformer(backend_names, CLI::ignore_case))
        ->envname("CIRCULANT_BACKEND");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format,-f", format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->envname("CIRCULANT_FORMAT");
  };
  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads,-t", threads, "worker count (0 = all cores)")
        ->envname("CIRCULANT_THREADS");
  };

  CLI::App* count = app.add_subcommand("count", "print nu(n)");
  count->add_option("n", n, "the integer to represent")->required()->check(CLI::PositiveNumber);
  add_backend(count);
  add_format(count);

  CLI::App* reps = app.add_subcommand("reps", "enumerate all representations of n");
  reps->add_option("n", n, "the integer to represent")->required()->check(CLI::PositiveNumber);
  add_backend(reps);
  add_format(reps);

  CLI::App* construct = app.add_subcommand("construct", "closed-form representation of n");
  construct->add_option("n", n, "the integer to represent")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(construct);

  CLI::App* lift = app.add_subcommand("lift", "iterate the cube-lift from a seed triple");
  lift->add_option("x", lift_x, "seed x (decimal, arbitrary precision)")->required();
  lift->add_option("y", lift_y, "seed y")->required();
  lift->add_option("z", lift_z, "seed z")->required();
  lift->add_option("--depth,-d", depth, "number of lifts")->required();
  add_format(lift);

  CLI::App* range = app.add_subcommand("range", "nu(n) for every n in [lo, hi]");
  range->add_option("lo", lo, "range start")->required()->check(CLI::PositiveNumber);
  range->add_option("hi", hi, "range end")->required()->check(CLI::PositiveNumber);
  add_backend(range);
  add_format(range);
  add_threads(range);

  CLI::App* smallest = app.add_subcommand("smallest-k", "smallest m with nu(m) = n");
  smallest->add_option("n", n, "target count")->required()->check(CLI::PositiveNumber);
  smallest->add_option("--cap", cap, "stop scanning above this m")->envname("CIRCULANT_CAP");
  add_format(smallest);

  CLI::App* verify = app.add_subcommand("verify", "mechanically verify a claim");
  verify->add_option("claim", claim, "one of: exceptional, primes, pow8")->required();
  verify->add_option("--limit,-l", limit, "sweep bound (n, p, or k depending on claim)")
      ->envname("CIRCULANT_LIMIT");
  add_threads(verify);
  add_format(verify);

  CLI::App* oeis = app.add_subcommand("oeis", "OEIS b-file utilities");
  oeis->require_subcommand(1);
  CLI::App* compare = oeis->add_subcommand("compare", "compare a b-file against a generator");
  compare->add_option("path", path, "b-file path, or - for stdin")->required();
  compare->add_option("--seq,-s", sequence, "generator: nu, admissible, smallest-k")
      ->required()
      ->transform(CLI::CheckedTransformer(sequence_names, CLI::ignore_case));
  compare->add_option("--offset,-o", offset, "generator argument = index + offset")
      ->envname("CIRCULANT_OFFSET");
  compare->add_option("--min-index", min_index, "skip entries below this index");
  add_format(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return run_count(n, backend, format);
    if (reps->parsed()) return run_reps(n, backend, format);
    if (construct->parsed()) return run_construct(n, format);
    if (lift->parsed()) return run_lift(lift_x, lift_y, lift_z, depth, format);
    if (range->parsed()) return run_range(lo, hi, backend, format, threads);
    if (smallest->parsed()) return run_smallest_k(n, cap, format);
    if (verify->parsed()) return run_verify(claim, limit, threads, format);
    if (compare->parsed()) {
      return run_oeis_compare(path, sequence, offset, min_index, format);
    }
  } catch (const backend_mismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const bfile_parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::overflow_error& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return usage_error("no subcommand given");
}
