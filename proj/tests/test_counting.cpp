#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "circulant/counting.hpp"

namespace {

using namespace circulant;

// Exhaustive oracle for a^2 + ab + b^2 = q: scan the full box.
std::vector<std::pair<std::int64_t, std::int64_t>> brute_loeschian(std::int64_t q) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t bound = isqrt(q);
  for (std::int64_t a = 0; a <= bound; ++a) {
    for (std::int64_t b = 0; b <= bound; ++b) {
      if (a * a + a * b + b * b == q) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::int64_t> brute_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

TEST(Isqrt, ExactOnBoundaries) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(2), 1);
  EXPECT_EQ(isqrt(3), 1);
  EXPECT_EQ(isqrt(4), 2);
  EXPECT_EQ(isqrt(999'999'999'999'999'999), 999'999'999);
  EXPECT_THROW(isqrt(-1), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> dist(0, std::int64_t{1} << 62);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t n = dist(rng);
    const std::int64_t r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
}

TEST(PerfectSquare, NoFloatingPointMisclassification) {
  for (std::int64_t r : {0LL, 1LL, 2LL, 94906265LL, 3037000499LL}) {
    std::int64_t root = -1;
    EXPECT_TRUE(is_perfect_square(r * r, &root));
    EXPECT_EQ(root, r);
    if (r >= 2) {
      EXPECT_FALSE(is_perfect_square(r * r - 1));
      EXPECT_FALSE(is_perfect_square(r * r + 1));
    }
  }
  EXPECT_FALSE(is_perfect_square(-4));
}

TEST(Divisors, SpecExamples) {
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(divisors(8), (std::vector<std::int64_t>{1, 2, 4, 8}));
  EXPECT_EQ(divisors(27), (std::vector<std::int64_t>{1, 3, 9, 27}));
  EXPECT_THROW(divisors(0), std::invalid_argument);
}

TEST(Divisors, MatchesBruteForce) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(divisors(n), brute_divisors(n)) << "n=" << n;
  }
}

TEST(Divisors, TermsMultiplyBackToN) {
  for (std::int64_t n : {1LL, 8LL, 27LL, 360LL, 7919LL}) {
    const auto terms = divisor_terms(n);
    EXPECT_EQ(terms.size(), divisors(n).size());
    for (const DivisorTerm& t : terms) {
      EXPECT_EQ(t.s * t.q, n);
    }
  }
}

TEST(Loeschian, SpecExamples) {
  using pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  EXPECT_EQ(solve_loeschian(1), (pairs{{0, 1}, {1, 0}}));
  EXPECT_EQ(solve_loeschian(2), pairs{});
  EXPECT_EQ(solve_loeschian(3), (pairs{{1, 1}}));
  EXPECT_EQ(solve_loeschian(7), (pairs{{1, 2}, {2, 1}}));
  EXPECT_THROW(solve_loeschian(0), std::invalid_argument);
}

TEST(Loeschian, AgreesWithExhaustiveScan) {
  for (std::int64_t q = 1; q <= 3000; ++q) {
    const auto fast = solve_loeschian(q);
    EXPECT_EQ(fast, brute_loeschian(q)) << "q=" << q;
    for (const auto& [a, b] : fast) {
      EXPECT_EQ(a * a + a * b + b * b, q);
    }
  }
}

TEST(NuNaive, SpecExamples) {
  EXPECT_EQ(nu_naive(1).reps, (std::vector<Triple>{{0, 0, 1}}));
  EXPECT_TRUE(nu_naive(3).reps.empty());
  EXPECT_EQ(nu_naive(8).reps, (std::vector<Triple>{{0, 0, 2}, {2, 3, 3}}));
  EXPECT_EQ(nu_naive(27).reps, (std::vector<Triple>{{0, 0, 3}, {2, 3, 4}}));
  EXPECT_THROW(nu_naive(0), std::invalid_argument);
}

// The pruned scan against the unpruned triple loop.
TEST(NuNaive, ParanoidModeAgrees) {
  for (std::int64_t n = 1; n <= 400; ++n) {
    EXPECT_EQ(nu_naive(n).reps, nu_naive(n, true).reps) << "n=" << n;
  }
}

TEST(NuDivisor, SpecExamples) {
  EXPECT_EQ(nu_divisor(7).reps, (std::vector<Triple>{{2, 2, 3}}));
  EXPECT_EQ(nu_divisor(8).reps, (std::vector<Triple>{{0, 0, 2}, {2, 3, 3}}));
  EXPECT_EQ(nu_divisor(9).reps, (std::vector<Triple>{{0, 1, 2}}));
}

TEST(NuDivisor, EmittedTriplesAreValid) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dist(1, 100000);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = dist(rng);
    const RepresentationSet set = nu_divisor(n);
    for (std::size_t j = 0; j < set.reps.size(); ++j) {
      EXPECT_TRUE(is_admissible(set.reps[j]));
      EXPECT_EQ(eval_f(set.reps[j]), n);
      if (j > 0) EXPECT_LT(set.reps[j - 1], set.reps[j]);
    }
  }
}

TEST(Backends, AgreeOnInitialSegment) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    EXPECT_EQ(nu_naive(n), nu_divisor(n)) << "n=" << n;
  }
}

TEST(Nu, BothBackendExamples) {
  const RepresentationSet r64 = nu(64, Backend::both);
  EXPECT_EQ(r64.reps, (std::vector<Triple>{{0, 0, 4}, {4, 6, 6}, {21, 21, 22}}));
  EXPECT_EQ(nu(2, Backend::both).reps, (std::vector<Triple>{{0, 1, 1}}));
  EXPECT_TRUE(nu(6, Backend::both).reps.empty());
}

TEST(Nu, MismatchCarriesBothSets) {
  RepresentationSet a{8, {{0, 0, 2}}};
  RepresentationSet b{8, {{0, 0, 2}, {2, 3, 3}}};
  const backend_mismatch err(a, b);
  EXPECT_EQ(err.naive_result, a);
  EXPECT_EQ(err.divisor_result, b);
  EXPECT_NE(std::string(err.what()).find("n=8"), std::string::npos);
}

TEST(NuRange, SpecExamples) {
  const RangeReport r = nu_range(1, 10, Backend::divisor);
  EXPECT_EQ(r.counts, (std::vector<std::int64_t>{1, 1, 0, 1, 1, 0, 1, 2, 1, 1}));
  EXPECT_EQ(nu_range(3, 3, Backend::naive).nu_of(3), 0);
  EXPECT_EQ(nu_range(27, 27, Backend::both).nu_of(27), 2);
  EXPECT_THROW(nu_range(5, 4, Backend::divisor), std::invalid_argument);
  EXPECT_THROW(nu_range(0, 4, Backend::divisor), std::invalid_argument);
}

TEST(NuRange, DeterministicAcrossWorkerCounts) {
  const RangeReport serial = nu_range(1, 600, Backend::divisor, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    EXPECT_EQ(nu_range(1, 600, Backend::divisor, threads), serial);
  }
  // both-backend sweep cross-checks full sets internally
  EXPECT_NO_THROW(nu_range(1, 300, Backend::both, 4));
}

TEST(NuRange, ExceptionalResiduesAreExactlyTheZeros) {
  const RangeReport r = nu_range(1, 500, Backend::divisor);
  for (std::int64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(r.nu_of(n) == 0, n % 9 == 3 || n % 9 == 6) << "n=" << n;
  }
}

TEST(NuRange, PrimesHaveUniqueRepresentations) {
  for (const std::int64_t p : primes_up_to(200)) {
    if (p == 3) continue;
    EXPECT_EQ(nu_divisor(p).nu(), 1) << "p=" << p;
    EXPECT_EQ(nu_divisor(2 * p).nu(), 1) << "p=" << p;
  }
}

TEST(Exports, CsvAndBFileBytes) {
  const RangeReport r = nu_range(1, 5, Backend::divisor);
  EXPECT_EQ(to_csv(r), "n,nu\n1,1\n2,1\n3,0\n4,1\n5,1\n");
  EXPECT_EQ(to_bfile(r), "1 1\n2 1\n3 0\n4 1\n5 1\n");
}

}  // namespace
