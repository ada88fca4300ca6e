#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "circulant/harness.hpp"

namespace {

using namespace circulant;

std::string g_data_dir;  // set from argv in main below

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(VerifyExceptional, SpecExamples) {
  const VerificationReport r100 = verify_exceptional(100);
  EXPECT_TRUE(r100.pass);
  EXPECT_EQ(r100.checked, 100);
  EXPECT_EQ(r100.claim, "exceptional-residues");

  EXPECT_TRUE(verify_exceptional(9).pass);
  EXPECT_TRUE(verify_exceptional(1).pass);
  EXPECT_THROW(verify_exceptional(0), std::invalid_argument);
}

TEST(VerifyExceptional, ReportsAreReproducible) {
  const VerificationReport a = verify_exceptional(500, 1);
  const VerificationReport b = verify_exceptional(500, 4);
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.summary_line(), b.summary_line());
  EXPECT_NE(a.summary_line().find("result=PASS"), std::string::npos);
}

TEST(VerifyPrimes, SpecExamples) {
  EXPECT_TRUE(verify_primes(100).pass);
  EXPECT_TRUE(verify_primes(2).pass);
  // the branch facts the sweep relies on
  EXPECT_EQ(nu_divisor(7).reps[0], (Triple{2, 2, 3}));
  EXPECT_EQ(nu_divisor(14).reps[0], (Triple{4, 5, 5}));
  EXPECT_EQ(eval_f(4, 5, 5), 14);
  EXPECT_EQ(nu_divisor(2).reps[0], (Triple{0, 1, 1}));
  EXPECT_EQ(nu_divisor(4).reps[0], (Triple{1, 1, 2}));
}

TEST(VerifyPow8, SpecExamples) {
  const VerificationReport r = verify_pow8(2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checked, 3);
  EXPECT_TRUE(verify_pow8(0).pass);
  EXPECT_TRUE(verify_pow8(4).pass);

  // the unique not-all-even representation of 8 is (2,3,3)
  const RepresentationSet r8 = nu_divisor(8);
  std::vector<Triple> not_all_even;
  for (const Triple& t : r8.reps) {
    if (t.x % 2 != 0 || t.y % 2 != 0 || t.z % 2 != 0) not_all_even.push_back(t);
  }
  ASSERT_EQ(not_all_even.size(), 1u);
  EXPECT_EQ(not_all_even[0], (Triple{2, 3, 3}));
}

TEST(SmallestK, KnownValuesAndCaps) {
  EXPECT_EQ(smallest_k(1), 1);
  EXPECT_EQ(smallest_k(2), 8);

  // independent oracle: upward scan with the paranoid naive backend
  std::int64_t expected3 = 0;
  for (std::int64_t m = 1;; ++m) {
    if (nu_naive(m, true).nu() == 3) {
      expected3 = m;
      break;
    }
  }
  EXPECT_EQ(expected3, 28);
  EXPECT_EQ(smallest_k(3), 28);

  EXPECT_EQ(smallest_k(2, 5), std::nullopt);   // user cap exhausted
  EXPECT_EQ(smallest_k(1, 1), 1);
  EXPECT_THROW(smallest_k(0), std::invalid_argument);
}

TEST(SmallestK, ResultIsMinimal) {
  const auto k4 = smallest_k(4);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(nu_divisor(*k4).nu(), 4);
  for (std::int64_t m = 1; m < *k4; ++m) {
    EXPECT_NE(nu_divisor(m).nu(), 4) << "m=" << m;
  }
}

TEST(ParseBFile, SpecExamples) {
  const auto entries = parse_bfile("# comment\n0 1\n1 1\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0], (BFileEntry{0, 1}));
  EXPECT_EQ(entries[1], (BFileEntry{1, 1}));

  EXPECT_TRUE(parse_bfile("").empty());
  EXPECT_TRUE(parse_bfile("\n# only comments\n\n").empty());
}

TEST(ParseBFile, ToleratesWhitespaceAndCrlf) {
  const auto entries = parse_bfile("  1 5\r\n\t2\t6\r\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[1], (BFileEntry{2, 6}));
}

TEST(ParseBFile, ErrorsCarryLineNumbers) {
  try {
    parse_bfile("1 1\nhello\n");
    FAIL() << "expected bfile_parse_error";
  } catch (const bfile_parse_error& e) {
    EXPECT_EQ(e.line_number, 2u);
  }
  try {
    parse_bfile("# c\n1 1\n1 2\n");
    FAIL() << "expected bfile_parse_error";
  } catch (const bfile_parse_error& e) {
    EXPECT_EQ(e.line_number, 3u);  // duplicate index
  }
  EXPECT_THROW(parse_bfile("3 4 5\n"), bfile_parse_error);
  EXPECT_THROW(parse_bfile("5 1\n4 1\n"), bfile_parse_error);
}

TEST(CompareBFile, EmptyPassesVacuously) {
  const VerificationReport r = compare_bfile({}, SequenceId::nu);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checked, 0);
}

TEST(CompareBFile, MatchesGeneratorsAndReportsMismatches) {
  std::vector<BFileEntry> entries;
  for (std::int64_t n = 1; n <= 50; ++n) entries.push_back({n, nu_divisor(n).nu()});
  EXPECT_TRUE(compare_bfile(entries, SequenceId::nu).pass);

  entries[10].value += 1;
  const VerificationReport bad = compare_bfile(entries, SequenceId::nu);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_EQ(bad.counterexample->n, entries[10].index);

  // offset: indices shifted down by one, generator argument = index + 1
  std::vector<BFileEntry> shifted;
  for (std::int64_t i = 0; i < 30; ++i) shifted.push_back({i, nu_divisor(i + 1).nu()});
  EXPECT_TRUE(compare_bfile(shifted, SequenceId::nu, 1).pass);

  // a(0) handling: skip below index 1; nu(0) = 0 by convention otherwise
  std::vector<BFileEntry> with_zero{{0, 1}, {1, 1}, {2, 1}};
  EXPECT_TRUE(compare_bfile(with_zero, SequenceId::nu, 0, 1).pass);
  EXPECT_FALSE(compare_bfile(with_zero, SequenceId::nu, 0).pass);

  // index gaps are reported but non-fatal
  std::vector<BFileEntry> gappy{{1, 1}, {4, 1}};
  const VerificationReport gap_report = compare_bfile(gappy, SequenceId::nu);
  EXPECT_TRUE(gap_report.pass);
  ASSERT_EQ(gap_report.notes.size(), 1u);
  EXPECT_NE(gap_report.notes[0].find("index gaps"), std::string::npos);
}

TEST(CompareBFile, AdmissibleNSequence) {
  const std::vector<BFileEntry> prefix{{1, 1}, {2, 2}, {3, 4}, {4, 5}, {5, 7},
                                       {6, 8}, {7, 9}, {8, 10}, {9, 11}, {10, 13}};
  EXPECT_TRUE(compare_bfile(prefix, SequenceId::admissible_n).pass);
}

TEST(CompareBFile, SmallestKSequence) {
  const std::vector<BFileEntry> prefix{{1, 1}, {2, 8}, {3, 28}};
  EXPECT_TRUE(compare_bfile(prefix, SequenceId::smallest_k).pass);
}

TEST(Fixtures, VendoredBFilesMatchTheGenerators) {
  if (g_data_dir.empty()) GTEST_SKIP() << "data dir not provided";

  const auto b261029 = parse_bfile(read_file(g_data_dir + "/b261029.txt"));
  ASSERT_FALSE(b261029.empty());
  EXPECT_EQ(b261029.front(), (BFileEntry{0, 1}));  // a(0) documented in the manifest
  const VerificationReport nu_report = compare_bfile(b261029, SequenceId::nu, 0, 1);
  EXPECT_TRUE(nu_report.pass) << nu_report.to_text();

  const auto b074232 = parse_bfile(read_file(g_data_dir + "/b074232.txt"));
  const VerificationReport adm_report = compare_bfile(b074232, SequenceId::admissible_n);
  EXPECT_TRUE(adm_report.pass) << adm_report.to_text();

  const auto b260935 = parse_bfile(read_file(g_data_dir + "/b260935.txt"));
  const VerificationReport k_report = compare_bfile(b260935, SequenceId::smallest_k);
  EXPECT_TRUE(k_report.pass) << k_report.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc > 1) g_data_dir = argv[1];
  return RUN_ALL_TESTS();
}
