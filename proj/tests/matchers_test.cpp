#include "distq/matchers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "distq/error.hpp"
#include "fuzz_cases.hpp"
#include "oracle.hpp"

namespace distq {
namespace {

const std::string kText = "abbaabbaababbabbaaabaabaabbaaa";
const std::string kPattern = "abaabbaaa";

Occurrences range(std::int64_t from, std::int64_t to) {
  Occurrences out;
  for (auto p = from; p <= to; ++p) out.push_back(p);
  return out;
}

TEST(NaiveSearch, Basics) {
  EXPECT_EQ(naive_search(kText, kPattern), Occurrences{22});
  EXPECT_EQ(naive_search("aaaa", "aa"), (Occurrences{1, 2, 3}));
  EXPECT_TRUE(naive_search("abc", "d").empty());
  EXPECT_TRUE(naive_search("ab", "abc").empty());
  EXPECT_TRUE(naive_search("", "a").empty());
  EXPECT_THROW(naive_search("abc", ""), ContractViolation);
}

TEST(KmpSearch, Basics) {
  EXPECT_EQ(kmp_search(kText, kPattern).occurrences, Occurrences{22});
  EXPECT_EQ(kmp_search(kPattern, kPattern).occurrences, Occurrences{1});
  EXPECT_TRUE(kmp_search("ab", "abc").occurrences.empty());
  EXPECT_THROW(kmp_search("abc", ""), ContractViolation);

  const std::string as(100, 'a');
  const auto out = kmp_search(as, "aa");
  EXPECT_EQ(out.occurrences, range(1, 99));
  EXPECT_LE(out.stats.char_comparisons, 200u);
}

TEST(HashqSearch, Basics) {
  EXPECT_EQ(hashq_search(kText, kPattern, 3).occurrences, Occurrences{22});
  EXPECT_EQ(hashq_search(std::string(50, 'a'), "aaa", 2).occurrences, range(1, 48));
  EXPECT_THROW(hashq_search("abc", "ab", 3), ConfigError);
  EXPECT_THROW(hashq_search("abc", "", 1), ConfigError);
  EXPECT_THROW(hashq_search("abcdefghijk", "abcdefghij", 9), ConfigError);
}

TEST(HashqSearch, UnknownSuffixGramsShiftByFullAmount) {
  SearchTrace trace;
  const auto out = hashq_search(std::string(12, 'z'), "abc", 2, &trace);
  EXPECT_TRUE(out.occurrences.empty());
  ASSERT_FALSE(trace.shifts.empty());
  for (const auto& s : trace.shifts) {
    EXPECT_EQ(s.kind, ShiftKind::kHq);
    EXPECT_EQ(s.amount, 2);
  }
  EXPECT_EQ(out.stats.char_comparisons, 0u);
}

TEST(DistqSearch, WorkedExampleTrace) {
  const auto profile = build_profile(kPattern, 3);
  SearchTrace trace;
  const auto out = distq_search(kText, profile, &trace);
  EXPECT_EQ(out.occurrences, Occurrences{22});
  const std::vector<ShiftEvent> expected = {{ShiftKind::kHq, 1},   {ShiftKind::kDist, 4},
                                            {ShiftKind::kHq, 2},   {ShiftKind::kDist, 5},
                                            {ShiftKind::kHq, 6},   {ShiftKind::kKmp, 3}};
  EXPECT_EQ(trace.shifts, expected);
  EXPECT_EQ(trace.positions, (std::vector<std::int64_t>{8, 7, 3}));
  // Hashes of T[7:9], T[12:14], T[19:21].
  EXPECT_EQ(trace.hash_ends, (std::vector<std::int64_t>{9, 14, 21}));
  EXPECT_EQ(out.stats.hq_shifts, 3u);
  EXPECT_EQ(out.stats.dist_shifts, 2u);
  EXPECT_EQ(out.stats.kmp_shifts, 1u);
  EXPECT_EQ(out.stats.windows, 7u);
  EXPECT_EQ(out.stats.first_char_checks, 3u);
  EXPECT_EQ(out.stats.hashed_char_reads, 9u);
  // Attempt 4: P[2]; attempt 6: P[2..6]; attempt 7: P[3..9].
  EXPECT_EQ(out.stats.char_comparisons, 1u + 5u + 7u);
}

TEST(DistqSearch, SelfMatchAndAbsentPattern) {
  EXPECT_EQ(distq_search(kPattern, build_profile(kPattern, 3)).occurrences, Occurrences{1});
  EXPECT_TRUE(distq_search(std::string(200, 'a'), build_profile("baaaaaaa", 3)).occurrences.empty());
  EXPECT_TRUE(distq_search("ab", build_profile("abc", 2)).occurrences.empty());
  EXPECT_TRUE(distq_search("", build_profile("a", 1)).occurrences.empty());
}

TEST(DistqSearch, SingleBytePattern) {
  const auto profile = build_profile("b", 1);
  EXPECT_EQ(distq_search("abcabb", profile).occurrences, (Occurrences{2, 5, 6}));
  EXPECT_EQ(ldistq_search("abcabb", profile).occurrences, (Occurrences{2, 5, 6}));
}

TEST(LdistqSearch, WorkedExampleMatchesDistq) {
  const auto profile = build_profile(kPattern, 3, PreprocessMode::kRolling);
  SearchTrace dtrace;
  SearchTrace ltrace;
  const auto d = distq_search(kText, profile, &dtrace);
  const auto l = ldistq_search(kText, profile, &ltrace);
  EXPECT_EQ(l.occurrences, Occurrences{22});
  EXPECT_EQ(ltrace.shifts, dtrace.shifts);
  EXPECT_EQ(ltrace.positions, dtrace.positions);
  EXPECT_EQ(ldistq_search(kPattern, profile).occurrences, Occurrences{1});
}

TEST(LdistqSearch, AdversarialTextHashesLinearly) {
  const std::size_t n = 10'000;
  const int q = 8;
  const std::string text(n, 'a');
  const std::string pattern = "b" + std::string(8, 'a');
  const auto profile = build_profile(pattern, q);
  const auto d = distq_search(text, profile);
  const auto l = ldistq_search(text, profile);
  EXPECT_TRUE(d.occurrences.empty());
  EXPECT_TRUE(l.occurrences.empty());
  EXPECT_LE(l.stats.hashed_char_reads, 2 * n + q);
  EXPECT_GE(d.stats.hashed_char_reads, q * (n - pattern.size()) / 2);
}

TEST(Matchers, AgreeWithOracleOnFuzzCases) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 1500; ++iter) {
    const auto c = fuzz::make_case(rng, 2000);
    const auto expected = oracle::occurrences(c.text, c.pattern);
    const auto profile = build_profile(c.pattern, c.q);
    SearchTrace dtrace;
    SearchTrace ltrace;
    const auto k = kmp_search(c.text, c.pattern);
    const auto h = hashq_search(c.text, c.pattern, c.q);
    const auto d = distq_search(c.text, profile, &dtrace);
    const auto l = ldistq_search(c.text, profile, &ltrace);
    const auto n = c.text.size();
    ASSERT_EQ(naive_search(c.text, c.pattern), expected);
    ASSERT_EQ(k.occurrences, expected) << "kmp " << c.pattern;
    ASSERT_EQ(h.occurrences, expected) << "hashq q=" << c.q << " " << c.pattern;
    ASSERT_EQ(d.occurrences, expected) << "distq q=" << c.q << " " << c.pattern;
    ASSERT_EQ(l.occurrences, expected) << "ldistq q=" << c.q << " " << c.pattern;
    ASSERT_LE(k.stats.char_comparisons, 2 * n);
    ASSERT_LE(d.stats.char_comparisons, 2 * n);
    ASSERT_LE(l.stats.char_comparisons, 2 * n);
    ASSERT_EQ(dtrace.shifts, ltrace.shifts);
    ASSERT_EQ(dtrace.positions, ltrace.positions);
    ASSERT_EQ(dtrace.hash_ends, ltrace.hash_ends);
    ASSERT_TRUE(std::is_sorted(ltrace.hash_ends.begin(), ltrace.hash_ends.end()));
    ASSERT_LE(l.stats.hashed_char_reads, d.stats.hashed_char_reads);
  }
}

TEST(Matchers, EmbeddedOccurrencesAreNeverSkipped) {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const int sigma = fuzz::kSigmas[iter % 4];
    const char first = fuzz::first_letter(sigma);
    const auto pattern = oracle::random_string(rng, 1 + rng() % 20, sigma, first);
    auto text = oracle::random_string(rng, 500, sigma, first);
    std::vector<std::int64_t> planted;
    for (std::size_t at = rng() % 7; at + pattern.size() <= text.size();
         at += pattern.size() + rng() % 40) {
      text.replace(at, pattern.size(), pattern);
      planted.push_back(static_cast<std::int64_t>(at) + 1);
    }
    const int q = 1 + static_cast<int>(rng() % std::min<std::size_t>(8, pattern.size()));
    const auto found = distq_search(text, build_profile(pattern, q)).occurrences;
    for (auto p : planted) {
      ASSERT_TRUE(std::binary_search(found.begin(), found.end(), p)) << pattern << " at " << p;
    }
  }
}

TEST(Matchers, SharedProfileAcrossThreads) {
  std::mt19937_64 rng(33);
  const auto text = oracle::random_string(rng, 50'000, 2);
  const std::string pattern = text.substr(1234, 12);
  const auto profile = build_profile(pattern, 4);
  const auto expected = oracle::occurrences(text, pattern);
  std::vector<Occurrences> results(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t) {
    workers.emplace_back([&, t] {
      results[t] = (t % 2 == 0 ? distq_search(text, profile) : ldistq_search(text, profile))
                       .occurrences;
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

}  // namespace
}  // namespace distq
