#include "distq/bench.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "distq/error.hpp"

namespace distq {
namespace {

ReportRow sample_row() {
  ReportRow row;
  row.algo = "distq";
  row.q = 3;
  row.m = 8;
  row.n = 1000;
  row.occ = 17;
  row.reps = 10;
  row.total_ms = 1.25;
  row.stats.char_comparisons = 400;
  row.stats.first_char_checks = 30;
  row.stats.hashed_char_reads = 600;
  row.stats.hq_shifts = 150;
  row.stats.dist_shifts = 20;
  row.stats.kmp_shifts = 5;
  row.seed = 42;
  return row;
}

std::size_t count_lines(const std::string& s) {
  std::size_t lines = 0;
  for (char c : s) lines += c == '\n' ? 1 : 0;
  return lines;
}

TEST(Algorithm, NamesRoundTrip) {
  for (auto algo : {Algorithm::kNaive, Algorithm::kKmp, Algorithm::kHashq, Algorithm::kDistq,
                    Algorithm::kLdistq}) {
    EXPECT_EQ(parse_algorithm(to_string(algo)), algo);
  }
  EXPECT_THROW(parse_algorithm("bm"), ConfigError);
  EXPECT_EQ(clamp_q(9, 20), 8);
  EXPECT_EQ(clamp_q(5, 3), 3);
  EXPECT_EQ(clamp_q(0, 3), 1);
}

TEST(EmitReport, CsvShape) {
  const auto csv = emit_report({sample_row()}, ReportFormat::kCsv);
  EXPECT_EQ(count_lines(csv), 2u);
  EXPECT_EQ(csv.substr(0, kCsvHeader.size()), kCsvHeader);
  EXPECT_NE(csv.find("distq,3,8,1000,17,10,1.250,400,30,600,150,20,5,42"), std::string::npos);
  EXPECT_THROW(emit_report({}, ReportFormat::kCsv), ContractViolation);
}

TEST(EmitReport, CsvParsesBack) {
  auto odd = sample_row();
  odd.algo = "we,ird\"name";
  const std::vector<ReportRow> rows = {sample_row(), odd};
  const auto parsed = parse_csv_report(emit_report(rows, ReportFormat::kCsv));
  ASSERT_EQ(parsed.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    EXPECT_EQ(parsed[r].algo, rows[r].algo);
    EXPECT_EQ(parsed[r].q, rows[r].q);
    EXPECT_EQ(parsed[r].occ, rows[r].occ);
    EXPECT_DOUBLE_EQ(parsed[r].total_ms, rows[r].total_ms);
    EXPECT_EQ(parsed[r].stats, rows[r].stats);
    EXPECT_EQ(parsed[r].seed, rows[r].seed);
  }
  EXPECT_THROW(parse_csv_report("nope\n"), ConfigError);
}

TEST(EmitReport, MarkdownCarriesSameNumbers) {
  const auto md = emit_report({sample_row()}, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| algo | q | m |"), std::string::npos);
  EXPECT_NE(md.find("| distq | 3 | 8 | 1000 | 17 | 10 | 1.250 | 400 | 30 | 600 | 150 | 20 | 5 | 42 |"),
            std::string::npos);
}

TEST(RunBenchmark, FibonacciCell) {
  BenchSpec spec;
  spec.source = FibonacciSource{20};
  spec.algorithms = {Algorithm::kKmp, Algorithm::kDistq};
  spec.qs = {3};
  spec.ms = {8};
  spec.repetitions = 10;
  spec.trials = 3;
  const auto rows = run_benchmark(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].algo, "kmp");
  EXPECT_EQ(rows[0].q, 0);
  EXPECT_EQ(rows[1].algo, "distq");
  EXPECT_EQ(rows[1].q, 3);
  EXPECT_EQ(rows[0].occ, rows[1].occ);
  EXPECT_GT(rows[0].occ, 0u);
  EXPECT_EQ(rows[0].n, 6765u);
}

TEST(RunBenchmark, GeneratorCellsHaveExactCounts) {
  BenchSpec spec;
  spec.source = GeneratorSource{40'000, 4, {0, 1024}};
  spec.algorithms = {Algorithm::kNaive, Algorithm::kDistq, Algorithm::kLdistq};
  spec.qs = {2, 4};
  spec.ms = {8};
  spec.repetitions = 1;
  spec.trials = 1;
  const auto rows = run_benchmark(spec);
  ASSERT_EQ(rows.size(), 2u * 5u);
  for (std::size_t r = 0; r < 5; ++r) EXPECT_EQ(rows[r].occ, 0u);
  for (std::size_t r = 5; r < 10; ++r) EXPECT_EQ(rows[r].occ, 1024u);
}

TEST(RunBenchmark, ClampedQValuesAreNotRepeated) {
  BenchSpec spec;
  spec.source = FibonacciSource{12};
  spec.algorithms = {Algorithm::kDistq};
  spec.qs = {3, 6, 8};
  spec.ms = {4};
  spec.repetitions = 1;
  spec.trials = 1;
  const auto rows = run_benchmark(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].q, 3);
  EXPECT_EQ(rows[1].q, 4);
}

TEST(RunBenchmark, DeterministicExceptTiming) {
  BenchSpec spec;
  spec.source = GeneratorSource{20'000, 95, {128}};
  spec.algorithms = {Algorithm::kHashq, Algorithm::kDistq};
  spec.repetitions = 2;
  spec.trials = 2;
  spec.seed = 9;
  auto a = run_benchmark(spec);
  auto b = run_benchmark(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].total_ms = b[r].total_ms = 0;
    EXPECT_EQ(emit_report({a[r]}, ReportFormat::kCsv), emit_report({b[r]}, ReportFormat::kCsv));
  }
}

TEST(RunBenchmark, RejectsBadSpecs) {
  BenchSpec spec;
  spec.source = FibonacciSource{10};
  spec.repetitions = 0;
  EXPECT_THROW(run_benchmark(spec), ConfigError);
  spec.repetitions = 1;
  spec.trials = 0;
  EXPECT_THROW(run_benchmark(spec), ConfigError);
  spec.trials = 1;
  spec.qs = {9};
  EXPECT_THROW(run_benchmark(spec), ConfigError);
}

}  // namespace
}  // namespace distq
