#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distq/matchers.hpp"

namespace distq {

enum class Algorithm { kNaive, kKmp, kHashq, kDistq, kLdistq };

std::string_view to_string(Algorithm algo) noexcept;
/// Accepts "naive", "kmp", "hashq", "distq", "ldistq". Throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);
/// True for the algorithms that take a q parameter.
bool uses_q(Algorithm algo) noexcept;

/// One full search including preprocessing. q is ignored by naive and kmp.
SearchOutcome run_algorithm(Algorithm algo, std::string_view text, std::string_view pattern,
                            int q);

/// q as used by the CLI and the benchmark: min(q, m, 8), at least 1.
int clamp_q(int q, std::size_t m) noexcept;

struct FileSource {
  std::filesystem::path path;
  bool strip_newlines = false;
};

struct FibonacciSource {
  int k = 32;
};

// Random texts with an exact number of embedded copies of a random pattern.
// One corpus is generated per (m, occ) pair.
struct GeneratorSource {
  std::size_t n = 4'000'000;
  int sigma = 4;
  std::vector<std::size_t> occ = {0};
};

using CorpusSource = std::variant<FileSource, FibonacciSource, GeneratorSource>;

struct BenchSpec {
  CorpusSource source = FibonacciSource{};
  std::vector<Algorithm> algorithms = {Algorithm::kKmp, Algorithm::kDistq, Algorithm::kLdistq};
  std::vector<int> qs = {3};
  std::vector<std::size_t> ms = {8};
  // Sampled patterns per length for file and Fibonacci corpora.
  std::size_t patterns_per_length = 1;
  std::size_t repetitions = 25;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
};

/// Throws ConfigError when repetitions or trials is 0, a list is empty, or a
/// q lies outside [1, 8].
void validate(const BenchSpec& spec);

struct ReportRow {
  std::string algo;
  int q = 0;  // 0 for algorithms without a q parameter
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t occ = 0;
  std::size_t reps = 0;
  double total_ms = 0.0;
  SearchStats stats;
  std::uint64_t seed = 0;
};

/// Runs every cell of the spec sequentially. Each row reports the best of
/// `trials` timings of `repetitions` full runs (preprocessing plus search)
/// over all patterns of the cell; counters are for a single run. Throws
/// CrossCheckError if algorithms in one cell disagree on the occurrence count.
std::vector<ReportRow> run_benchmark(const BenchSpec& spec);

enum class ReportFormat { kCsv, kMarkdown };

ReportFormat parse_report_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "algo,q,m,n,occ,reps,total_ms,char_cmp,first_char_checks,hash_char_reads,"
    "hq_shifts,dist_shifts,kmp_shifts,seed";

/// Renders rows as CSV (header plus one line per row) or a Markdown table.
/// Throws ContractViolation on an empty row list.
std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format);

/// Parses CSV produced by emit_report. `windows` is not part of the format
/// and comes back as 0. Throws ConfigError on malformed input.
std::vector<ReportRow> parse_csv_report(std::string_view csv);

}  // namespace distq
