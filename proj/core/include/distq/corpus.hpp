#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace distq {

// Name of the pseudo-random generator behind every corpus. Recorded in
// reports so a corpus can be regenerated from its seed.
inline constexpr std::string_view kCorpusPrng = "mt19937_64";

// Parameters of a random text with an exact number of embedded occurrences.
struct CorpusSpec {
  std::size_t n = 0;
  int sigma = 4;
  std::size_t m = 8;
  std::size_t occ = 0;
  std::uint64_t seed = 0;
};

struct GeneratedCorpus {
  std::string text;
  std::string pattern;
  std::size_t occ = 0;
};

/// The alphabet used for sigma letters: 'a'.. for sigma <= 26, otherwise the
/// printable ASCII range starting at ' ' (sigma <= 95).
std::string alphabet(int sigma);

/// Fib_1 = "b", Fib_2 = "a", Fib_k = Fib_{k-1} Fib_{k-2}. k must be in [1, 40].
std::string fibonacci_string(int k);

/// Uniform random pattern and text over `alphabet(spec.sigma)`. The text is
/// scrubbed of all pattern occurrences, then exactly spec.occ non-overlapping
/// copies are embedded. Deterministic in spec.seed.
GeneratedCorpus random_text_with_occurrences(const CorpusSpec& spec);

/// `count` substrings of length m at uniformly random offsets of `text`.
std::vector<std::string> sample_patterns(std::string_view text, std::size_t m,
                                         std::size_t count, std::uint64_t seed);

/// Reads a file as raw bytes. With strip_newlines, every '\n' byte is dropped.
std::string load_text(const std::filesystem::path& path, bool strip_newlines = false);

}  // namespace distq
