#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "distq/preprocess.hpp"

namespace distq {

// Sorted 1-based start positions of every occurrence.
using Occurrences = std::vector<std::int64_t>;

// Work counters collected by every matcher.
//
// char_comparisons counts P[j] vs T[i] tests made while verifying a window
// (naive, KMP, HASHq, and the Comparison-/KMP-phases of DISTq/LDISTq).
// first_char_checks counts the P[1] probes of the DISTq Alignment-phase.
// hashed_char_reads counts text bytes fed into hash computations: q for a
// fresh hash, one per rolling step. Shift counters and `windows` only count
// moves that land the window inside the text; the final move that runs off
// the end is not an alignment.
struct SearchStats {
  std::uint64_t char_comparisons = 0;
  std::uint64_t first_char_checks = 0;
  std::uint64_t hashed_char_reads = 0;
  std::uint64_t hq_shifts = 0;
  std::uint64_t dist_shifts = 0;
  std::uint64_t kmp_shifts = 0;
  std::uint64_t windows = 0;

  SearchStats& operator+=(const SearchStats& o) noexcept;
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOutcome {
  Occurrences occurrences;
  SearchStats stats;
};

enum class ShiftKind : std::uint8_t { kHq, kDist, kKmp };

const char* to_string(ShiftKind kind) noexcept;

struct ShiftEvent {
  ShiftKind kind;
  std::int64_t amount;
  friend bool operator==(const ShiftEvent&, const ShiftEvent&) = default;
};

// Optional detailed record of a search. Filled only when a pointer is passed.
struct SearchTrace {
  std::vector<ShiftEvent> shifts;
  // DISTq/LDISTq: every value assigned to pos in the Alignment-phase.
  std::vector<std::int64_t> positions;
  // 1-based text position of the last byte of every hashed q-gram, in order.
  std::vector<std::int64_t> hash_ends;
};

/// Brute-force window comparison. Throws ContractViolation on an empty
/// pattern; a text shorter than the pattern yields no occurrences.
Occurrences naive_search(std::string_view text, std::string_view pattern);

/// Knuth-Morris-Pratt with strong borders, including the post-match shift.
SearchOutcome kmp_search(std::string_view text, std::string_view pattern,
                         SearchTrace* trace = nullptr);

/// HASHq baseline: 8-bit q-gram hash shift table plus a fixed shift after
/// each verification. Throws ConfigError unless 1 <= q <= min(8, m).
SearchOutcome hashq_search(std::string_view text, std::string_view pattern, int q,
                           SearchTrace* trace = nullptr);

/// DISTq. Each Alignment-phase hash is computed from scratch over q bytes.
SearchOutcome distq_search(std::string_view text, const PatternProfile& profile,
                           SearchTrace* trace = nullptr);

/// LDISTq. Same decisions as distq_search, but Alignment-phase hashes are
/// rolled forward from the previous one whenever the two q-grams overlap.
SearchOutcome ldistq_search(std::string_view text, const PatternProfile& profile,
                            SearchTrace* trace = nullptr);

}  // namespace distq
