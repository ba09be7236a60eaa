#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distq/hashing.hpp"

namespace distq {

inline constexpr std::size_t kHashSpace = std::size_t{1} << 16;

// All position-indexed tables below are addressed 1-based, matching the usual
// textbook presentation of KMP: operator[](j) is valid for j in [1, size()].

// Strong_Bord(j) for j in [1, m+1]; entry m+1 is the longest proper border of
// the whole pattern. Values lie in [-1, m-1].
class StrongBorderTable {
 public:
  explicit StrongBorderTable(std::vector<std::int32_t> values) : values_(std::move(values)) {}

  std::int32_t operator[](std::size_t j) const noexcept { return values_[j - 1]; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int32_t> values() const noexcept { return values_; }

 private:
  std::vector<std::int32_t> values_;
};

// KMP_Shift[j] = j - Strong_Bord(j) - 1 for j in [1, m+1].
class KmpShiftTable {
 public:
  explicit KmpShiftTable(std::vector<std::int32_t> shifts) : shifts_(std::move(shifts)) {}

  std::int32_t operator[](std::size_t j) const noexcept { return shifts_[j - 1]; }
  std::size_t size() const noexcept { return shifts_.size(); }
  std::span<const std::int32_t> values() const noexcept { return shifts_; }

 private:
  std::vector<std::int32_t> shifts_;
};

// HQ_Shift indexed by Hash16 value; 2^16 entries, each in [0, m-q+1].
class HqShiftTable {
 public:
  explicit HqShiftTable(std::vector<std::int32_t> shifts) : shifts_(std::move(shifts)) {}

  std::int32_t operator[](Hash16 c) const noexcept { return shifts_[c.value]; }
  std::int32_t at_value(std::uint16_t c) const noexcept { return shifts_[c]; }
  std::span<const std::int32_t> values() const noexcept { return shifts_; }

 private:
  std::vector<std::int32_t> shifts_;
};

// dist[j] for j in [1, m]. Entries below q are fixed at 1 and never read by
// the search.
class DistTable {
 public:
  explicit DistTable(std::vector<std::int32_t> dists) : dists_(std::move(dists)) {}

  std::int32_t operator[](std::size_t j) const noexcept { return dists_[j - 1]; }
  std::size_t size() const noexcept { return dists_.size(); }
  std::span<const std::int32_t> values() const noexcept { return dists_; }

 private:
  std::vector<std::int32_t> dists_;
};

// How the pattern q-gram hashes feeding HQ_Shift and dist are obtained.
enum class PreprocessMode {
  kDirect,   // every q-gram hashed from scratch, O(mq)
  kRolling,  // one rolling pass, O(m)
};

StrongBorderTable strong_border_table(std::string_view pattern);
KmpShiftTable kmp_shift_table(std::string_view pattern);
HqShiftTable hq_shift_table(std::string_view pattern, int q,
                            PreprocessMode mode = PreprocessMode::kDirect);
DistTable dist_table(std::string_view pattern, int q,
                     PreprocessMode mode = PreprocessMode::kDirect);

/// Hashes of every pattern q-gram, element t being the q-gram ending at
/// 1-based position q + t. Throws ConfigError on an invalid q.
std::vector<std::uint16_t> pattern_qgram_hashes(std::string_view pattern, int q,
                                                PreprocessMode mode);

/// Immutable bundle of a pattern and every table the DISTq/LDISTq searches
/// need for a fixed q. Safe to share across threads once built.
class PatternProfile {
 public:
  const std::string& pattern() const noexcept { return pattern_; }
  std::size_t m() const noexcept { return pattern_.size(); }
  int q() const noexcept { return roll_.q(); }
  const KmpShiftTable& kmp() const noexcept { return kmp_; }
  const HqShiftTable& hq() const noexcept { return hq_; }
  const DistTable& dist() const noexcept { return dist_; }
  const RollContext& roll() const noexcept { return roll_; }

 private:
  friend PatternProfile build_profile(std::string_view, int, PreprocessMode);

  PatternProfile(std::string pattern, KmpShiftTable kmp, HqShiftTable hq, DistTable dist,
                 RollContext roll)
      : pattern_(std::move(pattern)),
        kmp_(std::move(kmp)),
        hq_(std::move(hq)),
        dist_(std::move(dist)),
        roll_(roll) {}

  std::string pattern_;
  KmpShiftTable kmp_;
  HqShiftTable hq_;
  DistTable dist_;
  RollContext roll_;
};

/// Builds all tables for `pattern` and `q`. Throws ConfigError naming the
/// violated bound when the pattern is empty, q < 1, q > 8 or q > m.
PatternProfile build_profile(std::string_view pattern, int q,
                             PreprocessMode mode = PreprocessMode::kDirect);

}  // namespace distq
