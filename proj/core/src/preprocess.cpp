#include "distq/preprocess.hpp"

#include <string>

#include "distq/error.hpp"

namespace distq {

namespace {

const unsigned char* bytes_of(std::string_view s) {
  return reinterpret_cast<const unsigned char*>(s.data());
}

void require_nonempty(std::string_view pattern) {
  if (pattern.empty()) throw ContractViolation("pattern must not be empty");
}

void check_q(std::string_view pattern, int q) {
  if (pattern.empty()) throw ConfigError("pattern must not be empty");
  if (q < 1) throw ConfigError("q must be >= 1, got " + std::to_string(q));
  if (q > kMaxQ) throw ConfigError("q must be <= 8, got " + std::to_string(q));
  if (static_cast<std::size_t>(q) > pattern.size()) {
    throw ConfigError("q must be <= m (m = " + std::to_string(pattern.size()) +
                      "), got " + std::to_string(q));
  }
}

// hashes[t] is the hash of the q-gram ending at 1-based position q + t.
HqShiftTable hq_from_hashes(std::span<const std::uint16_t> hashes, std::size_t m, int q) {
  const auto len = static_cast<std::int32_t>(m);
  std::vector<std::int32_t> shifts(kHashSpace, len - q + 1);
  for (std::size_t t = 0; t < hashes.size(); ++t) {
    shifts[hashes[t]] = len - (q + static_cast<std::int32_t>(t));  // rightmost wins
  }
  return HqShiftTable(std::move(shifts));
}

DistTable dist_from_hashes(std::span<const std::uint16_t> hashes, std::size_t m, int q) {
  std::vector<std::int32_t> dists(m, 1);
  std::vector<std::int32_t> prevpos(kHashSpace, 0);
  for (std::size_t t = 0; t < hashes.size(); ++t) {
    const std::int32_t j = q + static_cast<std::int32_t>(t);
    const std::int32_t prev = prevpos[hashes[t]];
    dists[static_cast<std::size_t>(j) - 1] = prev == 0 ? j - q + 1 : j - prev;
    prevpos[hashes[t]] = j;
  }
  return DistTable(std::move(dists));
}

}  // namespace

StrongBorderTable strong_border_table(std::string_view pattern) {
  require_nonempty(pattern);
  const auto m = static_cast<std::int32_t>(pattern.size());
  // 0-based: next[t] holds Strong_Bord(t + 1).
  std::vector<std::int32_t> next(static_cast<std::size_t>(m) + 1);
  next[0] = -1;
  std::int32_t i = 0;
  std::int32_t j = -1;
  while (i < m) {
    while (j > -1 && pattern[i] != pattern[j]) j = next[j];
    ++i;
    ++j;
    if (i < m && pattern[i] == pattern[j]) {
      next[i] = next[j];
    } else {
      next[i] = j;
    }
  }
  return StrongBorderTable(std::move(next));
}

KmpShiftTable kmp_shift_table(std::string_view pattern) {
  const auto sb = strong_border_table(pattern);
  std::vector<std::int32_t> shifts(sb.size());
  for (std::size_t j = 1; j <= sb.size(); ++j) {
    shifts[j - 1] = static_cast<std::int32_t>(j) - sb[j] - 1;
  }
  return KmpShiftTable(std::move(shifts));
}

std::vector<std::uint16_t> pattern_qgram_hashes(std::string_view pattern, int q,
                                                PreprocessMode mode) {
  check_q(pattern, q);
  const auto* p = bytes_of(pattern);
  const std::size_t count = pattern.size() - static_cast<std::size_t>(q) + 1;
  std::vector<std::uint16_t> hashes(count);
  if (mode == PreprocessMode::kDirect) {
    for (std::size_t t = 0; t < count; ++t) hashes[t] = detail::hash16(p + t, q);
    return hashes;
  }
  const RollContext ctx(q);
  hashes[0] = detail::hash16(p, q);
  for (std::size_t t = 1; t < count; ++t) {
    hashes[t] = detail::roll16(hashes[t - 1], p[t - 1], p[t + q - 1], ctx.pow4());
  }
  return hashes;
}

HqShiftTable hq_shift_table(std::string_view pattern, int q, PreprocessMode mode) {
  return hq_from_hashes(pattern_qgram_hashes(pattern, q, mode), pattern.size(), q);
}

DistTable dist_table(std::string_view pattern, int q, PreprocessMode mode) {
  return dist_from_hashes(pattern_qgram_hashes(pattern, q, mode), pattern.size(), q);
}

PatternProfile build_profile(std::string_view pattern, int q, PreprocessMode mode) {
  check_q(pattern, q);
  const auto hashes = pattern_qgram_hashes(pattern, q, mode);
  return PatternProfile(std::string(pattern), kmp_shift_table(pattern),
                        hq_from_hashes(hashes, pattern.size(), q),
                        dist_from_hashes(hashes, pattern.size(), q), RollContext(q));
}

}  // namespace distq
