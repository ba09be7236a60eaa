#include "distq/matchers.hpp"

#include <array>
#include <string>

#include "distq/error.hpp"

namespace distq {

SearchStats& SearchStats::operator+=(const SearchStats& o) noexcept {
  char_comparisons += o.char_comparisons;
  first_char_checks += o.first_char_checks;
  hashed_char_reads += o.hashed_char_reads;
  hq_shifts += o.hq_shifts;
  dist_shifts += o.dist_shifts;
  kmp_shifts += o.kmp_shifts;
  windows += o.windows;
  return *this;
}

const char* to_string(ShiftKind kind) noexcept {
  switch (kind) {
    case ShiftKind::kHq:
      return "HQ";
    case ShiftKind::kDist:
      return "dist";
    case ShiftKind::kKmp:
      return "KMP";
  }
  return "?";
}

namespace {

using Index = std::int64_t;

// 1-based read-only view over a byte string.
class Bytes {
 public:
  explicit Bytes(std::string_view s)
      : data_(reinterpret_cast<const unsigned char*>(s.data())),
        size_(static_cast<Index>(s.size())) {}

  unsigned char operator[](Index i) const noexcept { return data_[i - 1]; }
  const unsigned char* at(Index i) const noexcept { return data_ + (i - 1); }
  Index size() const noexcept { return size_; }

 private:
  const unsigned char* data_;
  Index size_;
};

// Moves the window end and books the move. Moves that leave the text are
// not counted.
class WindowLog {
 public:
  WindowLog(Index n, SearchStats& stats, SearchTrace* trace)
      : n_(n), stats_(stats), trace_(trace) {}

  void move(Index& k, ShiftKind kind, Index amount) {
    k += amount;
    if (amount <= 0 || k > n_) return;
    ++stats_.windows;
    switch (kind) {
      case ShiftKind::kHq:
        ++stats_.hq_shifts;
        break;
      case ShiftKind::kDist:
        ++stats_.dist_shifts;
        break;
      case ShiftKind::kKmp:
        ++stats_.kmp_shifts;
        break;
    }
    if (trace_ != nullptr) trace_->shifts.push_back({kind, amount});
  }

  void pos(Index p) {
    if (trace_ != nullptr) trace_->positions.push_back(p);
  }

  void hashed(Index end) {
    if (trace_ != nullptr) trace_->hash_ends.push_back(end);
  }

 private:
  Index n_;
  SearchStats& stats_;
  SearchTrace* trace_;
};

void require_pattern(std::string_view pattern) {
  if (pattern.empty()) throw ContractViolation("pattern must not be empty");
}

// Hashes every q-gram from scratch.
class DirectHasher {
 public:
  DirectHasher(Bytes text, const PatternProfile& profile, SearchStats& stats)
      : text_(text), q_(profile.q()), stats_(stats) {}

  std::uint16_t ending_at(Index end) {
    stats_.hashed_char_reads += static_cast<std::uint64_t>(q_);
    return detail::hash16(text_.at(end - q_ + 1), q_);
  }

 private:
  Bytes text_;
  int q_;
  SearchStats& stats_;
};

// Keeps the last hashed q-gram and rolls it forward when the next one overlaps.
class RollingHasher {
 public:
  RollingHasher(Bytes text, const PatternProfile& profile, SearchStats& stats)
      : text_(text), q_(profile.q()), pow4_(profile.roll().pow4()), stats_(stats) {}

  std::uint16_t ending_at(Index end) {
    const Index gap = end - last_end_;
    if (last_end_ > 0 && gap >= 0 && gap < q_) {
      for (Index e = last_end_ + 1; e <= end; ++e) {
        last_ = detail::roll16(last_, text_[e - q_], text_[e], pow4_);
      }
      stats_.hashed_char_reads += static_cast<std::uint64_t>(gap);
    } else {
      last_ = detail::hash16(text_.at(end - q_ + 1), q_);
      stats_.hashed_char_reads += static_cast<std::uint64_t>(q_);
    }
    last_end_ = end;
    return last_;
  }

 private:
  Bytes text_;
  int q_;
  std::uint16_t pow4_;
  SearchStats& stats_;
  Index last_end_ = 0;
  std::uint16_t last_ = 0;
};

template <class Hasher>
SearchOutcome dist_search(std::string_view text_view, const PatternProfile& profile,
                          SearchTrace* trace) {
  SearchOutcome out;
  const Bytes text(text_view);
  const Bytes pat(profile.pattern());
  const Index n = text.size();
  const Index m = pat.size();
  const Index full_shift = m - profile.q() + 1;
  const auto& kmp = profile.kmp();
  const auto& hq = profile.hq();
  const auto& dist = profile.dist();
  if (n < m) return out;

  SearchStats& st = out.stats;
  WindowLog log(n, st, trace);
  Hasher hasher(text, profile, st);
  st.windows = 1;

  // k: 1-based end of the current window; i, j: text/pattern comparison
  // cursors. j <= 1 means no partial match is carried over. j may go
  // negative after a dist shift; k = i + m - j still places the window.
  Index k = m;
  Index i = 0;
  Index j = 1;
  Index pos = 0;
  while (k <= n) {
    if (j <= 1) {
      // Alignment-phase.
      for (;;) {
        const Index sh = hq.at_value(hasher.ending_at(k));
        log.hashed(k);
        log.move(k, ShiftKind::kHq, sh);
        if (k > n) return out;
        if (sh == full_shift) continue;
        pos = m - sh;
        log.pos(pos);
        ++st.first_char_checks;
        if (pat[1] == text[k - m + 1]) break;
        log.move(k, ShiftKind::kDist, dist[static_cast<std::size_t>(pos)]);
        if (k > n) return out;
      }
      // Comparison-phase.
      j = 2;
      i = k - m + 2;
      while (j <= m && (++st.char_comparisons, pat[j] == text[i])) {
        ++i;
        ++j;
      }
      if (j == m + 1) out.occurrences.push_back(i - m);
      const Index d = dist[static_cast<std::size_t>(pos)];
      const Index ks = kmp[static_cast<std::size_t>(j)];
      ShiftKind kind = ShiftKind::kKmp;
      if (d >= j - 1 && d >= ks) {
        j -= d;
        kind = ShiftKind::kDist;
      } else {
        j -= ks;
      }
      log.move(k, kind, i + m - j - k);
    } else {
      // KMP-phase.
      while (j <= m && (++st.char_comparisons, pat[j] == text[i])) {
        ++i;
        ++j;
      }
      if (j == m + 1) out.occurrences.push_back(i - m);
      j -= kmp[static_cast<std::size_t>(j)];
      log.move(k, ShiftKind::kKmp, i + m - j - k);
    }
  }
  return out;
}

}  // namespace

Occurrences naive_search(std::string_view text, std::string_view pattern) {
  require_pattern(pattern);
  Occurrences occ;
  if (text.size() < pattern.size()) return occ;
  const std::size_t last = text.size() - pattern.size();
  for (std::size_t s = 0; s <= last; ++s) {
    std::size_t t = 0;
    while (t < pattern.size() && text[s + t] == pattern[t]) ++t;
    if (t == pattern.size()) occ.push_back(static_cast<std::int64_t>(s) + 1);
  }
  return occ;
}

SearchOutcome kmp_search(std::string_view text_view, std::string_view pattern,
                         SearchTrace* trace) {
  require_pattern(pattern);
  const auto kmp = kmp_shift_table(pattern);
  SearchOutcome out;
  const Bytes text(text_view);
  const Bytes pat(pattern);
  const Index n = text.size();
  const Index m = pat.size();
  if (n < m) return out;

  SearchStats& st = out.stats;
  WindowLog log(n, st, trace);
  st.windows = 1;
  Index k = m;
  Index i = 1;
  Index j = 1;
  while (k <= n) {
    while (j <= m && (++st.char_comparisons, pat[j] == text[i])) {
      ++i;
      ++j;
    }
    if (j == m + 1) out.occurrences.push_back(i - m);
    j -= kmp[static_cast<std::size_t>(j)];
    log.move(k, ShiftKind::kKmp, i + m - j - k);
    if (j == 0) {
      // P[1] is known to differ from T[i]; restart just past it.
      ++i;
      j = 1;
    }
  }
  return out;
}

SearchOutcome hashq_search(std::string_view text_view, std::string_view pattern, int q,
                           SearchTrace* trace) {
  if (pattern.empty()) throw ConfigError("pattern must not be empty");
  if (q < 1 || q > kMaxQ || static_cast<std::size_t>(q) > pattern.size()) {
    throw ConfigError("q must be in [1, min(8, m)] (m = " + std::to_string(pattern.size()) +
                      "), got " + std::to_string(q));
  }
  const Bytes text(text_view);
  const Bytes pat(pattern);
  const Index n = text.size();
  const Index m = pat.size();
  const Index full_shift = m - q + 1;

  std::array<Index, 256> shift;
  shift.fill(full_shift);
  for (Index j = q; j <= m; ++j) shift[detail::hash8(pat.at(j - q + 1), q)] = m - j;

  // Shift applied after every verification: distance back to the nearest
  // earlier q-gram whose hash equals the pattern's suffix q-gram hash.
  const Index mprime = full_shift;
  const std::uint8_t suffix_hash = detail::hash8(pat.at(mprime), q);
  Index verify_shift = mprime;
  for (Index d = 1; d <= m - q; ++d) {
    if (detail::hash8(pat.at(mprime - d), q) == suffix_hash) {
      verify_shift = d;
      break;
    }
  }

  SearchOutcome out;
  if (n < m) return out;
  SearchStats& st = out.stats;
  WindowLog log(n, st, trace);
  st.windows = 1;
  auto hash_at = [&](Index end) {
    st.hashed_char_reads += static_cast<std::uint64_t>(q);
    log.hashed(end);
    return shift[detail::hash8(text.at(end - q + 1), q)];
  };

  Index k = m;
  while (k <= n) {
    for (Index sh = hash_at(k); sh != 0; sh = hash_at(k)) {
      log.move(k, ShiftKind::kHq, sh);
      if (k > n) return out;
    }
    const Index start = k - m + 1;
    Index j = 1;
    while (j <= m && (++st.char_comparisons, pat[j] == text[start + j - 1])) ++j;
    if (j == m + 1) out.occurrences.push_back(start);
    log.move(k, ShiftKind::kDist, verify_shift);
  }
  return out;
}

SearchOutcome distq_search(std::string_view text, const PatternProfile& profile,
                           SearchTrace* trace) {
  return dist_search<DirectHasher>(text, profile, trace);
}

SearchOutcome ldistq_search(std::string_view text, const PatternProfile& profile,
                            SearchTrace* trace) {
  return dist_search<RollingHasher>(text, profile, trace);
}

}  // namespace distq
