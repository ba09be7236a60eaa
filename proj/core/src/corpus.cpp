#include "distq/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "distq/error.hpp"

namespace distq {

namespace {

class LetterSource {
 public:
  LetterSource(std::string letters, std::mt19937_64& rng)
      : letters_(std::move(letters)), rng_(rng), pick_(0, letters_.size() - 1) {}

  char operator()() { return letters_[pick_(rng_)]; }

 private:
  std::string letters_;
  std::mt19937_64& rng_;
  std::uniform_int_distribution<std::size_t> pick_;
};

// Removes every occurrence of `pattern` that does not start at one of the
// sorted `embedded` offsets by re-drawing one byte inside it. Bytes marked in
// `covered` belong to embedded copies and are never changed. Returns false if
// some stray occurrence lies entirely on covered bytes or the change budget
// runs out.
bool scrub(std::string& text, std::string_view pattern, const std::vector<std::size_t>& embedded,
           const std::vector<bool>& covered, LetterSource& letter, std::mt19937_64& rng,
           std::size_t& budget) {
  const std::size_t m = pattern.size();
  std::string_view view(text);
  std::vector<std::size_t> free_offsets;
  std::size_t from = 0;
  for (;;) {
    const std::size_t s = view.find(pattern, from);
    if (s == std::string_view::npos) return true;
    if (std::binary_search(embedded.begin(), embedded.end(), s)) {
      from = s + 1;
      continue;
    }
    free_offsets.clear();
    for (std::size_t t = s; t < s + m; ++t) {
      if (!covered[t]) free_offsets.push_back(t);
    }
    if (free_offsets.empty() || budget == 0) return false;
    std::uniform_int_distribution<std::size_t> pick(0, free_offsets.size() - 1);
    text[free_offsets[pick(rng)]] = letter();
    --budget;
    // A changed byte at p can only complete occurrences starting at p-m+1 or later.
    from = s >= m - 1 ? s - (m - 1) : 0;
  }
}

std::size_t count_occurrences(std::string_view text, std::string_view pattern) {
  std::size_t count = 0;
  for (std::size_t s = text.find(pattern); s != std::string_view::npos;
       s = text.find(pattern, s + 1)) {
    ++count;
  }
  return count;
}

}  // namespace

std::string alphabet(int sigma) {
  if (sigma < 2 || sigma > 95) {
    throw ConfigError("alphabet size must be in [2, 95], got " + std::to_string(sigma));
  }
  const char first = sigma <= 26 ? 'a' : ' ';
  std::string letters(static_cast<std::size_t>(sigma), '\0');
  for (int c = 0; c < sigma; ++c) letters[static_cast<std::size_t>(c)] = static_cast<char>(first + c);
  return letters;
}

std::string fibonacci_string(int k) {
  if (k < 1 || k > 40) {
    throw ConfigError("Fibonacci index must be in [1, 40], got " + std::to_string(k));
  }
  std::string older = "b";
  std::string newer = "a";
  if (k == 1) return older;
  for (int t = 3; t <= k; ++t) {
    std::string next;
    next.reserve(newer.size() + older.size());
    next.append(newer).append(older);
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

GeneratedCorpus random_text_with_occurrences(const CorpusSpec& spec) {
  const auto letters = alphabet(spec.sigma);
  if (spec.m < 1) throw ConfigError("pattern length must be >= 1");
  if (spec.occ > 0 && spec.occ > spec.n / spec.m) {
    throw ConfigError("occ * m exceeds n: " + std::to_string(spec.occ) + " * " +
                      std::to_string(spec.m) + " > " + std::to_string(spec.n));
  }

  std::mt19937_64 rng(spec.seed);
  LetterSource letter(letters, rng);
  GeneratedCorpus out;
  out.occ = spec.occ;
  out.pattern.resize(spec.m);
  for (auto& c : out.pattern) c = letter();
  std::string base(spec.n, '\0');
  for (auto& c : base) c = letter();

  const std::vector<std::size_t> none;
  const std::vector<bool> uncovered(spec.n, false);
  std::size_t budget = 100 * spec.n;
  if (!scrub(base, out.pattern, none, uncovered, letter, rng, budget)) {
    throw GenerationError("could not remove pattern occurrences within the change budget");
  }

  constexpr int kPlacementAttempts = 100;
  const std::size_t slack = spec.n - spec.occ * spec.m;
  std::uniform_int_distribution<std::size_t> offset(0, slack);
  for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
    // Sorted draws from [0, slack] plus i*m give non-overlapping starts.
    std::vector<std::size_t> starts(spec.occ);
    for (auto& s : starts) s = offset(rng);
    std::sort(starts.begin(), starts.end());
    std::vector<bool> covered(spec.n, false);
    std::string text = base;
    for (std::size_t c = 0; c < starts.size(); ++c) {
      starts[c] += c * spec.m;
      std::copy(out.pattern.begin(), out.pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(starts[c]));
      std::fill_n(covered.begin() + static_cast<std::ptrdiff_t>(starts[c]), spec.m, true);
    }
    std::size_t repair_budget = 100 * spec.n;
    if (!scrub(text, out.pattern, starts, covered, letter, rng, repair_budget)) continue;
    if (count_occurrences(text, out.pattern) != spec.occ) continue;
    out.text = std::move(text);
    return out;
  }
  throw GenerationError("could not embed exactly " + std::to_string(spec.occ) +
                        " occurrences after " + std::to_string(kPlacementAttempts) + " attempts");
}

std::vector<std::string> sample_patterns(std::string_view text, std::size_t m, std::size_t count,
                                         std::uint64_t seed) {
  if (m < 1) throw ConfigError("pattern length must be >= 1");
  if (count < 1) throw ConfigError("pattern count must be >= 1");
  if (m > text.size()) {
    throw ConfigError("pattern length " + std::to_string(m) + " exceeds text length " +
                      std::to_string(text.size()));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> start(0, text.size() - m);
  std::vector<std::string> patterns;
  patterns.reserve(count);
  for (std::size_t c = 0; c < count; ++c) patterns.emplace_back(text.substr(start(rng), m));
  return patterns;
}

std::string load_text(const std::filesystem::path& path, bool strip_newlines) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("not a regular file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  std::string text = std::move(buf).str();
  if (strip_newlines) std::erase(text, '\n');
  return text;
}

}  // namespace distq
