#include "distq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>

#include "distq/corpus.hpp"
#include "distq/error.hpp"

namespace distq {

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::kNaive:
      return "naive";
    case Algorithm::kKmp:
      return "kmp";
    case Algorithm::kHashq:
      return "hashq";
    case Algorithm::kDistq:
      return "distq";
    case Algorithm::kLdistq:
      return "ldistq";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto algo : {Algorithm::kNaive, Algorithm::kKmp, Algorithm::kHashq, Algorithm::kDistq,
                    Algorithm::kLdistq}) {
    if (name == to_string(algo)) return algo;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected naive, kmp, hashq, distq or ldistq)");
}

bool uses_q(Algorithm algo) noexcept {
  return algo == Algorithm::kHashq || algo == Algorithm::kDistq || algo == Algorithm::kLdistq;
}

int clamp_q(int q, std::size_t m) noexcept {
  const auto cap = static_cast<int>(std::min<std::size_t>(m, kMaxQ));
  return std::max(1, std::min(q, cap));
}

SearchOutcome run_algorithm(Algorithm algo, std::string_view text, std::string_view pattern,
                            int q) {
  switch (algo) {
    case Algorithm::kNaive:
      return SearchOutcome{naive_search(text, pattern), {}};
    case Algorithm::kKmp:
      return kmp_search(text, pattern);
    case Algorithm::kHashq:
      return hashq_search(text, pattern, q);
    case Algorithm::kDistq:
      return distq_search(text, build_profile(pattern, q, PreprocessMode::kDirect));
    case Algorithm::kLdistq:
      return ldistq_search(text, build_profile(pattern, q, PreprocessMode::kRolling));
  }
  throw ContractViolation("unhandled algorithm");
}

void validate(const BenchSpec& spec) {
  if (spec.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  if (spec.algorithms.empty()) throw ConfigError("algorithm list is empty");
  if (spec.qs.empty()) throw ConfigError("q list is empty");
  if (spec.ms.empty()) throw ConfigError("pattern length list is empty");
  if (spec.patterns_per_length < 1) throw ConfigError("patterns per length must be >= 1");
  for (int q : spec.qs) {
    if (q < 1 || q > kMaxQ) throw ConfigError("q must be in [1, 8], got " + std::to_string(q));
  }
  for (auto m : spec.ms) {
    if (m < 1) throw ConfigError("pattern lengths must be >= 1");
  }
  if (const auto* gen = std::get_if<GeneratorSource>(&spec.source)) {
    if (gen->occ.empty()) throw ConfigError("occurrence list is empty");
  }
}

namespace {

struct Cell {
  std::string label;
  const std::string* text;
  std::vector<std::string> patterns;
};

ReportRow measure(const BenchSpec& spec, const Cell& cell, Algorithm algo, int q) {
  using Clock = std::chrono::steady_clock;
  ReportRow row;
  row.algo = std::string(to_string(algo));
  row.q = uses_q(algo) ? q : 0;
  row.m = cell.patterns.front().size();
  row.n = cell.text->size();
  row.reps = spec.repetitions;
  row.seed = spec.seed;

  double best_ms = std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    std::uint64_t occ = 0;
    SearchStats stats;
    const auto start = Clock::now();
    for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
      for (const auto& pattern : cell.patterns) {
        const auto outcome = run_algorithm(algo, *cell.text, pattern, q);
        if (rep == 0) {
          occ += outcome.occurrences.size();
          stats += outcome.stats;
        }
      }
    }
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    best_ms = std::min(best_ms, elapsed.count());
    if (trial == 0) {
      row.occ = occ;
      row.stats = stats;
    } else if (occ != row.occ || !(stats == row.stats)) {
      throw CrossCheckError("counters differ between trials for " + row.algo + " in cell " +
                            cell.label);
    }
  }
  row.total_ms = best_ms;
  return row;
}

void run_cell(const BenchSpec& spec, const Cell& cell, std::vector<ReportRow>& rows) {
  const std::size_t first = rows.size();
  const std::size_t m = cell.patterns.front().size();
  for (auto algo : spec.algorithms) {
    if (!uses_q(algo)) {
      rows.push_back(measure(spec, cell, algo, 0));
      continue;
    }
    std::vector<int> done;
    for (int q : spec.qs) {
      const int eff = clamp_q(q, m);
      if (std::find(done.begin(), done.end(), eff) != done.end()) continue;
      done.push_back(eff);
      rows.push_back(measure(spec, cell, algo, eff));
    }
  }
  for (std::size_t r = first + 1; r < rows.size(); ++r) {
    if (rows[r].occ != rows[first].occ) {
      throw CrossCheckError("occurrence counts disagree in cell " + cell.label + ": " +
                            rows[first].algo + " found " + std::to_string(rows[first].occ) +
                            ", " + rows[r].algo + " (q=" + std::to_string(rows[r].q) +
                            ") found " + std::to_string(rows[r].occ));
    }
  }
}

// Distinct, reproducible sampling seed per pattern length.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<ReportRow> run_benchmark(const BenchSpec& spec) {
  validate(spec);
  std::vector<ReportRow> rows;

  if (const auto* gen = std::get_if<GeneratorSource>(&spec.source)) {
    for (auto m : spec.ms) {
      for (auto occ : gen->occ) {
        const auto corpus = random_text_with_occurrences(
            CorpusSpec{gen->n, gen->sigma, m, occ, derive_seed(spec.seed, m)});
        const Cell cell{"m=" + std::to_string(m) + " occ=" + std::to_string(occ), &corpus.text,
                        {corpus.pattern}};
        run_cell(spec, cell, rows);
      }
    }
    return rows;
  }

  std::string text;
  std::string name;
  if (const auto* file = std::get_if<FileSource>(&spec.source)) {
    text = load_text(file->path, file->strip_newlines);
    name = file->path.filename().string();
  } else {
    const auto& fib = std::get<FibonacciSource>(spec.source);
    text = fibonacci_string(fib.k);
    name = "fib" + std::to_string(fib.k);
  }
  for (auto m : spec.ms) {
    Cell cell{name + " m=" + std::to_string(m), &text,
              sample_patterns(text, m, spec.patterns_per_length, derive_seed(spec.seed, m))};
    run_cell(spec, cell, rows);
  }
  return rows;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected csv or markdown)");
}

namespace {

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::vector<std::string> row_fields(const ReportRow& r) {
  return {r.algo,
          std::to_string(r.q),
          std::to_string(r.m),
          std::to_string(r.n),
          std::to_string(r.occ),
          std::to_string(r.reps),
          format_ms(r.total_ms),
          std::to_string(r.stats.char_comparisons),
          std::to_string(r.stats.first_char_checks),
          std::to_string(r.stats.hashed_char_reads),
          std::to_string(r.stats.hq_shifts),
          std::to_string(r.stats.dist_shifts),
          std::to_string(r.stats.kmp_shifts),
          std::to_string(r.seed)};
}

std::vector<std::string> split_header() {
  std::vector<std::string> names;
  std::string_view rest = kCsvHeader;
  for (;;) {
    const auto comma = rest.find(',');
    names.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return names;
}

// Splits CSV text into records of fields, honouring quoted fields.
std::vector<std::vector<std::string>> parse_csv_records(std::string_view csv) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t t = 0; t < csv.size(); ++t) {
    const char c = csv[t];
    if (quoted) {
      if (c == '"') {
        if (t + 1 < csv.size() && csv[t + 1] == '"') {
          field += '"';
          ++t;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ConfigError("stray quote in CSV field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        field_started = false;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ConfigError("unterminated quoted CSV field");
  if (field_started || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string("bad ") + what + " value '" + s + "' in CSV report");
  }
  return value;
}

double parse_ms(const std::string& s) {
  std::istringstream in(s);
  double value = 0.0;
  in >> value;
  if (in.fail() || !in.eof()) throw ConfigError("bad total_ms value '" + s + "' in CSV report");
  return value;
}

}  // namespace

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  if (rows.empty()) throw ContractViolation("cannot emit a report without rows");
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const auto& row : rows) {
      const auto fields = row_fields(row);
      for (std::size_t f = 0; f < fields.size(); ++f) {
        if (f > 0) out << ',';
        out << csv_field(fields[f]);
      }
      out << '\n';
    }
    return out.str();
  }

  const auto names = split_header();
  out << '|';
  for (const auto& name : names) out << ' ' << name << " |";
  out << "\n|";
  for (std::size_t f = 0; f < names.size(); ++f) out << (f == 0 ? " --- |" : " ---: |");
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& field : row_fields(row)) {
      std::string cell;
      for (char c : field) {
        if (c == '|') cell += '\\';
        cell += c;
      }
      out << ' ' << cell << " |";
    }
    out << '\n';
  }
  out << "\nCorpus PRNG: " << kCorpusPrng << '\n';
  return out.str();
}

std::vector<ReportRow> parse_csv_report(std::string_view csv) {
  const auto records = parse_csv_records(csv);
  if (records.empty()) throw ConfigError("empty CSV report");
  if (records.front() != split_header()) throw ConfigError("unexpected CSV report header");
  std::vector<ReportRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r];
    if (f.size() != 14) {
      throw ConfigError("CSV record " + std::to_string(r) + " has " + std::to_string(f.size()) +
                        " fields, expected 14");
    }
    ReportRow row;
    row.algo = f[0];
    row.q = parse_number<int>(f[1], "q");
    row.m = parse_number<std::size_t>(f[2], "m");
    row.n = parse_number<std::size_t>(f[3], "n");
    row.occ = parse_number<std::uint64_t>(f[4], "occ");
    row.reps = parse_number<std::size_t>(f[5], "reps");
    row.total_ms = parse_ms(f[6]);
    row.stats.char_comparisons = parse_number<std::uint64_t>(f[7], "char_cmp");
    row.stats.first_char_checks = parse_number<std::uint64_t>(f[8], "first_char_checks");
    row.stats.hashed_char_reads = parse_number<std::uint64_t>(f[9], "hash_char_reads");
    row.stats.hq_shifts = parse_number<std::uint64_t>(f[10], "hq_shifts");
    row.stats.dist_shifts = parse_number<std::uint64_t>(f[11], "dist_shifts");
    row.stats.kmp_shifts = parse_number<std::uint64_t>(f[12], "kmp_shifts");
    row.seed = parse_number<std::uint64_t>(f[13], "seed");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace distq
