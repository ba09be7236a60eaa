#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "distq/bench.hpp"
#include "distq/corpus.hpp"
#include "distq/error.hpp"

namespace distq::cli {

namespace {

struct SearchArgs {
  std::optional<std::string> text;
  std::optional<std::string> text_file;
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
  std::string algo = "distq";
  int q = 3;
  bool zero_based = false;
  bool strip_newlines = false;
};

struct BenchArgs {
  std::optional<int> fib;
  std::optional<std::string> file;
  bool gen = false;
  std::size_t n = 4'000'000;
  int sigma = 4;
  std::vector<std::size_t> occ = {0};
  std::vector<std::string> algos = {"kmp", "hashq", "distq", "ldistq"};
  std::vector<int> qs = {3};
  std::vector<std::size_t> ms = {8};
  std::size_t patterns = 1;
  std::size_t reps = 25;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::optional<std::string> output;
  bool strip_newlines = false;
};

struct GenArgs {
  std::optional<int> fib;
  std::size_t n = 4'000'000;
  int sigma = 4;
  std::size_t m = 8;
  std::size_t occ = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> output;
  std::optional<std::string> pattern_output;
};

void write_file(const std::string& path, std::string_view data) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw IoError("cannot write " + path);
}

std::string resolve(const std::optional<std::string>& literal,
                    const std::optional<std::string>& path, bool strip_newlines,
                    const char* what) {
  if (literal) return *literal;
  if (path) return load_text(*path, strip_newlines);
  throw ConfigError(std::string("no ") + what + " given");
}

int run_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto text = resolve(a.text, a.text_file, a.strip_newlines, "text");
  const auto pattern = resolve(a.pattern, a.pattern_file, a.strip_newlines, "pattern");
  if (pattern.empty()) throw ConfigError("pattern must not be empty");
  const auto algo = parse_algorithm(a.algo);
  int q = a.q;
  if (uses_q(algo)) {
    q = clamp_q(a.q, pattern.size());
    if (q != a.q) err << "warning: q=" << a.q << " clamped to " << q << '\n';
  }
  const auto outcome = run_algorithm(algo, text, pattern, q);
  const std::int64_t shift = a.zero_based ? 1 : 0;
  for (auto p : outcome.occurrences) out << (p - shift) << '\n';
  return outcome.occurrences.empty() ? kExitNoMatch : kExitMatch;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchSpec spec;
  if (a.file) {
    spec.source = FileSource{*a.file, a.strip_newlines};
  } else if (a.gen) {
    spec.source = GeneratorSource{a.n, a.sigma, a.occ};
  } else {
    spec.source = FibonacciSource{a.fib.value_or(32)};
  }
  spec.algorithms.clear();
  for (const auto& name : a.algos) spec.algorithms.push_back(parse_algorithm(name));
  spec.qs = a.qs;
  spec.ms = a.ms;
  spec.patterns_per_length = a.patterns;
  spec.repetitions = a.reps;
  spec.trials = a.trials;
  spec.seed = a.seed;
  const auto format = parse_report_format(a.format);

  err << "bench: corpus PRNG " << kCorpusPrng << ", seed " << a.seed << '\n';
  const auto report = emit_report(run_benchmark(spec), format);
  if (a.output) {
    write_file(*a.output, report);
  } else {
    out << report;
  }
  return kExitMatch;
}

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::string text;
  std::string pattern;
  if (a.fib) {
    text = fibonacci_string(*a.fib);
  } else {
    auto corpus = random_text_with_occurrences(CorpusSpec{a.n, a.sigma, a.m, a.occ, a.seed});
    text = std::move(corpus.text);
    pattern = std::move(corpus.pattern);
  }
  if (a.output) {
    write_file(*a.output, text);
  } else {
    out << text;
  }
  if (a.pattern_output) {
    if (a.fib) throw ConfigError("--pattern-out needs a generated corpus, not --fib");
    write_file(*a.pattern_output, pattern);
  }
  err << "gen: " << text.size() << " bytes";
  if (!a.fib) err << ", pattern of length " << pattern.size() << " embedded " << a.occ << " times";
  err << " (" << kCorpusPrng << ", seed " << a.seed << ")\n";
  return kExitMatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact string matching with q-gram distance shifts", "distq"};
  app.require_subcommand(1);

  SearchArgs s;
  auto* search = app.add_subcommand("search", "Print every occurrence of a pattern in a text");
  auto* text_opt = search->add_option("--text", s.text, "Text given inline");
  search->add_option("--text-file", s.text_file, "Read the text from a file")->excludes(text_opt);
  auto* pat_opt = search->add_option("--pattern", s.pattern, "Pattern given inline");
  search->add_option("--pattern-file", s.pattern_file, "Read the pattern from a file")
      ->excludes(pat_opt);
  search->add_option("-a,--algo", s.algo, "naive, kmp, hashq, distq or ldistq")
      ->capture_default_str();
  search->add_option("-q", s.q, "q-gram length, clamped to min(q, m, 8)")->capture_default_str();
  search->add_flag("--zero-based", s.zero_based, "Print 0-based positions");
  search->add_flag("--strip-newlines", s.strip_newlines, "Drop '\\n' bytes from input files");

  BenchArgs b;
  auto* bench = app.add_subcommand("bench", "Time matchers on a corpus and emit a report");
  auto* fib_opt = bench->add_option("--fib", b.fib, "Fibonacci string index (default source, k=32)");
  auto* file_opt = bench->add_option("--file", b.file, "Text file corpus")->excludes(fib_opt);
  bench->add_flag("--gen", b.gen, "Generated corpora with embedded occurrences")
      ->excludes(fib_opt)
      ->excludes(file_opt);
  bench->add_option("--n", b.n, "Generated text length")->capture_default_str();
  bench->add_option("--sigma", b.sigma, "Generated alphabet size")->capture_default_str();
  bench->add_option("--occ", b.occ, "Embedded occurrence counts")->delimiter(',');
  bench->add_option("-a,--algos", b.algos, "Algorithms")->delimiter(',');
  bench->add_option("-q", b.qs, "q values")->delimiter(',');
  bench->add_option("-m", b.ms, "Pattern lengths")->delimiter(',');
  bench->add_option("--patterns", b.patterns, "Sampled patterns per length")->capture_default_str();
  bench->add_option("--reps", b.reps, "Runs per measurement")->capture_default_str();
  bench->add_option("--trials", b.trials, "Measurements; the fastest is kept")->capture_default_str();
  bench->add_option("--seed", b.seed, "Seed")->capture_default_str();
  bench->add_option("--format", b.format, "csv or markdown")->capture_default_str();
  bench->add_option("-o,--output", b.output, "Write the report to a file");
  bench->add_flag("--strip-newlines", b.strip_newlines, "Drop '\\n' bytes from the corpus file");

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "Write a generated corpus to a file");
  gen->add_option("--fib", g.fib, "Emit the Fibonacci string Fib_k instead");
  gen->add_option("--n", g.n, "Text length")->capture_default_str();
  gen->add_option("--sigma", g.sigma, "Alphabet size")->capture_default_str();
  gen->add_option("-m", g.m, "Pattern length")->capture_default_str();
  gen->add_option("--occ", g.occ, "Embedded occurrences")->capture_default_str();
  gen->add_option("--seed", g.seed, "Seed")->capture_default_str();
  gen->add_option("-o,--output", g.output, "Text output file (default stdout)");
  gen->add_option("--pattern-out", g.pattern_output, "Pattern output file");

  std::vector<const char*> argv{"distq"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitMatch : kExitError;
  }

  try {
    if (search->parsed()) return run_search(s, out, err);
    if (bench->parsed()) return run_bench(b, out, err);
    return run_gen(g, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace distq::cli
