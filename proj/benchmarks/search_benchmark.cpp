#include <benchmark/benchmark.h>

#include <string>

#include "distq/bench.hpp"
#include "distq/corpus.hpp"
#include "distq/matchers.hpp"
#include "distq/preprocess.hpp"

namespace {

using distq::Algorithm;

const std::string& fibonacci_text() {
  static const std::string text = distq::fibonacci_string(28);
  return text;
}

const distq::GeneratedCorpus& dna_corpus(std::size_t occ) {
  static const distq::GeneratedCorpus corpora[] = {
      distq::random_text_with_occurrences({1'000'000, 4, 16, 0, 11}),
      distq::random_text_with_occurrences({1'000'000, 4, 16, 8192, 11}),
  };
  return corpora[occ == 0 ? 0 : 1];
}

// Args: algorithm, q.
void BM_Fibonacci(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const auto& text = fibonacci_text();
  const std::string pattern = text.substr(1000, 32);
  std::size_t found = 0;
  for (auto _ : state) {
    const auto out = distq::run_algorithm(algo, text, pattern, q);
    found = out.occurrences.size();
    benchmark::DoNotOptimize(found);
  }
  state.SetLabel(std::string(distq::to_string(algo)));
  state.counters["occ"] = static_cast<double>(found);
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

// Args: algorithm, occ (0 or 8192).
void BM_Generated(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const auto& corpus = dna_corpus(static_cast<std::size_t>(state.range(1)));
  std::size_t found = 0;
  for (auto _ : state) {
    const auto out = distq::run_algorithm(algo, corpus.text, corpus.pattern, 4);
    found = out.occurrences.size();
    benchmark::DoNotOptimize(found);
  }
  state.SetLabel(std::string(distq::to_string(algo)));
  state.counters["occ"] = static_cast<double>(found);
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * corpus.text.size()));
}

void BM_Preprocess(benchmark::State& state) {
  const std::string pattern = fibonacci_text().substr(0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto profile = distq::build_profile(pattern, 4);
    benchmark::DoNotOptimize(profile);
  }
}

void all_algorithms(benchmark::internal::Benchmark* b, std::initializer_list<std::int64_t> second) {
  for (auto algo : {Algorithm::kNaive, Algorithm::kKmp, Algorithm::kHashq, Algorithm::kDistq,
                    Algorithm::kLdistq}) {
    for (auto v : second) b->Args({static_cast<std::int64_t>(algo), v});
  }
}

BENCHMARK(BM_Fibonacci)->Apply([](auto* b) { all_algorithms(b, {2, 4, 8}); })
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generated)->Apply([](auto* b) { all_algorithms(b, {0, 8192}); })
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Preprocess)->Arg(8)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
