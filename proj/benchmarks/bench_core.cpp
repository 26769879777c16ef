#include <benchmark/benchmark.h>

#include "honkit/honkit.hpp"

namespace {

const honkit::PathCorpus& planted_corpus() {
  static const auto corpus =
      honkit::generate_corpus(honkit::random_planted_chain(40, 2, 3, 0.9, 1), 20000, 8, 15, 2);
  return corpus;
}

void BM_BuildHon(benchmark::State& state) {
  const auto& corpus = planted_corpus();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(honkit::build_hon(corpus, k));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.transition_count()));
}
BENCHMARK(BM_BuildHon)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PageRank(benchmark::State& state) {
  const auto hon = honkit::build_hon(planted_corpus(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(honkit::hon_pagerank(hon));
  state.counters["nodes"] = static_cast<double>(hon.node_count());
}
BENCHMARK(BM_PageRank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StructuralReport(benchmark::State& state) {
  const auto hon = honkit::build_hon(planted_corpus(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(honkit::structural_report(hon));
  state.counters["nodes"] = static_cast<double>(hon.node_count());
}
BENCHMARK(BM_StructuralReport)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LogLikelihoods(benchmark::State& state) {
  const auto& corpus = planted_corpus();
  const auto model = honkit::build_multi_order(corpus, 4);
  for (auto _ : state) benchmark::DoNotOptimize(honkit::log_likelihoods(model, corpus, 4));
}
BENCHMARK(BM_LogLikelihoods)->Unit(benchmark::kMillisecond);

void BM_KendallTau(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>((i * 7919) % 1000);
    y[i] = static_cast<double>((i * 104729) % 977);
  }
  for (auto _ : state) benchmark::DoNotOptimize(honkit::kendall_tau_b(x, y));
}
BENCHMARK(BM_KendallTau)->Range(1 << 10, 1 << 18);

}  // namespace
BENCHMARK_MAIN();
