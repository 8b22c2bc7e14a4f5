#include <benchmark/benchmark.h>

#include "locale_lab/audit.hpp"
#include "locale_lab/canonical.hpp"
#include "locale_lab/corpus.hpp"
#include "locale_lab/separation.hpp"
#include "locale_lab/tensor.hpp"

using namespace locale_lab;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const auto c = build_corpus();
  return c;
}

// Largest corpus frame with exactly n elements.
const Frame& corpus_frame(std::size_t n) {
  for (auto it = corpus().rbegin(); it != corpus().rend(); ++it)
    if (it->frame.size() == n) return it->frame;
  return corpus().back().frame;
}

void BM_ValidateChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<OrderPair> rel;
  for (Elem i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
  for (auto _ : state) benchmark::DoNotOptimize(validate_frame(n, rel));
}
BENCHMARK(BM_ValidateChain)->Arg(32)->Arg(128)->Arg(512);

void BM_DownsetFrame(benchmark::State& state) {
  auto P = antichain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(downset_frame(P));
}
BENCHMARK(BM_DownsetFrame)->Arg(4)->Arg(6)->Arg(8);

void BM_SelfTensor(benchmark::State& state) {
  const Frame& L = corpus_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(TensorFrame::build(L, L));
  state.counters["elements"] = static_cast<double>(TensorFrame::build(L, L).size());
}
BENCHMARK(BM_SelfTensor)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Frame& L = corpus_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(L));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildCorpus(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_corpus(k));
}
BENCHMARK(BM_BuildCorpus)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FirstOrderAxioms(benchmark::State& state) {
  const Frame& L = corpus_frame(static_cast<std::size_t>(state.range(0)));
  std::vector<std::string> sel{"regular", "fit", "subfit", "weakly_subfit", "prefit", "T1", "pt_fit", "H", "F"};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_axioms(L, "bench", sel, {}));
}
BENCHMARK(BM_FirstOrderAxioms)->Arg(8)->Arg(16)->Arg(32);

void BM_DiagonalAxioms(benchmark::State& state) {
  const Frame& L = corpus_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto dd = diagonal_data(L);
    benchmark::DoNotOptimize(check_strongly_hausdorff(*dd));
    benchmark::DoNotOptimize(check_F_separated(*dd));
  }
}
BENCHMARK(BM_DiagonalAxioms)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
  AuditOptions o;
  o.max_poset = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_audit(o, default_expectations()));
}
BENCHMARK(BM_Audit)->Arg(4)->Arg(5)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
