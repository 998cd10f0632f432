#include <benchmark/benchmark.h>

#include <vector>

#include "gds/charts.hpp"
#include "gds/corpus.hpp"
#include "gds/derivations.hpp"
#include "gds/presentation.hpp"
#include "gds/transform.hpp"

namespace {

std::vector<gds::WeightedTree> weighted_trees(std::size_t n) {
  gds::TreeGenerator gen(2025);
  std::vector<gds::WeightedTree> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.weighted());
  return out;
}

void BM_PolyMultiply(benchmark::State& state) {
  const gds::Poly x = gds::Poly::var(gds::VarId::x0());
  const gds::Poly h = gds::Poly::var(gds::VarId::h());
  const gds::Poly t = gds::Poly::var(gds::VarId::t());
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const gds::Poly a = gds::pow(x + h * gds::Rat(3, 2) + t - 1, k);
  const gds::Poly b = gds::pow(x - h + t * gds::Rat(-1, 3) + 2, k);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_Presentation(benchmark::State& state) {
  gds::TreeGenerator gen(2024);
  std::vector<gds::LabelledTree> trees;
  for (int i = 0; i < 32; ++i) trees.push_back(gen.labelled());
  for (auto _ : state) {
    for (const auto& lt : trees) benchmark::DoNotOptimize(gds::build_presentation(lt));
  }
}
BENCHMARK(BM_Presentation)->Unit(benchmark::kMillisecond);

void BM_WeightedToLabelled(benchmark::State& state) {
  const auto trees = weighted_trees(16);
  for (auto _ : state) {
    for (const auto& wt : trees) benchmark::DoNotOptimize(gds::weighted_to_labelled(wt));
  }
}
BENCHMARK(BM_WeightedToLabelled)->Unit(benchmark::kMillisecond);

void BM_Embedding(benchmark::State& state) {
  std::vector<std::pair<gds::Presentation, std::vector<gds::ChartExpansion>>> cases;
  for (const auto& wt : weighted_trees(16)) {
    auto conv = gds::weighted_to_labelled(wt);
    cases.emplace_back(gds::build_presentation(conv.lt), std::move(conv.charts));
  }
  for (auto _ : state) {
    for (const auto& [p, charts] : cases) benchmark::DoNotOptimize(gds::verify_embedding(p, charts));
  }
}
BENCHMARK(BM_Embedding)->Unit(benchmark::kMillisecond);

void BM_DerivationSuite(benchmark::State& state) {
  gds::TreeGenerator gen(2024);
  std::vector<std::pair<gds::Presentation, std::vector<gds::FiberComponent>>> cases;
  for (int i = 0; i < 16; ++i) {
    auto p = gds::build_presentation(gen.labelled());
    auto comps = gds::fiber_components(p);
    cases.emplace_back(std::move(p), std::move(comps));
  }
  for (auto _ : state) {
    for (const auto& [p, comps] : cases) {
      const auto d = gds::build_derivation(p.lt, p.tree().height() + static_cast<int>(state.range(0)));
      benchmark::DoNotOptimize(gds::derivation_suite(d, p, comps));
    }
  }
}
BENCHMARK(BM_DerivationSuite)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
