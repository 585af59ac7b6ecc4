// Microbenchmarks for the hot paths: basis evaluation, feature ranking,
// classification and the exact signed-rank test.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "femafs/basis.hpp"
#include "femafs/baselines.hpp"
#include "femafs/fema.hpp"
#include "femafs/feature_selection.hpp"
#include "femafs/wilcoxon.hpp"

using namespace femafs;

namespace {

LabeledDataset make_data(std::size_t m, std::size_t n, int c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  LabeledDataset data;
  data.features = Matrix(m, n);
  data.labels.resize(m);
  data.class_count = c;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) data.features(i, j) = uniform();
    data.labels[i] = static_cast<int>(i % static_cast<std::size_t>(c)) + 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    data.feature_names.push_back("f" + std::to_string(j));
  }
  return data;
}

std::vector<double> make_query(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> q(n);
  for (double& v : q) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return q;
}

void BM_ShepardBasis(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const LabeledDataset data = make_data(m, 20, 2, 1);
  const std::vector<double> query = make_query(20, 2);
  const SmoothnessParam k(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shepard_basis(query, data, k));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_ShepardBasis)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FemaPredict(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const FemaModel model = fema_train(make_data(m, 20, 3, 3), SmoothnessParam(2.0));
  const std::vector<double> query = make_query(20, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.predict(query));
  }
}
BENCHMARK(BM_FemaPredict)->Arg(100)->Arg(1000);

void BM_KnnPredict(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const LabeledDataset data = make_data(m, 20, 2, 5);
  const std::vector<double> query = make_query(20, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(knn_predict(data, query, 1));
  }
}
BENCHMARK(BM_KnnPredict)->Arg(100)->Arg(1000);

void BM_RankFeatures(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LabeledDataset data = make_data(200, n, 2, 7);
  const SamplingGrid grid = build_grid(101);
  const SmoothnessParam k(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_features(data, grid, k));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RankFeatures)->Arg(10)->Arg(40);

void BM_WilcoxonExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> a(n);
  std::vector<double> b(n);
  std::mt19937_64 rng(8);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    b[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilcoxon_signed_rank(a, b, 0.05));
  }
}
BENCHMARK(BM_WilcoxonExact)->Arg(10)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
