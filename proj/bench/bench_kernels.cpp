#include <benchmark/benchmark.h>

#include <random>

#include "preprompt/data_io.hpp"
#include "preprompt/kernels.hpp"
#include "preprompt/vit.hpp"

using namespace preprompt;

namespace {

Matrix random(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  Matrix m(r, c);
  for (double& v : m.values()) v = d(rng);
  return m;
}

void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random(n, n, 1), b = random(n, n, 2);
  Matrix c(n, n);
  for (auto _ : state) {
    kernels::matmul(a, b, c);
    benchmark::DoNotOptimize(c.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

void BM_MatmulReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random(n, n, 1), b = random(n, n, 2);
  Matrix c(n, n);
  for (auto _ : state) {
    kernels::reference::matmul(a, b, c);
    benchmark::DoNotOptimize(c.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

void BM_MatmulNt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random(n, n, 1), b = random(n, n, 2);
  Matrix c(n, n);
  for (auto _ : state) {
    kernels::matmul_nt(a, b, c);
    benchmark::DoNotOptimize(c.values().data());
  }
}

void BM_MatmulNtReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random(n, n, 1), b = random(n, n, 2);
  Matrix c(n, n);
  for (auto _ : state) {
    kernels::reference::matmul_nt(a, b, c);
    benchmark::DoNotOptimize(c.values().data());
  }
}

struct FeatureFixture {
  BackboneParams params;
  LabeledImageSet images;

  FeatureFixture() {
    BackboneConfig c;
    c.image_height = c.image_width = 28;
    c.patch_size = 7;
    c.embed_dim = 64;
    c.heads = 4;
    c.depth = 6;
    params = BackboneParams::init(c, 1);
    SyntheticSpec s;
    s.classes = 4;
    s.per_class = 8;
    images = gen_synthetic(s);
  }
};

void BM_ExtractFeatures(benchmark::State& state) {
  static const FeatureFixture f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_features(f.images.images, f.images.count(), f.params));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.images.count()));
}

void BM_ExtractFeaturesReference(benchmark::State& state) {
  static const FeatureFixture f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::extract_features(f.images.images, f.images.count(), f.params));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.images.count()));
}

}  // namespace

BENCHMARK(BM_Matmul)->Arg(17)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulReference)->Arg(17)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulNt)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulNtReference)->Arg(64)->Arg(256);
BENCHMARK(BM_ExtractFeatures)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractFeaturesReference)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
