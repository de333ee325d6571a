#include <benchmark/benchmark.h>

#include <random>

#include "susyspec/gallery.hpp"

using namespace susyspec;

static void BM_SpanClosure(benchmark::State& state) {
  Tolerance tol;
  const Eigen::Index n = state.range(0);
  std::vector<Vector> cols;
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d(0.0, 1.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    Vector v(n * n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(d(rng), d(rng));
    cols.push_back(v);
  }
  for (auto _ : state) {
    auto s = span_closure(cols, n * n, tol);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SpanClosure)->Arg(8)->Arg(16)->Arg(32);

static void BM_TwoPointSetup(benchmark::State& state) {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  for (auto _ : state) {
    SpectralSetup s = make_gallery_setup(g, tol);
    benchmark::DoNotOptimize(s.ee.space.dim());
  }
}
BENCHMARK(BM_TwoPointSetup);

static void BM_ExtendTwoPoint(benchmark::State& state) {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  SpectralSetup s = make_gallery_setup(g, tol);
  Connection c = grassmann(s);
  for (auto _ : state) {
    PhiResult out = phi(s, c);
    benchmark::DoNotOptimize(out.report.passed());
  }
}
BENCHMARK(BM_ExtendTwoPoint);

static void BM_CheckMultPair(benchmark::State& state) {
  Tolerance tol;
  ExtensionPipeline p1 = make_gallery_pipeline("two-point", tol);
  ExtensionPipeline p2 = make_gallery_pipeline("two-point", tol);
  for (auto _ : state) {
    ProductPipeline pp = make_product_pipeline(p1, p2);
    auto res = check_multiplicativity(
        p1, p2, pp, {kAllVariants.begin(), kAllVariants.end()}, tol);
    benchmark::DoNotOptimize(res.verdicts.size());
  }
}
BENCHMARK(BM_CheckMultPair);

BENCHMARK_MAIN();
