#include <benchmark/benchmark.h>

#include "fanocascade/catalog.hpp"
#include "fanocascade/hilbert.hpp"
#include "fanocascade/mutation.hpp"
#include "fanocascade/polygon.hpp"
#include "fanocascade/roots.hpp"
#include "fanocascade/scaffolding.hpp"
#include "fanocascade/singularity.hpp"

namespace {

using namespace fano;

void BM_enumerate_roots(benchmark::State& state) {
    PolarizedLattice lat(10, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_roots(lat).size());
    }
}
BENCHMARK(BM_enumerate_roots)->Arg(10)->Arg(12)->Arg(14);

void BM_mutation_neighbors(benchmark::State& state) {
    LatticePolygon p =
        convex_hull({Vec(-1, 1), Vec(1, 1), Vec(5, -1), Vec(-5, -1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mutation_neighbors(p).size());
    }
}
BENCHMARK(BM_mutation_neighbors);

void BM_singularity_content(benchmark::State& state) {
    LatticePolygon p =
        convex_hull({Vec(-1, 1), Vec(1, 1), Vec(5, -1), Vec(-5, -1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(singularity_content(p).t_cone_count.get_si());
    }
}
BENCHMARK(BM_singularity_content);

void BM_cascade_series(benchmark::State& state) {
    HilbertFraction f = cascade_hilbert(12, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_expand(f, state.range(0)).size());
    }
}
BENCHMARK(BM_cascade_series)->Arg(50)->Arg(200);

void BM_normal_form(benchmark::State& state) {
    LatticePolygon p = *family_record("X:7:9").polygon;
    LatticePolygon skewed = apply_linear(p, Int(13), Int(8), Int(8), Int(5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(skewed).vertices.size());
    }
}
BENCHMARK(BM_normal_form);

void BM_laurent_invert(benchmark::State& state) {
    FamilyRecord rec = family_record("X:5:3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            laurent_invert(*rec.polygon, *rec.scaffolding).weights.size());
    }
}
BENCHMARK(BM_laurent_invert);

}  // namespace

BENCHMARK_MAIN();
