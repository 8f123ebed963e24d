#include <benchmark/benchmark.h>

#include "semifree/golden.hpp"
#include "semifree/momentdata.hpp"

using namespace semifree;

namespace {

const LabeledTable& labeled() {
    static const LabeledTable t = classify_all(std::string(SEMIFREE_GOLDEN_DIR) + "/paper_tables.json");
    return t;
}

void BM_EnumerateCase(benchmark::State& state) {
    const char* specs[] = {"(0,0,{-3,0,3})", "(0,2,{-3,-1,0,1,2})", "(2,2,{-2,-1,0,1,2})", "(4,4,{-1,0,1})"};
    auto spec = CaseSpec::parse(specs[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_case(spec));
    state.SetLabel(spec.str());
}
BENCHMARK(BM_EnumerateCase)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AllTables(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(all_tables());
}
BENCHMARK(BM_AllTables)->Unit(benchmark::kMillisecond);

void BM_BuildTfd(benchmark::State& state) {
    const auto& rows = labeled().rows;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tfd(rows[i].params));
        i = (i + 1) % rows.size();
    }
}
BENCHMARK(BM_BuildTfd);

void BM_Localize(benchmark::State& state) {
    const auto& rows = labeled().rows;
    std::vector<std::vector<FixedComponentLocal>> local;
    for (const auto& t : rows) local.push_back(t.local_data());
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(local[i], 3));
        i = (i + 1) % local.size();
    }
}
BENCHMARK(BM_Localize);

void BM_ExceptionalX8(benchmark::State& state) {
    for (auto _ : state) {
        // a fresh lattice value each time still hits the cache; this measures lookup plus copy
        auto v = exceptional_classes(SurfaceLattice::projective_plane(8));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ExceptionalX8);

void BM_VerifyExample(benchmark::State& state) {
    auto ex = load_moment_example(std::string(SEMIFREE_MOMENT_DATA_DIR) + "/p3_xi111.json");
    const auto& rows = labeled().rows;
    for (auto _ : state) benchmark::DoNotOptimize(verify_example(ex, rows));
}
BENCHMARK(BM_VerifyExample);

void BM_ChernVolume(benchmark::State& state) {
    auto v7 = DelzantPolytope::from_vertices(3, {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 2}, {2, 0, 2}, {0, 2, 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(chern_number_cubed(v7));
        benchmark::DoNotOptimize(chern_number_cubed_localized(v7));
    }
}
BENCHMARK(BM_ChernVolume);

} // namespace

BENCHMARK_MAIN();
