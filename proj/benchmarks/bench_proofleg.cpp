#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "proofleg/apg.hpp"
#include "proofleg/enumerate.hpp"
#include "proofleg/metrics.hpp"
#include "proofleg/mil5.hpp"
#include "proofleg/mizar_lite.hpp"
#include "proofleg/reductions.hpp"
#include "proofleg/script.hpp"
#include "proofleg/solver.hpp"

using namespace proofleg;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(PROOFLEG_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const ProofGraph& seventeen_steps() {
    static const ProofGraph g = parse_apg_file(std::string(PROOFLEG_DATA_DIR) + "/fig6.apg");
    return g;
}

const TopoOrder& showcase_order() {
    static const TopoOrder t = TopoOrder::of(
        seventeen_steps(), {1, 3, 5, 7, 9, 11, 13, 6, 2, 10, 15, 4, 8, 12, 14, 16, 17});
    return t;
}

const ProofGraph& partition_instance() {
    static const ProofGraph g = [] {
        const Digraph two = build_digraph(2, {{1, 2}, {2, 1}});
        return fas_to_ahp(two).dag;
    }();
    return g;
}

} // namespace

static void BM_CountOrders(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    for (auto _ : state)
        benchmark::DoNotOptimize(count_topo_orders(g, std::nullopt, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountOrders)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Metrics(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    const TopoOrder& t = showcase_order();
    for (auto _ : state) benchmark::DoNotOptimize(compute_metrics(g, t));
}
BENCHMARK(BM_Metrics);

static void BM_SolveExhaustive(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exact(g, Criterion::ThenPaths, SolveMode::Exhaustive));
}
BENCHMARK(BM_SolveExhaustive)->Unit(benchmark::kMillisecond);

static void BM_SolveBranchAndBound(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    const Criterion c = static_cast<Criterion>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exact(g, c, SolveMode::BranchAndBound));
}
BENCHMARK(BM_SolveBranchAndBound)
    ->DenseRange(0, 5)
    ->Unit(benchmark::kMicrosecond);

static void BM_SolveAhp(benchmark::State& state) {
    const ProofGraph& g = partition_instance();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_ahp(g, SolveMode::BranchAndBound));
}
BENCHMARK(BM_SolveAhp)->Unit(benchmark::kMillisecond);

static void BM_Mil5Polynomial(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    for (auto _ : state) benchmark::DoNotOptimize(mil5_miz_polynomial(g));
}
BENCHMARK(BM_Mil5Polynomial);

static void BM_ParseApg(benchmark::State& state) {
    const std::string text = slurp("fig6.apg");
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(parse_apg(in));
    }
}
BENCHMARK(BM_ParseApg);

static void BM_ParseScript(benchmark::State& state) {
    const std::string text = slurp("fig5.miz");
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(parse_mizar_lite(in));
    }
}
BENCHMARK(BM_ParseScript);

static void BM_RenderScript(benchmark::State& state) {
    const ProofGraph& g = seventeen_steps();
    const Script s = generate_script(g, showcase_order());
    for (auto _ : state)
        benchmark::DoNotOptimize(render_script(s, ScriptStyle::Legible, LabelRule::Miz));
}
BENCHMARK(BM_RenderScript);

BENCHMARK_MAIN();
