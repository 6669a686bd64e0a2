#include <benchmark/benchmark.h>

#include "listec/bipartite.hpp"
#include "listec/catalogue.hpp"
#include "listec/generate.hpp"
#include "listec/oracle.hpp"
#include "listec/rng.hpp"
#include "listec/solver.hpp"

using namespace listec;

namespace {

void bm_solve_tw3(benchmark::State& state) {
    auto inst = generate_instance(InstanceKind::SubTw3, static_cast<int>(state.range(0)), 13);
    SolveRequest req{inst.graph, inst.lists, inst.regime, std::nullopt, 0};
    for (auto _ : state) benchmark::DoNotOptimize(solve(req).colouring);
    state.SetLabel(std::to_string(inst.graph.edge_count()) + " edges");
}
BENCHMARK(bm_solve_tw3)->Arg(20)->Arg(40)->Arg(80);

void bm_solve_pw4(benchmark::State& state) {
    auto inst = generate_instance(InstanceKind::Pw4ish, 20, 13);
    SolveRequest req{inst.graph, inst.lists, inst.regime, std::nullopt, 0};
    for (auto _ : state) benchmark::DoNotOptimize(solve(req).colouring);
}
BENCHMARK(bm_solve_pw4);

void bm_galvin_k33(benchmark::State& state) {
    std::vector<int> verts{1, 2, 3, 101, 102, 103};
    std::vector<Edge> edges;
    for (int v = 1; v <= 3; ++v)
        for (int w = 101; w <= 103; ++w) edges.emplace_back(v, w);
    Graph g(verts, edges);
    Bipartition b{{1, 2, 3}, {101, 102, 103}};
    Rng rng(7);
    ListAssignment l;
    for (const Edge& e : g.edges()) l[e] = rng.sample(3, 6);
    EdgeColouring ref = bipartite_delta_colouring(g);
    for (auto _ : state) benchmark::DoNotOptimize(galvin_colour(g, b, l, ref));
}
BENCHMARK(bm_galvin_k33);

void bm_oracle_catalogue_i(benchmark::State& state) {
    const Graph& g = catalogue_graph('i');
    ListAssignment l;
    for (const Edge& e : g.edges()) l[e] = iota_set(1, 6);
    for (auto _ : state) benchmark::DoNotOptimize(exists_colouring(g, l).colourable);
}
BENCHMARK(bm_oracle_catalogue_i);

void bm_decompose_pw(benchmark::State& state) {
    auto inst = generate_instance(InstanceKind::Pw4ish, 22, 5);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_pw(inst.graph, 4));
}
BENCHMARK(bm_decompose_pw);

}  // namespace

BENCHMARK_MAIN();
