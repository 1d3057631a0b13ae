// Microbenchmarks for the maintenance hot paths: batched level-structure
// updates, orientation upkeep, and the two static decompositions.

#include <benchmark/benchmark.h>

#include "bdg/framework.hpp"
#include "bdg/graph.hpp"
#include "bdg/plds.hpp"
#include "bdg/static_kcore.hpp"

using namespace bdg;

namespace {

Graph bench_graph(std::size_t n) { return random_graph(n, 8.0 / double(n), 1); }

void BM_PldsInsertBatches(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Graph base = bench_graph(n);
  Workload w = generate_batches(base, WorkloadMode::kInsert, 512, 1);
  for (auto _ : state) {
    PldsParams p;
    p.capacity_n = n;
    Plds plds(p);
    Graph g(n);
    for (const auto& ops : w.batches) {
      UpdateBatch b = preprocess_batch(g, ops);
      plds.update(b);
      g.apply(b);
    }
    benchmark::DoNotOptimize(plds.size());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(base.num_edges()));
}
BENCHMARK(BM_PldsInsertBatches)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_PldsDeleteBatches(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Graph base = bench_graph(n);
  Workload w = generate_batches(base, WorkloadMode::kDelete, 512, 1);
  for (auto _ : state) {
    state.PauseTiming();
    PldsParams p;
    p.capacity_n = n;
    Plds plds(p);
    Graph g(n);
    UpdateBatch prime = preprocess_batch(g, [&] {
      std::vector<RawOp> ops;
      for (const Edge& e : w.start.edges()) ops.push_back({true, e.u, e.v});
      return ops;
    }());
    plds.update(prime);
    g.apply(prime);
    state.ResumeTiming();
    for (const auto& ops : w.batches) {
      UpdateBatch b = preprocess_batch(g, ops);
      plds.update(b);
      g.apply(b);
    }
    benchmark::DoNotOptimize(plds.size());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(base.num_edges()));
}
BENCHMARK(BM_PldsDeleteBatches)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_PipelineWithOrientation(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Graph base = bench_graph(n);
  Workload w = generate_batches(base, WorkloadMode::kInsert, 512, 1);
  for (auto _ : state) {
    PldsParams p;
    p.capacity_n = n;
    Framework fw(p);
    for (const auto& ops : w.batches) fw.apply(ops);
    benchmark::DoNotOptimize(fw.orientation().num_edges());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(base.num_edges()));
}
BENCHMARK(BM_PipelineWithOrientation)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_StaticApprox(benchmark::State& state) {
  Graph g = bench_graph(std::size_t(state.range(0)));
  for (auto _ : state) {
    std::vector<double> est = approx_kcore_static(g, 1.0);
    benchmark::DoNotOptimize(est.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(g.num_edges()));
}
BENCHMARK(BM_StaticApprox)->Arg(1000)->Arg(4000)->Arg(16000)->Arg(64000);

void BM_StaticExact(benchmark::State& state) {
  Graph g = bench_graph(std::size_t(state.range(0)));
  for (auto _ : state) {
    std::vector<uint32_t> core = exact_kcore(g);
    benchmark::DoNotOptimize(core.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(g.num_edges()));
}
BENCHMARK(BM_StaticExact)->Arg(1000)->Arg(4000)->Arg(16000)->Arg(64000);

}  // namespace

BENCHMARK_MAIN();
